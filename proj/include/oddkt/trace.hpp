#pragma once

#include <ostream>
#include <sstream>
#include <string>

namespace oddkt {

// Optional structured-text trace sink for the constructive algorithms.
struct Trace {
  std::ostream* out = nullptr;
  void line(const std::string& s) {
    if (out) (*out) << s << '\n';
  }
};

}  // namespace oddkt
