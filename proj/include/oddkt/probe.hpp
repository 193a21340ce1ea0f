#pragma once

#include <atomic>
#include <thread>

#include "oddkt/generate.hpp"
#include "oddkt/oracle.hpp"

namespace oddkt {

struct ProbeConfig {
  int k = 2;
  int n_max = 8;
  int colors = 0;       // 0 means k+2
  bool exhaustive = true;
  int trials = 100;     // per order, when sampling
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> node_budget;
  int jobs = 1;
};

struct ProbeHit {
  int n = 0;
  std::uint64_t seed = 0;      // generation seed (sampled mode)
  std::size_t index = 0;       // enumeration index (exhaustive mode)
  OracleStatus status = OracleStatus::Infeasible;
  std::string graph_text;      // reproduction certificate
  std::string canonical;
};

struct ProbeRow {
  int n = 0;
  long long graphs = 0, feasible = 0, infeasible = 0, budget = 0;
};

struct ProbeReport {
  ProbeConfig cfg;
  int colors = 0;
  std::vector<ProbeRow> rows;
  std::vector<ProbeHit> infeasible;       // counterexample candidates
  std::vector<ProbeHit> budget_exceeded;  // undecided instances
  bool clean() const { return infeasible.empty() && budget_exceeded.empty(); }
};

namespace detail {

inline std::string canon_string(const Graph& g) {
  if (g.n > 24) return "-";
  std::ostringstream os;
  for (std::uint32_t w : canonical_form(g)) os << w << ".";
  return os.str();
}

}  // namespace detail

// Feasibility sweep at k+2 colors over k-trees up to n_max vertices. Reports
// any infeasible instance with a reproduction certificate; never asserts the
// positive direction.
inline ProbeReport probe_conjecture(const ProbeConfig& cfg) {
  ProbeReport rep;
  rep.cfg = cfg;
  rep.colors = cfg.colors > 0 ? cfg.colors : cfg.k + 2;
  for (int n = cfg.k + 1; n <= cfg.n_max; ++n) {
    std::vector<Graph> batch;
    std::vector<std::uint64_t> seeds;
    if (cfg.exhaustive) {
      batch = enumerate_small_ktrees(n, cfg.k);
      seeds.assign(batch.size(), 0);
    } else {
      for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t s = cfg.seed + 1315423911ull * (static_cast<std::uint64_t>(n) << 16 | t);
        GenSpec gs{n, cfg.k, s, 0.5};
        batch.push_back(random_ktree(gs).first);
        seeds.push_back(s);
      }
    }
    std::vector<OracleStatus> status(batch.size());
    SearchConfig scfg;
    scfg.node_budget = cfg.node_budget;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= batch.size()) return;
        status[i] = exists_odd_coloring(batch[i], rep.colors, scfg).status;
      }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    ProbeRow row;
    row.n = n;
    row.graphs = static_cast<long long>(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (status[i] == OracleStatus::Feasible) {
        ++row.feasible;
        continue;
      }
      ProbeHit hit;
      hit.n = n;
      hit.index = i;
      hit.seed = seeds[i];
      hit.status = status[i];
      hit.graph_text = graph_to_string(batch[i]);
      hit.canonical = detail::canon_string(batch[i]);
      if (status[i] == OracleStatus::Infeasible) {
        ++row.infeasible;
        rep.infeasible.push_back(std::move(hit));
      } else {
        ++row.budget;
        rep.budget_exceeded.push_back(std::move(hit));
      }
    }
    rep.rows.push_back(row);
  }
  return rep;
}

inline void format_probe_report(std::ostream& out, const ProbeReport& rep) {
  out << "probe k=" << rep.cfg.k << " colors=" << rep.colors << " n_max=" << rep.cfg.n_max
      << " mode=" << (rep.cfg.exhaustive ? "exhaustive" : "sampled");
  if (!rep.cfg.exhaustive) out << " trials=" << rep.cfg.trials << " seed=" << rep.cfg.seed;
  out << '\n';
  long long graphs = 0;
  for (const auto& row : rep.rows) {
    graphs += row.graphs;
    out << "n=" << row.n << " graphs=" << row.graphs << " feasible=" << row.feasible
        << " infeasible=" << row.infeasible << " budget=" << row.budget << '\n';
  }
  for (const auto& hit : rep.infeasible) {
    out << "counterexample n=" << hit.n << " index=" << hit.index << " seed=" << hit.seed
        << " canonical=" << hit.canonical << '\n';
    out << hit.graph_text;
  }
  for (const auto& hit : rep.budget_exceeded)
    out << "undecided n=" << hit.n << " index=" << hit.index << " seed=" << hit.seed << '\n';
  out << "total graphs=" << graphs << " infeasible=" << rep.infeasible.size()
      << " budget_exceeded=" << rep.budget_exceeded.size() << '\n';
}

}  // namespace oddkt
