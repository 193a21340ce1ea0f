// Command-line front end: recognition, good orderings, odd colorings with the
// per-k routing, verification, the exact oracle, generators, the conjecture
// probe, and a small benchmark table.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "oddkt/generate.hpp"
#include "oddkt/k_tree_color.hpp"
#include "oddkt/oracle.hpp"
#include "oddkt/probe.hpp"
#include "oddkt/three_tree.hpp"
#include "oddkt/two_tree.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

oddkt::Graph load_graph(const std::string& path) {
  if (path == "-") return oddkt::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw oddkt::ParseError("cannot open graph file: " + path);
  return oddkt::parse_graph(in);
}

oddkt::Coloring load_coloring(const std::string& path) {
  if (path == "-") return oddkt::parse_coloring(std::cin);
  std::ifstream in(path);
  if (!in) throw oddkt::ParseError("cannot open coloring file: " + path);
  return oddkt::parse_coloring(in);
}

struct OutputSink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw oddkt::ParseError("cannot open output file: " + path);
    os = &file;
  }
};

int detect_or_check_k(const oddkt::Graph& g, int k_flag) {
  if (k_flag > 0) return k_flag;
  auto k = oddkt::detect_ktree_k(g);
  if (!k) throw oddkt::NotKTree("input is not a k-tree for any k");
  return *k;
}

int oracle_budget_small_k(int k) {
  oddkt::ColorBudget b = oddkt::make_budget(k);
  return std::min(2 * k + 1, b.palette);
}

// The per-k routing: dedicated constructions for k in {2,3} and k >= 7, exact
// search with the guaranteed budget otherwise.
oddkt::Coloring color_route(const oddkt::Graph& g, int k, oddkt::Trace* tr) {
  if (k == 2) return oddkt::color_2tree(g, tr);
  if (k == 3) return oddkt::color_3tree(g, tr);
  if (k >= 7) {
    if (oddkt::make_budget(k).palette > 64)
      throw oddkt::BuildError("palette exceeds 64 colors; k this large is out of scope");
    return oddkt::color_ktree(g, k, tr);
  }
  oddkt::recognize_ktree(g, k);
  int budget = oracle_budget_small_k(k);
  auto res = oddkt::exists_odd_coloring(g, budget);
  if (res.status != oddkt::OracleStatus::Feasible)
    throw oddkt::InvariantViolation("exact search missed the guaranteed budget of " +
                                    std::to_string(budget) + " colors");
  return *res.witness;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd colorings of k-trees: constructions, verifier, and exact oracle"};
  app.require_subcommand(1);

  std::string input = "-", output, coloring_path, cert_path, trace_path;
  int k_flag = 0;
  bool trace_flag = false;

  auto add_io = [&](CLI::App* cmd, bool with_k) {
    cmd->add_option("input", input, "graph file, or - for stdin");
    cmd->add_option("-o,--output", output, "output file (default stdout)");
    if (with_k) cmd->add_option("-k,--k", k_flag, "clique parameter k");
  };

  auto* recognize = app.add_subcommand("recognize", "check the k-tree property, print a certificate");
  add_io(recognize, true);

  auto* order = app.add_subcommand("order", "print an addition ordering whose first vertex has degree k");
  add_io(order, true);

  auto* color = app.add_subcommand("color", "construct an odd coloring (routes by k)");
  add_io(color, true);
  color->add_flag("--trace", trace_flag, "write a reduction trace to stderr");
  color->add_option("--trace-file", trace_path, "write the reduction trace to a file");

  auto* verify = app.add_subcommand("verify", "check a (graph, coloring) pair");
  add_io(verify, false);
  verify->add_option("-c,--coloring", coloring_path, "coloring file")->required();

  int max_colors = 0;
  std::uint64_t node_budget = 0;
  auto* oracle = app.add_subcommand("oracle", "exact odd-coloring search");
  add_io(oracle, false);
  oracle->add_option("--max-colors", max_colors, "test feasibility at this palette");
  oracle->add_option("--node-budget", node_budget, "cap on search nodes (0 = unlimited)");

  int gen_n = 0, gen_k = 2;
  std::uint64_t seed = 1;
  double bias = 0.5;
  auto* rnd = app.add_subcommand("random", "generate a random k-tree");
  rnd->add_option("-o,--output", output, "output file (default stdout)");
  rnd->add_option("-n,--n", gen_n, "vertex count")->required();
  rnd->add_option("-k,--k", gen_k, "clique parameter k")->required();
  rnd->add_option("--seed", seed, "random seed");
  rnd->add_option("--bias", bias, "attachment bias in [0,1], 0.5 = uniform");
  rnd->add_option("--cert", cert_path, "also write the addition ordering here");

  auto* enumerate = app.add_subcommand("enumerate", "all k-trees on n vertices up to isomorphism");
  enumerate->add_option("-o,--output", output, "output file (default stdout)");
  enumerate->add_option("-n,--n", gen_n, "vertex count")->required();
  enumerate->add_option("-k,--k", gen_k, "clique parameter k")->required();

  int probe_nmax = 8, probe_trials = 100, jobs = 1, probe_colors = 0;
  bool probe_sampled = false;
  auto* probe = app.add_subcommand("probe", "feasibility sweep at k+2 colors");
  probe->add_option("-o,--output", output, "output file (default stdout)");
  probe->add_option("-k,--k", gen_k, "clique parameter k")->required();
  probe->add_option("--n-max", probe_nmax, "largest order to test");
  probe->add_option("--colors", probe_colors, "override the k+2 palette");
  probe->add_flag("--sampled", probe_sampled, "sample random instances instead of enumerating");
  probe->add_option("--trials", probe_trials, "instances per order when sampling");
  probe->add_option("--seed", seed, "random seed");
  probe->add_option("--node-budget", node_budget, "cap on search nodes per instance");
  probe->add_option("-j,--jobs", jobs, "worker threads");

  std::string k_list = "7,8,11,16";
  int bench_count = 5, bench_n = 120;
  auto* bench = app.add_subcommand("bench", "palette sizes and timings over random instances");
  bench->add_option("-o,--output", output, "output file (default stdout)");
  bench->add_option("--k-list", k_list, "comma-separated k values");
  bench->add_option("-n,--n", bench_n, "vertex count per instance");
  bench->add_option("--count", bench_count, "instances per k");
  bench->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  OutputSink sink;
  try {
    sink.open(output);
    std::ostream& out = *sink.os;

    if (*recognize) {
      oddkt::Graph g = load_graph(input);
      int k = k_flag > 0 ? k_flag : oddkt::detect_ktree_k(g).value_or(0);
      std::string why = "no k admits a certificate";
      if (k > 0) {
        auto ao = oddkt::try_recognize_ktree(g, k, &why);
        if (ao) {
          oddkt::format_ordering(out, *ao);
          return 0;
        }
      }
      out << "NOT-K-TREE: " << why << '\n';
      return kExitNegative;
    }

    if (*order) {
      oddkt::Graph g = load_graph(input);
      int k = detect_or_check_k(g, k_flag);
      oddkt::format_ordering(out, oddkt::good_addition_ordering(g, k));
      return 0;
    }

    if (*color) {
      oddkt::Graph g = load_graph(input);
      int k = detect_or_check_k(g, k_flag);
      oddkt::Trace tr;
      std::ofstream trace_file;
      if (!trace_path.empty()) {
        trace_file.open(trace_path);
        tr.out = &trace_file;
      } else if (trace_flag) {
        tr.out = &std::cerr;
      }
      oddkt::Coloring c = color_route(g, k, tr.out ? &tr : nullptr);
      auto rep = oddkt::verify_odd(g, c);  // every run re-checks its own output
      if (!rep.all_ok) throw oddkt::InvariantViolation("construction returned a non-odd coloring");
      out << "# odd coloring, k=" << k << ", colors used=" << c.max_color_used() << '\n';
      oddkt::format_coloring(out, c);
      return 0;
    }

    if (*verify) {
      oddkt::Graph g = load_graph(input);
      oddkt::Coloring c = load_coloring(coloring_path);
      auto proper = oddkt::verify_proper(g, c);
      if (!proper.ok) {
        out << "proper: no (edge " << proper.u << " " << proper.v << " is monochromatic)\n";
        return kExitNegative;
      }
      out << "proper: yes\n";
      auto rep = oddkt::verify_odd(g, c);
      out << "odd: " << (rep.all_ok ? "yes" : "no") << '\n';
      for (oddkt::Vertex v = 0; v < g.n; ++v) {
        if (rep.status[v] == oddkt::OddStatus::Fail)
          out << "vertex " << v << " FAIL\n";
        else if (rep.status[v] == oddkt::OddStatus::Exempt)
          out << "vertex " << v << " EXEMPT\n";
      }
      return rep.all_ok ? 0 : kExitNegative;
    }

    if (*oracle) {
      oddkt::Graph g = load_graph(input);
      oddkt::SearchConfig cfg;
      if (node_budget > 0) cfg.node_budget = node_budget;
      if (max_colors > 0) {
        auto res = oddkt::exists_odd_coloring(g, max_colors, cfg);
        if (res.status == oddkt::OracleStatus::Feasible) {
          out << "FEASIBLE nodes=" << res.nodes << '\n';
          oddkt::format_coloring(out, *res.witness);
          return 0;
        }
        if (res.status == oddkt::OracleStatus::Infeasible) {
          out << "INFEASIBLE nodes=" << res.nodes << '\n';
          return kExitNegative;
        }
        out << "BUDGET-EXCEEDED nodes=" << res.nodes << '\n';
        return kExitNegative;
      }
      auto res = oddkt::odd_chromatic_exact(g, cfg);
      if (res.exact) {
        out << "odd_chromatic = " << res.hi << " nodes=" << res.nodes << '\n';
      } else {
        out << "odd_chromatic in [" << res.lo << "," << res.hi << "] nodes=" << res.nodes
            << '\n';
      }
      if (res.witness) oddkt::format_coloring(out, *res.witness);
      return 0;
    }

    if (*rnd) {
      auto [g, ao] = oddkt::random_ktree({gen_n, gen_k, seed, bias});
      out << "# random " << gen_k << "-tree, n=" << gen_n << ", seed=" << seed << '\n';
      oddkt::format_graph(out, g);
      if (!cert_path.empty()) {
        std::ofstream cf(cert_path);
        oddkt::format_ordering(cf, ao);
      }
      return 0;
    }

    if (*enumerate) {
      auto all = oddkt::enumerate_small_ktrees(gen_n, gen_k);
      out << "# " << all.size() << " " << gen_k << "-trees on " << gen_n << " vertices\n";
      for (std::size_t i = 0; i < all.size(); ++i) {
        out << "# graph " << i << '\n';
        oddkt::format_graph(out, all[i]);
        out << '\n';
      }
      return 0;
    }

    if (*probe) {
      oddkt::ProbeConfig cfg;
      cfg.k = gen_k;
      cfg.n_max = probe_nmax;
      cfg.colors = probe_colors;
      cfg.exhaustive = !probe_sampled;
      cfg.trials = probe_trials;
      cfg.seed = seed;
      cfg.jobs = jobs;
      if (node_budget > 0) cfg.node_budget = node_budget;
      auto rep = oddkt::probe_conjecture(cfg);
      oddkt::format_probe_report(out, rep);
      return rep.infeasible.empty() ? 0 : kExitNegative;
    }

    if (*bench) {
      std::vector<int> ks;
      std::istringstream ks_in(k_list);
      std::string tok;
      while (std::getline(ks_in, tok, ',')) ks.push_back(std::stoi(tok));
      out << "k,n,seed,colors_used,palette_bound,millis\n";
      for (int k : ks) {
        int bound = k == 1   ? 3
                    : k <= 6 ? oracle_budget_small_k(k)
                             : oddkt::make_budget(k).palette;
        for (int i = 0; i < bench_count; ++i) {
          std::uint64_t s = seed + 7919u * static_cast<std::uint64_t>(k) + i;
          int n = std::max(bench_n, k + 2);
          auto [g, ao] = oddkt::random_ktree({n, k, s, 0.5});
          auto t0 = std::chrono::steady_clock::now();
          oddkt::Coloring c = color_route(g, k, nullptr);
          auto t1 = std::chrono::steady_clock::now();
          double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          oddkt::require(c.max_color_used() <= bound, "palette bound holds in bench");
          out << k << ',' << n << ',' << s << ',' << c.max_color_used() << ',' << bound << ','
              << ms << '\n';
        }
      }
      return 0;
    }
  } catch (const oddkt::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kExitInternal;
  } catch (const oddkt::NotKTree& e) {
    std::cout << "NOT-K-TREE: " << e.what() << '\n';
    return kExitNegative;
  } catch (const oddkt::TooSmall& e) {
    std::cout << "NOT-K-TREE: " << e.what() << '\n';
    return kExitNegative;
  } catch (const oddkt::NotProper& e) {
    std::cout << "NOT-PROPER: " << e.what() << '\n';
    return kExitNegative;
  } catch (const oddkt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
