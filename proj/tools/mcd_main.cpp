#include <algorithm>
#include <chrono>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "mcd/approx_tree.hpp"
#include "mcd/generate.hpp"
#include "mcd/io.hpp"
#include "mcd/oracle.hpp"
#include "mcd/solve.hpp"
#include "mcd/treegraph.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_solve(const std::string& input, const std::string& solver, const std::string& mode,
              int degree_cap, int terminal_cap, int root, bool serial, bool json,
              bool with_oracle, const std::string& output) {
  mcd::Instance inst = mcd::load_instance(input);
  mcd::SolveOptions opts;
  opts.solver = mcd::parse_solver_kind(solver);
  opts.star_mode = mode == "exact"    ? mcd::StarMode::Exact
                   : mode == "approx" ? mcd::StarMode::Approx
                                      : mcd::StarMode::Auto;
  opts.degree_cap = degree_cap;
  opts.terminal_cap = terminal_cap;
  if (root >= 0) opts.root = root;
  opts.parallel = !serial;

  auto t0 = std::chrono::steady_clock::now();
  mcd::SolveResult res = mcd::solve_instance(inst, opts);
  double elapsed = ms_since(t0);

  auto check = mcd::satisfies(inst.graph, res.dispersal, inst.requests);
  if (!check.ok) {
    std::cerr << "internal error: solver output violates request {" << check.violated->first
              << "," << check.violated->second << "}\n";
    return 1;
  }

  mcd::SolveReport rep;
  rep.solver = res.solver;
  rep.cost = res.dispersal.cost();
  rep.feasible = true;
  rep.wall_ms = elapsed;
  if (with_oracle)
    rep.oracle_cost = mcd::brute_force_mcd(inst.graph, inst.requests).cost;

  std::cout << (json ? mcd::report_json(rep, res.dispersal)
                     : mcd::report_text(rep, res.dispersal));
  if (!output.empty()) mcd::write_file_atomic(output, mcd::serialize_dispersal(res.dispersal));
  return 0;
}

int run_verify(const std::string& input, const std::string& dispersal_path, bool with_oracle) {
  mcd::Instance inst = mcd::load_instance(input);
  mcd::Dispersal d = mcd::load_dispersal(dispersal_path, inst.graph);
  mcd::validate_dispersal(inst.graph, d);
  auto check = mcd::satisfies(inst.graph, d, inst.requests);
  if (!check.ok) {
    std::cout << "INFEASIBLE: request {" << check.violated->first << ","
              << check.violated->second << "} not satisfied\n";
    return 1;
  }
  std::cout << "feasible, cost " << d.cost() << "\n";
  if (with_oracle) {
    int opt = mcd::brute_force_mcd(inst.graph, inst.requests).cost;
    std::cout << "oracle optimum " << opt << ", gap " << d.cost() - opt << "\n";
  }
  return 0;
}

int run_generate(const std::string& kind, const mcd::GenParams& params, std::uint64_t seed,
                 const std::string& output) {
  mcd::Instance inst = mcd::generate_instance(mcd::parse_gen_kind(kind), params, seed);
  std::string text = mcd::serialize_instance(inst);
  if (output.empty())
    std::cout << text;
  else
    mcd::write_file_atomic(output, text);
  return 0;
}

int run_bench(const std::vector<int>& sizes, std::uint64_t seed, int runs) {
  std::cout << "n,requests,serial_ms,parallel_ms,speedup\n";
  double prev_parallel = -1;
  int prev_n = 0;
  for (int n : sizes) {
    mcd::GenParams p;
    p.n = n;
    p.requests = n;
    mcd::Instance inst = mcd::generate_instance(mcd::GenKind::TreeGraph, p, seed);

    auto time_solver = [&](auto&& fn) {
      fn();  // warm-up
      std::vector<double> samples;
      for (int i = 0; i < runs; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        samples.push_back(ms_since(t0));
      }
      std::sort(samples.begin(), samples.end());
      return samples[samples.size() / 2];
    };

    mcd::Dispersal serial_out = mcd::solve_treegraph_serial(inst.graph, inst.requests);
    mcd::Dispersal parallel_out = mcd::solve_treegraph(inst.graph, inst.requests);
    if (!(serial_out == parallel_out)) {
      std::cerr << "serial/parallel outputs diverge at n=" << n << "\n";
      return 1;
    }
    if (!mcd::satisfies(inst.graph, parallel_out, inst.requests).ok) {
      std::cerr << "bench output infeasible at n=" << n << "\n";
      return 1;
    }

    double serial_ms =
        time_solver([&] { mcd::solve_treegraph_serial(inst.graph, inst.requests); });
    double parallel_ms = time_solver([&] { mcd::solve_treegraph(inst.graph, inst.requests); });
    std::cout << n << ',' << n << ',' << serial_ms << ',' << parallel_ms << ','
              << serial_ms / parallel_ms << "\n";
    if (prev_parallel > 0)
      std::cout << "c time ratio " << prev_n << "->" << n << ": "
                << parallel_ms / prev_parallel << "\n";
    prev_parallel = parallel_ms;
    prev_n = n;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum certificate dispersal solver"};
  app.require_subcommand(1);

  std::string input, output, dispersal_path;
  std::string solver = "auto", mode = "auto", kind = "tree-graph";
  int degree_cap = 3, terminal_cap = 12, root = -1, runs = 5;
  bool serial = false, json = false, with_oracle = false;
  mcd::GenParams gen_params;
  std::uint64_t seed = 1;
  std::vector<int> sizes{1000, 4000};

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("-i,--input", input)->required();
  solve->add_option("--solver", solver)->check(CLI::IsMember({"auto", "dp", "treegraph", "approx", "star", "oracle"}));
  solve->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exact", "approx"}));
  solve->add_option("--degree-cap", degree_cap);
  solve->add_option("--terminal-cap", terminal_cap);
  solve->add_option("--root", root);
  solve->add_flag("--serial", serial, "disable OpenMP kernels");
  solve->add_flag("--json", json, "line-delimited JSON report");
  solve->add_flag("--oracle", with_oracle, "also report the brute-force optimum");
  solve->add_option("-o,--output", output, "write the dispersal to a file");

  auto* verify = app.add_subcommand("verify", "check a dispersal against an instance");
  verify->add_option("-i,--input", input)->required();
  verify->add_option("-d,--dispersal", dispersal_path)->required();
  verify->add_flag("--oracle", with_oracle, "compare against the brute-force optimum");

  auto* generate = app.add_subcommand("generate", "emit a random instance");
  generate->add_option("--kind", kind)->check(CLI::IsMember({"tree-graph", "tree-request", "star-request"}));
  generate->add_option("-n,--vertices", gen_params.n);
  generate->add_option("-r,--requests", gen_params.requests);
  generate->add_option("--delta", gen_params.delta);
  generate->add_option("--extra-edges", gen_params.extra_edges);
  generate->add_option("--seed", seed);
  generate->add_option("-o,--output", output);

  auto* bench = app.add_subcommand("bench", "time the tree-graph solver over generated sizes");
  bench->add_option("--sizes", sizes, "instance sizes (requests = n)");
  bench->add_option("--seed", seed);
  bench->add_option("--runs", runs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(input, solver, mode, degree_cap, terminal_cap, root, serial, json,
                       with_oracle, output);
    if (verify->parsed()) return run_verify(input, dispersal_path, with_oracle);
    if (generate->parsed()) return run_generate(kind, gen_params, seed, output);
    if (bench->parsed()) return run_bench(sizes, seed, runs);
  } catch (const mcd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mcd::UnsupportedClassError& e) {
    std::cerr << "unsupported instance class: " << e.what() << "\n";
    return 3;
  } catch (const mcd::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
