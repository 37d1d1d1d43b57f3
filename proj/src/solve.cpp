#include "mcd/solve.hpp"

#include "mcd/approx_tree.hpp"
#include "mcd/oracle.hpp"
#include "mcd/treegraph.hpp"

namespace mcd {

SolverKind parse_solver_kind(const std::string& name) {
  if (name == "auto") return SolverKind::Auto;
  if (name == "dp") return SolverKind::Dp;
  if (name == "treegraph") return SolverKind::Treegraph;
  if (name == "approx") return SolverKind::Approx;
  if (name == "star") return SolverKind::Star;
  if (name == "oracle") return SolverKind::Oracle;
  throw Error("unknown solver '" + name + "'");
}

const char* to_string(SolverKind k) {
  switch (k) {
    case SolverKind::Auto: return "auto";
    case SolverKind::Dp: return "dp";
    case SolverKind::Treegraph: return "treegraph";
    case SolverKind::Approx: return "approx";
    case SolverKind::Star: return "star";
    case SolverKind::Oracle: return "oracle";
  }
  return "?";
}

namespace {

SolverKind route(const Instance& inst, const SolveOptions& opts) {
  auto gk = classify_structure(inst.graph).kind;
  if (gk == StructureKind::Tree || gk == StructureKind::Star) return SolverKind::Treegraph;
  RequestGraph h = build_request_graph(inst.requests);
  Structure hs = classify_structure(h.compact);
  if (hs.kind == StructureKind::Star) return SolverKind::Star;
  if (hs.kind == StructureKind::Tree)
    return hs.max_degree <= opts.degree_cap ? SolverKind::Dp : SolverKind::Approx;
  throw UnsupportedClassError("unsupported instance class: graph is " + std::string(to_string(gk)) +
                              ", request graph is " + to_string(hs.kind));
}

}  // namespace

SolveResult solve_instance(const Instance& inst, const SolveOptions& opts) {
  inst.requests.validate_against(inst.graph);
  if (inst.requests.empty())
    return SolveResult{to_string(opts.solver), Dispersal(inst.graph.vertex_count())};

  SolverKind kind = opts.solver == SolverKind::Auto ? route(inst, opts) : opts.solver;
  switch (kind) {
    case SolverKind::Treegraph:
      return {"treegraph", opts.parallel ? solve_treegraph(inst.graph, inst.requests)
                                         : solve_treegraph_serial(inst.graph, inst.requests)};
    case SolverKind::Star:
      return {"star", solve_star(inst.graph, inst.requests, opts.star_mode, opts.terminal_cap)};
    case SolverKind::Dp: {
      DpOptions d;
      d.degree_cap = opts.degree_cap;
      d.root = opts.root;
      d.terminal_cap = opts.terminal_cap;
      d.parallel = opts.parallel;
      return {"dp", dp_solve(inst.graph, inst.requests, d)};
    }
    case SolverKind::Approx:
      return {"approx", solve_tree_approx(inst.graph, inst.requests, opts.star_mode, opts.root,
                                          opts.terminal_cap)};
    case SolverKind::Oracle:
      return {"oracle", brute_force_mcd(inst.graph, inst.requests).witness};
    case SolverKind::Auto:
      break;
  }
  throw Error("unroutable solver");
}

}  // namespace mcd
