#pragma once

#include <string>

#include "mcd/dispersal.hpp"
#include "mcd/dp_consttree.hpp"
#include "mcd/io.hpp"
#include "mcd/steiner.hpp"

namespace mcd {

enum class SolverKind { Auto, Dp, Treegraph, Approx, Star, Oracle };

SolverKind parse_solver_kind(const std::string& name);
const char* to_string(SolverKind k);

struct SolveOptions {
  SolverKind solver = SolverKind::Auto;
  StarMode star_mode = StarMode::Auto;
  int degree_cap = 3;
  int terminal_cap = kDefaultTerminalCap;
  std::optional<int> root;
  bool parallel = true;
};

struct SolveResult {
  std::string solver;  // solver actually used
  Dispersal dispersal;
};

/// Dispatch. Auto routing: tree G -> treegraph; star R -> star; tree R
/// within the degree cap -> dp; other tree R -> approx; anything else is
/// an unsupported instance class.
SolveResult solve_instance(const Instance& inst, const SolveOptions& opts = {});

}  // namespace mcd
