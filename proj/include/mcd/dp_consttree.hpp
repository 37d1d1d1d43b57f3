#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "mcd/dispersal.hpp"
#include "mcd/graph.hpp"

namespace mcd {

struct DpOptions {
  int degree_cap = 3;
  std::optional<int> root;  // default: smallest vertex id in V_R
  int terminal_cap = kDpTerminalCapDefault;
  bool parallel = true;

  static constexpr int kDpTerminalCapDefault = 12;
};

inline constexpr long long kDpInfinity = std::numeric_limits<long long>::max() / 4;

/// One table cell: the best partial dispersal for the subtree instance
/// (G, E_R(u)) whose local set at u reaches the connecting point α.
struct DpCell {
  long long cost = kDpInfinity;
  std::map<int, EdgeSet> local;  // sparse: only subtree vertices appear
};

struct DpTable {
  int root = -1;
  std::vector<int> order;                 // postorder over V_R (host ids)
  std::map<int, std::vector<DpCell>> cells;  // cells[u][alpha]
};

/// Fills the whole table bottom-up over the rooted request tree. The
/// candidate enumeration inside one cell runs under OpenMP when
/// opts.parallel is set; results are identical either way.
DpTable dp_fill(const Graph& g, const RequestSet& r, const DpOptions& opts = {});

/// Exact solver for tree request sets with bounded maximum degree.
/// Exceeding the degree cap is an error, not a silent approximation.
Dispersal dp_solve(const Graph& g, const RequestSet& r, const DpOptions& opts = {});

}  // namespace mcd
