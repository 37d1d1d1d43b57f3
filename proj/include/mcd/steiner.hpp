#pragma once

#include <optional>
#include <vector>

#include "mcd/dispersal.hpp"
#include "mcd/graph.hpp"

namespace mcd {

inline constexpr int kDefaultTerminalCap = 12;

struct SteinerInstance {
  std::vector<int> terminals;  // sorted, deduplicated
};

struct SteinerTree {
  EdgeSet edges;
  int cost() const { return static_cast<int>(edges.size()); }
};

/// Exact minimum-cardinality Steiner tree (unit weights), subset-pair
/// dynamic program. Empty optional when the terminals are disconnected.
std::optional<SteinerTree> try_dreyfus_wagner(const Graph& g, std::vector<int> terminals,
                                              int terminal_cap = kDefaultTerminalCap);
SteinerTree dreyfus_wagner(const Graph& g, std::vector<int> terminals,
                           int terminal_cap = kDefaultTerminalCap);

/// Metric-closure factor-2 approximation: MST over terminal distances,
/// each MST edge expanded into a shortest path, non-terminal leaves pruned.
SteinerTree steiner_2approx(const Graph& g, std::vector<int> terminals);

enum class StarMode { Exact, Approx, Auto };

/// Internal vertex of a star-shaped request graph (smaller endpoint for a
/// single request).
int star_center(const RequestGraph& h);

/// Terminals are exactly the request endpoints V_R.
SteinerInstance star_to_steiner(const Graph& g, const RequestSet& r);

/// All tree edges assigned to the star's internal vertex.
Dispersal steiner_to_star_dispersal(const SteinerTree& s, int center, const Graph& g);

/// Union of all local dispersals, duplicates collapsed.
EdgeSet dispersal_to_steiner(const Dispersal& d);

/// Star-request solver via the Steiner reductions. Auto mode runs the
/// exact algorithm when |V_R| fits under the terminal cap.
Dispersal solve_star(const Graph& g, const RequestSet& r, StarMode mode = StarMode::Auto,
                     int terminal_cap = kDefaultTerminalCap);

}  // namespace mcd
