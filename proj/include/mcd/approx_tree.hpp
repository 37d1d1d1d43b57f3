#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mcd/dispersal.hpp"
#include "mcd/graph.hpp"
#include "mcd/steiner.hpp"

namespace mcd {

/// Split of a rooted tree request set by the depth parity of each
/// request's shallower endpoint. Both classes are star forests.
struct ParityPartition {
  RequestSet even;  // shallower endpoint at even depth
  RequestSet odd;
  std::map<Edge, int> parity;
};

ParityPartition depth_parity_partition(const RootedTree& t, const RequestSet& r);

/// Connected components of H_{r_i}; each must classify as a star.
std::vector<RequestSet> star_components(const RequestSet& ri);

/// Plain connected-component split of a request set (no star check).
std::vector<RequestSet> request_components(const RequestSet& r);

struct TreeApproxBreakdown {
  Dispersal result;
  Dispersal even_part;
  Dispersal odd_part;
};

/// Depth-parity pipeline: solve each parity class component-wise as a
/// star instance and return the union. Handles forests per component.
/// With exact star sub-solves the cost is at most twice the optimum.
TreeApproxBreakdown solve_tree_approx_detail(const Graph& g, const RequestSet& r,
                                             StarMode mode = StarMode::Auto,
                                             std::optional<int> root = std::nullopt,
                                             int terminal_cap = kDefaultTerminalCap);

Dispersal solve_tree_approx(const Graph& g, const RequestSet& r, StarMode mode = StarMode::Auto,
                            std::optional<int> root = std::nullopt,
                            int terminal_cap = kDefaultTerminalCap);

}  // namespace mcd
