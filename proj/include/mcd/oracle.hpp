#pragma once

#include <optional>
#include <vector>

#include "mcd/dispersal.hpp"
#include "mcd/graph.hpp"
#include "mcd/treegraph.hpp"

namespace mcd {

/// Instance-size guards for the brute-force searches. Defaults are
/// conservative; MCD_ORACLE_MAX_N / _M / _R override them for CI.
struct OracleGuard {
  int max_n = 7;
  int max_m = 9;
  int max_requests = 4;
  static OracleGuard from_env();
};

struct McdOracleResult {
  int cost = 0;
  Dispersal witness;
  long long nodes = 0;
};

/// Exact c_min(G,R) by iterative deepening on total cost. Each request is
/// witnessed by a simple path whose edges are split between the two
/// endpoints; any feasible dispersal restricts to such a witness set
/// without cost increase, so the first feasible depth is optimal.
McdOracleResult brute_force_mcd(const Graph& g, const RequestSet& r, int cost_cap = 64,
                                std::optional<OracleGuard> guard = std::nullopt);

/// Independent cross-check: full enumeration over all subsets of
/// (vertex, edge) assignment pairs. Only for n*m <= 18.
McdOracleResult brute_force_mcd_full(const Graph& g, const RequestSet& r);

struct SteinerOracleResult {
  int cost = 0;
  EdgeSet witness;
  long long nodes = 0;
};

/// Minimum connecting edge subset by exhaustive enumeration (m <= 12).
SteinerOracleResult brute_force_steiner(const Graph& g, std::vector<int> terminals,
                                        int max_m = 12);

struct CoverOracleResult {
  int cost = 0;
  std::vector<int> witness;
  long long nodes = 0;
};

/// Minimum vertex cover by subset enumeration (<= 16 vertices).
CoverOracleResult brute_force_vertex_cover(const CutBipartite& b);

}  // namespace mcd
