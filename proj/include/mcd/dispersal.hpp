#pragma once

#include <optional>
#include <vector>

#include "mcd/graph.hpp"

namespace mcd {

/// Per-vertex edge assignment D = {D_v}. Cost counts multiplicity: the
/// same edge held by two vertices costs 2.
class Dispersal {
 public:
  Dispersal() = default;
  explicit Dispersal(int n) : local_(n) {}

  int host_size() const { return static_cast<int>(local_.size()); }
  const EdgeSet& at(int v) const { return local_.at(v); }
  void add(int v, const Edge& e) { local_.at(v).insert(make_edge(e.first, e.second)); }
  void add_all(int v, const EdgeSet& es) { local_.at(v).insert(es.begin(), es.end()); }
  const std::vector<EdgeSet>& locals() const { return local_; }

  int cost() const;

  bool operator==(const Dispersal&) const = default;

 private:
  std::vector<EdgeSet> local_;
};

struct SatisfyResult {
  bool ok;
  std::optional<Edge> violated;  // first violated request when !ok
};

/// Every edge in every local set must exist in g; throws otherwise.
void validate_dispersal(const Graph& g, const Dispersal& d);

/// True iff for each request {u,v} the edge set D_u ∪ D_v contains a
/// u-v path (traversal restricted to those edges).
SatisfyResult satisfies(const Graph& g, const Dispersal& d, const RequestSet& r);
bool satisfies_request(const Graph& g, const Dispersal& d, int u, int v);

/// Smallest α with a u→α path inside D_u and an α→v path inside D_v.
std::optional<int> connecting_point(const Graph& g, const Dispersal& d, int u, int v);

/// Per-vertex set union.
Dispersal unite(const Dispersal& a, const Dispersal& b);

}  // namespace mcd
