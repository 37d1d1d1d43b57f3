#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mcd/types.hpp"

namespace mcd {

/// Undirected simple graph over dense vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  void check_vertex(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted canonical pairs
  std::vector<std::vector<int>> adj_;  // ascending neighbor lists
};

struct Path {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  std::vector<Edge> edges() const;
};

/// Deduplicated canonical request pairs.
class RequestSet {
 public:
  RequestSet() = default;
  explicit RequestSet(const std::vector<Edge>& requests);

  bool empty() const { return requests_.empty(); }
  int size() const { return static_cast<int>(requests_.size()); }
  const std::vector<Edge>& requests() const { return requests_; }
  void validate_against(const Graph& g) const;

  /// Sorted union of request endpoints.
  std::vector<int> endpoints() const;

 private:
  std::vector<Edge> requests_;  // sorted canonical pairs
};

/// H_R: the graph whose edges are the requests. Stored compactly with a
/// label map back to host-graph ids; everything public speaks host ids.
struct RequestGraph {
  Graph compact;              // over 0..|V_R|-1
  std::vector<int> to_host;   // compact id -> host id, ascending
  std::map<int, int> of_host; // host id -> compact id

  int host_of(int c) const { return to_host[c]; }
  int compact_of(int host) const;
  bool contains_host(int host) const { return of_host.count(host) != 0; }
};

enum class StructureKind { Tree, Star, Forest, General };

struct Structure {
  StructureKind kind;
  int max_degree;
};

const char* to_string(StructureKind k);

/// BFS shortest path with deterministic tie-break: lowest-numbered
/// neighbor expanded first. Empty optional when disconnected.
std::optional<Path> shortest_path(const Graph& g, int u, int v);

/// tree: connected with |E| = n-1; star: tree with at most one vertex of
/// degree >= 2; forest: acyclic but disconnected.
Structure classify_structure(const Graph& g);

RequestGraph build_request_graph(const RequestSet& r);

/// Rooted view of a tree-shaped request graph, keyed by host ids.
struct RootedTree {
  int root = -1;
  std::map<int, int> parent;                 // root maps to -1
  std::map<int, int> depth;
  std::map<int, std::vector<int>> children;  // ascending
  std::vector<int> postorder;                // every vertex after its descendants
};

RootedTree root_tree(const RequestGraph& h, int root);

}  // namespace mcd
