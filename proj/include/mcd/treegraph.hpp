#pragma once

#include <utility>
#include <vector>

#include "mcd/dispersal.hpp"
#include "mcd/graph.hpp"

namespace mcd {

/// Bipartite graph of the requests crossing one tree edge. The left side
/// is the component containing the edge's smaller endpoint. Crossing
/// pairs are stored (left, right).
struct CutBipartite {
  Edge tree_edge{-1, -1};
  std::vector<int> left;   // ascending
  std::vector<int> right;  // ascending
  std::vector<std::pair<int, int>> crossing;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left, right)
  int size() const { return static_cast<int>(pairs.size()); }
};

struct VertexCover {
  std::vector<int> vertices;  // ascending
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Components of t - e, labeled by the smaller resp. larger endpoint of e.
std::pair<std::vector<int>, std::vector<int>> split_at_edge(const Graph& t, Edge e);

CutBipartite build_cut_bipartite(const Graph& t, const RequestSet& r, Edge e);

/// Hopcroft-Karp maximum matching.
Matching max_matching(const CutBipartite& b);

/// König construction: alternate from unmatched left vertices; cover is
/// (left \ reached) ∪ (right ∩ reached).
VertexCover min_vertex_cover_from_matching(const CutBipartite& b, const Matching& m);

/// Exact solver for tree graphs: one min vertex cover per tree edge,
/// edge assigned to every cover vertex. Per-edge cut problems are
/// independent; the parallel variant solves them with OpenMP.
Dispersal solve_treegraph(const Graph& t, const RequestSet& r);
Dispersal solve_treegraph_serial(const Graph& t, const RequestSet& r);

}  // namespace mcd
