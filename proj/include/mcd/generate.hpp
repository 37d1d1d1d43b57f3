#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mcd/io.hpp"

namespace mcd {

enum class GenKind { TreeGraph, TreeRequest, StarRequest };

struct GenParams {
  int n = 8;            // host graph vertices
  int requests = 4;     // |R| (TreeGraph) or request-tree edge count (TreeRequest)
  int delta = 3;        // star degree / request-tree degree cap
  int extra_edges = -1; // extra random edges on top of the spanning tree; -1 = n/2
};

/// Uniform random labeled tree via a Prüfer sequence. n >= 1.
std::vector<Edge> random_labeled_tree(int n, std::mt19937_64& rng);

/// Deterministic per seed: the same (kind, params, seed) always yields a
/// byte-identical serialized instance.
Instance generate_instance(GenKind kind, const GenParams& params, std::uint64_t seed);

GenKind parse_gen_kind(const std::string& name);

}  // namespace mcd
