#include "mcd/generate.hpp"

#include <algorithm>
#include <set>

namespace mcd {

namespace {

// Bounded uniform draw by rejection; avoids std::uniform_int_distribution
// so the stream is identical across standard libraries.
int uniform_below(std::mt19937_64& rng, int bound) {
  if (bound <= 0) throw Error("uniform_below: empty range");
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % b);
}

std::vector<int> random_distinct(std::mt19937_64& rng, int count, int n) {
  if (count > n) throw Error("cannot draw " + std::to_string(count) + " distinct of " +
                             std::to_string(n));
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < count; ++i) std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  pool.resize(count);
  return pool;
}

std::vector<Edge> with_extra_edges(std::vector<Edge> edges, int n, int extra,
                                   std::mt19937_64& rng) {
  std::set<Edge> have(edges.begin(), edges.end());
  long max_edges = static_cast<long>(n) * (n - 1) / 2;
  extra = static_cast<int>(std::min<long>(extra, max_edges - static_cast<long>(have.size())));
  int added = 0;
  long attempts = 0;
  while (added < extra && attempts < 1000L * extra + 1000) {
    ++attempts;
    int u = uniform_below(rng, n);
    int v = uniform_below(rng, n);
    if (u == v) continue;
    Edge e = make_edge(u, v);
    if (have.insert(e).second) {
      edges.push_back(e);
      ++added;
    }
  }
  return edges;
}

// Random labeled tree over the given vertices with all degrees <= cap.
std::vector<Edge> random_degree_capped_tree(const std::vector<int>& verts, int cap,
                                            std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (verts.size() <= 1) return edges;
  if (cap < 2 && verts.size() > 2) throw Error("degree cap < 2 admits no tree on 3+ vertices");
  std::vector<int> degree(verts.size(), 0);
  for (size_t i = 1; i < verts.size(); ++i) {
    std::vector<int> open;
    for (size_t j = 0; j < i; ++j)
      if (degree[j] < cap) open.push_back(static_cast<int>(j));
    int pick = open[uniform_below(rng, static_cast<int>(open.size()))];
    edges.push_back(make_edge(verts[pick], verts[i]));
    ++degree[pick];
    ++degree[i];
  }
  return edges;
}

}  // namespace

std::vector<Edge> random_labeled_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error("tree needs at least one vertex");
  std::vector<Edge> edges;
  if (n == 1) return edges;
  if (n == 2) return {make_edge(0, 1)};

  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = uniform_below(rng, n);

  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.push_back(make_edge(a, b));
  return edges;
}

Instance generate_instance(GenKind kind, const GenParams& p, std::uint64_t seed) {
  if (p.n < 2) throw Error("generator needs n >= 2");
  std::mt19937_64 rng(seed);
  int extra = p.extra_edges >= 0 ? p.extra_edges : p.n / 2;

  switch (kind) {
    case GenKind::TreeGraph: {
      long max_pairs = static_cast<long>(p.n) * (p.n - 1) / 2;
      if (p.requests > max_pairs) throw Error("too many requests for n");
      std::vector<Edge> edges = random_labeled_tree(p.n, rng);
      std::set<Edge> req_set;
      std::vector<Edge> reqs;
      while (static_cast<int>(reqs.size()) < p.requests) {
        int u = uniform_below(rng, p.n);
        int v = uniform_below(rng, p.n);
        if (u == v) continue;
        Edge e = make_edge(u, v);
        if (req_set.insert(e).second) reqs.push_back(e);
      }
      return Instance{Graph(p.n, edges), RequestSet(reqs)};
    }
    case GenKind::TreeRequest: {
      if (p.requests + 1 > p.n) throw Error("request tree needs requests+1 <= n vertices");
      std::vector<Edge> edges =
          with_extra_edges(random_labeled_tree(p.n, rng), p.n, extra, rng);
      std::vector<int> verts = random_distinct(rng, p.requests + 1, p.n);
      std::vector<Edge> reqs = random_degree_capped_tree(verts, p.delta, rng);
      return Instance{Graph(p.n, edges), RequestSet(reqs)};
    }
    case GenKind::StarRequest: {
      if (p.delta >= p.n) throw Error("star degree must be below n");
      std::vector<Edge> edges =
          with_extra_edges(random_labeled_tree(p.n, rng), p.n, extra, rng);
      std::vector<int> verts = random_distinct(rng, p.delta + 1, p.n);
      std::vector<Edge> reqs;
      for (int i = 1; i <= p.delta; ++i) reqs.push_back(make_edge(verts[0], verts[i]));
      return Instance{Graph(p.n, edges), RequestSet(reqs)};
    }
  }
  throw Error("unknown generator kind");
}

GenKind parse_gen_kind(const std::string& name) {
  if (name == "tree-graph") return GenKind::TreeGraph;
  if (name == "tree-request") return GenKind::TreeRequest;
  if (name == "star-request") return GenKind::StarRequest;
  throw Error("unknown instance kind '" + name + "'");
}

}  // namespace mcd
