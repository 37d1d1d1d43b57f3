#include "mcd/treegraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace mcd {

namespace {

int index_of(const std::vector<int>& sorted, int host) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), host);
  if (it == sorted.end() || *it != host) throw Error("vertex not on expected side of cut");
  return static_cast<int>(it - sorted.begin());
}

// Hopcroft-Karp. adj maps left index -> ascending right indices.
// Returns matching size; ml/mr hold partner indices (-1 unmatched).
int hopcroft_karp(const std::vector<std::vector<int>>& adj, int nr, std::vector<int>& ml,
                  std::vector<int>& mr) {
  const int nl = static_cast<int>(adj.size());
  ml.assign(nl, -1);
  mr.assign(nr, -1);
  std::vector<int> dist(nl);
  int matched = 0;

  auto bfs = [&]() {
    std::queue<int> q;
    bool augmenting = false;
    for (int u = 0; u < nl; ++u) {
      if (ml[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = -1;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = mr[v];
        if (w == -1) {
          augmenting = true;
        } else if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return augmenting;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      int w = mr[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        ml[u] = v;
        mr[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < nl; ++u)
      if (ml[u] == -1 && dfs(u)) ++matched;
  }
  return matched;
}

struct CutCover {
  std::vector<int> vertices;  // host ids holding the tree edge
  int matching_size = 0;
};

// Matching + König cover on one cut, compacted to the endpoints that
// actually appear in crossing requests.
CutCover solve_cut(const std::vector<std::pair<int, int>>& crossing) {
  CutCover out;
  if (crossing.empty()) return out;
  std::vector<int> lh, rh;
  for (const auto& [a, b] : crossing) {
    lh.push_back(a);
    rh.push_back(b);
  }
  std::sort(lh.begin(), lh.end());
  lh.erase(std::unique(lh.begin(), lh.end()), lh.end());
  std::sort(rh.begin(), rh.end());
  rh.erase(std::unique(rh.begin(), rh.end()), rh.end());

  std::vector<std::vector<int>> adj(lh.size());
  for (const auto& [a, b] : crossing) adj[index_of(lh, a)].push_back(index_of(rh, b));
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<int> ml, mr;
  out.matching_size = hopcroft_karp(adj, static_cast<int>(rh.size()), ml, mr);

  // König: alternate from unmatched left vertices.
  std::vector<char> zl(lh.size(), 0), zr(rh.size(), 0);
  std::queue<int> q;
  for (size_t u = 0; u < lh.size(); ++u) {
    if (ml[u] == -1) {
      zl[u] = 1;
      q.push(static_cast<int>(u));
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (v == ml[u] || zr[v]) continue;
      zr[v] = 1;
      int w = mr[v];
      if (w != -1 && !zl[w]) {
        zl[w] = 1;
        q.push(w);
      }
    }
  }
  for (size_t u = 0; u < lh.size(); ++u)
    if (!zl[u]) out.vertices.push_back(lh[u]);
  for (size_t v = 0; v < rh.size(); ++v)
    if (zr[v]) out.vertices.push_back(rh[v]);
  std::sort(out.vertices.begin(), out.vertices.end());

  if (static_cast<int>(out.vertices.size()) != out.matching_size)
    throw Error("König cover size disagrees with matching size");
  return out;
}

void require_tree(const Graph& t) {
  auto s = classify_structure(t);
  if (s.kind != StructureKind::Tree && s.kind != StructureKind::Star)
    throw UnsupportedClassError("graph is not a tree");
}

struct EulerIndex {
  std::vector<int> parent, tin, tout;
};

EulerIndex euler_index(const Graph& t) {
  const int n = t.vertex_count();
  EulerIndex e{std::vector<int>(n, -1), std::vector<int>(n, 0), std::vector<int>(n, 0)};
  if (n == 0) return e;
  int timer = 0;
  std::vector<std::pair<int, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (done) {
      e.tout[v] = timer - 1;
      continue;
    }
    e.tin[v] = timer++;
    stack.emplace_back(v, true);
    for (auto it = t.neighbors(v).rbegin(); it != t.neighbors(v).rend(); ++it)
      if (*it != e.parent[v]) {
        e.parent[*it] = v;
        stack.emplace_back(*it, false);
      }
  }
  return e;
}

Dispersal solve_impl(const Graph& t, const RequestSet& r, bool parallel) {
  require_tree(t);
  r.validate_against(t);
  Dispersal d(t.vertex_count());
  if (r.empty() || t.edge_count() == 0) return d;

  EulerIndex eu = euler_index(t);
  const auto& edges = t.edges();
  const auto& reqs = r.requests();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> covers(m);

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (int i = 0; i < m; ++i) {
    auto [a, b] = edges[i];
    int child = eu.parent[b] == a ? b : a;
    auto in_sub = [&](int x) { return eu.tin[child] <= eu.tin[x] && eu.tin[x] <= eu.tout[child]; };
    // Left side of the cut is the component containing a (= min endpoint).
    bool left_is_subtree = (child == a);
    std::vector<std::pair<int, int>> crossing;
    for (const Edge& req : reqs) {
      bool pin = in_sub(req.first), qin = in_sub(req.second);
      if (pin == qin) continue;
      bool first_on_left = (pin == left_is_subtree);
      crossing.emplace_back(first_on_left ? req.first : req.second,
                            first_on_left ? req.second : req.first);
    }
    covers[i] = solve_cut(crossing).vertices;
  }

  for (int i = 0; i < m; ++i)
    for (int w : covers[i]) d.add(w, edges[i]);
  return d;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> split_at_edge(const Graph& t, Edge e) {
  require_tree(t);
  e = make_edge(e.first, e.second);
  if (!t.has_edge(e.first, e.second)) throw Error("edge not in tree");
  std::vector<char> side(t.vertex_count(), 0);
  std::queue<int> q;
  side[e.second] = 1;
  q.push(e.second);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : t.neighbors(x)) {
      if (x == e.second && y == e.first) continue;
      if (x == e.first && y == e.second) continue;
      if (!side[y]) {
        side[y] = 1;
        q.push(y);
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 0; v < t.vertex_count(); ++v)
    (side[v] ? out.second : out.first).push_back(v);
  return out;
}

CutBipartite build_cut_bipartite(const Graph& t, const RequestSet& r, Edge e) {
  auto [left, right] = split_at_edge(t, e);
  CutBipartite b;
  b.tree_edge = make_edge(e.first, e.second);
  b.left = std::move(left);
  b.right = std::move(right);
  std::vector<char> on_left(t.vertex_count(), 0);
  for (int v : b.left) on_left[v] = 1;
  for (const Edge& req : r.requests()) {
    bool p = on_left[req.first], q = on_left[req.second];
    if (p == q) continue;
    b.crossing.emplace_back(p ? req.first : req.second, p ? req.second : req.first);
  }
  return b;
}

Matching max_matching(const CutBipartite& b) {
  Matching m;
  if (b.crossing.empty()) return m;
  std::vector<std::vector<int>> adj(b.left.size());
  for (const auto& [a, c] : b.crossing)
    adj[index_of(b.left, a)].push_back(index_of(b.right, c));
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<int> ml, mr;
  hopcroft_karp(adj, static_cast<int>(b.right.size()), ml, mr);
  for (size_t u = 0; u < ml.size(); ++u)
    if (ml[u] != -1) m.pairs.emplace_back(b.left[u], b.right[ml[u]]);
  return m;
}

VertexCover min_vertex_cover_from_matching(const CutBipartite& b, const Matching& m) {
  std::vector<std::vector<int>> adj(b.left.size());
  for (const auto& [a, c] : b.crossing)
    adj[index_of(b.left, a)].push_back(index_of(b.right, c));
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<int> ml(b.left.size(), -1), mr(b.right.size(), -1);
  for (const auto& [a, c] : m.pairs) {
    int u = index_of(b.left, a), v = index_of(b.right, c);
    ml[u] = v;
    mr[v] = u;
  }
  std::vector<char> zl(b.left.size(), 0), zr(b.right.size(), 0);
  std::queue<int> q;
  for (size_t u = 0; u < b.left.size(); ++u) {
    if (ml[u] == -1 && !adj[u].empty()) {
      zl[u] = 1;
      q.push(static_cast<int>(u));
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (v == ml[u] || zr[v]) continue;
      zr[v] = 1;
      int w = mr[v];
      if (w != -1 && !zl[w]) {
        zl[w] = 1;
        q.push(w);
      }
    }
  }
  VertexCover cover;
  for (size_t u = 0; u < b.left.size(); ++u)
    if (!adj[u].empty() && !zl[u]) cover.vertices.push_back(b.left[u]);
  for (size_t v = 0; v < b.right.size(); ++v)
    if (zr[v]) cover.vertices.push_back(b.right[v]);
  std::sort(cover.vertices.begin(), cover.vertices.end());

  // Internal assertions: König equality and actual coverage; both fail
  // only if m was not maximum.
  if (cover.size() != m.size()) throw Error("cover size != matching size (matching not maximum?)");
  std::map<int, char> cov;
  for (int v : cover.vertices) cov[v] = 1;
  for (const auto& [a, c] : b.crossing)
    if (!cov.count(a) && !cov.count(c)) throw Error("König cover misses an edge");
  return cover;
}

Dispersal solve_treegraph(const Graph& t, const RequestSet& r) { return solve_impl(t, r, true); }

Dispersal solve_treegraph_serial(const Graph& t, const RequestSet& r) {
  return solve_impl(t, r, false);
}

}  // namespace mcd
