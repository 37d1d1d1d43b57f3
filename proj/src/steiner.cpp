#include "mcd/steiner.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace mcd {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::vector<int> bfs_dist(const Graph& g, int s) {
  std::vector<int> dist(g.vertex_count(), kInf);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x))
      if (dist[y] == kInf) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

void add_path_edges(const Graph& g, int a, int b, EdgeSet& out) {
  auto p = shortest_path(g, a, b);
  if (!p) throw InfeasibleError("terminals disconnected");
  for (const Edge& e : p->edges()) out.insert(e);
}

EdgeSet prune_non_terminal_leaves(EdgeSet edges, const std::vector<int>& terminals) {
  std::set<int> term(terminals.begin(), terminals.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> deg;
    for (const Edge& e : edges) {
      ++deg[e.first];
      ++deg[e.second];
    }
    for (const auto& [v, d] : deg) {
      if (d != 1 || term.count(v)) continue;
      for (auto it = edges.begin(); it != edges.end(); ++it) {
        if (it->first == v || it->second == v) {
          edges.erase(it);
          break;
        }
      }
      changed = true;
      break;  // degrees are stale, rebuild
    }
  }
  return edges;
}

std::vector<int> canonical_terminals(const Graph& g, std::vector<int> terminals) {
  for (int t : terminals) g.check_vertex(t);
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  return terminals;
}

}  // namespace

std::optional<SteinerTree> try_dreyfus_wagner(const Graph& g, std::vector<int> terminals,
                                              int terminal_cap) {
  terminals = canonical_terminals(g, terminals);
  const int t = static_cast<int>(terminals.size());
  if (t > terminal_cap)
    throw GuardError("terminal count " + std::to_string(t) + " exceeds cap " +
                     std::to_string(terminal_cap));
  if (t <= 1) return SteinerTree{};

  const int n = g.vertex_count();
  std::vector<int> d0 = bfs_dist(g, terminals[0]);
  for (int x : terminals)
    if (d0[x] >= kInf) return std::nullopt;

  const int full = (1 << t) - 1;
  // dp[S][v]: cheapest tree connecting {terminals in S} ∪ {v}.
  std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, kInf));
  std::vector<std::vector<int>> pred(full + 1, std::vector<int>(n, -1));
  std::vector<std::vector<int>> split(full + 1, std::vector<int>(n, 0));
  for (int i = 0; i < t; ++i) dp[1 << i][terminals[i]] = 0;

  using Item = std::pair<int, int>;  // (dist, vertex)
  for (int mask = 1; mask <= full; ++mask) {
    auto& cur = dp[mask];
    if (std::popcount(static_cast<unsigned>(mask)) >= 2) {
      for (int sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        int rest = mask ^ sub;
        if (sub > rest) continue;  // each split once
        const auto& a = dp[sub];
        const auto& b = dp[rest];
        for (int v = 0; v < n; ++v) {
          if (a[v] >= kInf || b[v] >= kInf) continue;
          int cand = a[v] + b[v];
          if (cand < cur[v]) {
            cur[v] = cand;
            split[mask][v] = sub;
            pred[mask][v] = -1;
          }
        }
      }
    }
    // Relax through the graph (Dijkstra over the unit-weight edges with
    // the merged values as sources).
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int v = 0; v < n; ++v)
      if (cur[v] < kInf) pq.emplace(cur[v], v);
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (dv > cur[v]) continue;
      for (int w : g.neighbors(v)) {
        if (dv + 1 < cur[w]) {
          cur[w] = dv + 1;
          pred[mask][w] = v;
          pq.emplace(cur[w], w);
        }
      }
    }
  }

  if (dp[full][terminals[0]] >= kInf) return std::nullopt;

  EdgeSet edges;
  std::vector<std::pair<int, int>> todo{{full, terminals[0]}};
  while (!todo.empty()) {
    auto [mask, v] = todo.back();
    todo.pop_back();
    while (pred[mask][v] != -1) {
      edges.insert(make_edge(pred[mask][v], v));
      v = pred[mask][v];
    }
    if (std::popcount(static_cast<unsigned>(mask)) <= 1) continue;
    int sub = split[mask][v];
    todo.emplace_back(sub, v);
    todo.emplace_back(mask ^ sub, v);
  }

  return SteinerTree{prune_non_terminal_leaves(std::move(edges), terminals)};
}

SteinerTree dreyfus_wagner(const Graph& g, std::vector<int> terminals, int terminal_cap) {
  auto s = try_dreyfus_wagner(g, std::move(terminals), terminal_cap);
  if (!s) throw InfeasibleError("terminals disconnected");
  return *s;
}

SteinerTree steiner_2approx(const Graph& g, std::vector<int> terminals) {
  terminals = canonical_terminals(g, terminals);
  const int t = static_cast<int>(terminals.size());
  if (t <= 1) return SteinerTree{};

  std::vector<std::vector<int>> dist(t);
  for (int i = 0; i < t; ++i) dist[i] = bfs_dist(g, terminals[i]);
  for (int i = 1; i < t; ++i)
    if (dist[0][terminals[i]] >= kInf) throw InfeasibleError("terminals disconnected");

  // Prim over the metric closure, lowest terminal index on ties.
  std::vector<char> in_tree(t, 0);
  std::vector<int> best(t, kInf), best_from(t, -1);
  in_tree[0] = 1;
  for (int i = 1; i < t; ++i) {
    best[i] = dist[0][terminals[i]];
    best_from[i] = 0;
  }
  EdgeSet edges;
  for (int round = 1; round < t; ++round) {
    int pick = -1;
    for (int i = 0; i < t; ++i)
      if (!in_tree[i] && (pick == -1 || best[i] < best[pick])) pick = i;
    in_tree[pick] = 1;
    add_path_edges(g, terminals[best_from[pick]], terminals[pick], edges);
    for (int i = 0; i < t; ++i) {
      if (!in_tree[i] && dist[pick][terminals[i]] < best[i]) {
        best[i] = dist[pick][terminals[i]];
        best_from[i] = pick;
      }
    }
  }
  return SteinerTree{prune_non_terminal_leaves(std::move(edges), terminals)};
}

int star_center(const RequestGraph& h) {
  for (int c = 0; c < h.compact.vertex_count(); ++c)
    if (h.compact.degree(c) >= 2) return h.host_of(c);
  return h.to_host.front();  // single request: smaller endpoint
}

SteinerInstance star_to_steiner(const Graph& g, const RequestSet& r) {
  r.validate_against(g);
  if (r.empty()) return SteinerInstance{};
  RequestGraph h = build_request_graph(r);
  if (classify_structure(h.compact).kind != StructureKind::Star)
    throw UnsupportedClassError("request graph is not a star");
  return SteinerInstance{r.endpoints()};
}

Dispersal steiner_to_star_dispersal(const SteinerTree& s, int center, const Graph& g) {
  g.check_vertex(center);
  Dispersal d(g.vertex_count());
  for (const Edge& e : s.edges) {
    if (!g.has_edge(e.first, e.second)) throw Error("Steiner tree edge not in graph");
    d.add(center, e);
  }
  return d;
}

EdgeSet dispersal_to_steiner(const Dispersal& d) {
  EdgeSet out;
  for (const EdgeSet& local : d.locals()) out.insert(local.begin(), local.end());
  return out;
}

Dispersal solve_star(const Graph& g, const RequestSet& r, StarMode mode, int terminal_cap) {
  r.validate_against(g);
  if (r.empty()) return Dispersal(g.vertex_count());
  RequestGraph h = build_request_graph(r);
  if (classify_structure(h.compact).kind != StructureKind::Star)
    throw UnsupportedClassError("request graph is not a star");
  SteinerInstance inst = star_to_steiner(g, r);
  int nt = static_cast<int>(inst.terminals.size());

  SteinerTree tree;
  if (mode == StarMode::Exact || (mode == StarMode::Auto && nt <= terminal_cap)) {
    tree = dreyfus_wagner(g, inst.terminals, terminal_cap);
  } else {
    tree = steiner_2approx(g, inst.terminals);
  }
  return steiner_to_star_dispersal(tree, star_center(h), g);
}

}  // namespace mcd
