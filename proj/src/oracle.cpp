#include "mcd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>

namespace mcd {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atoi(v);
}

using PairSet = std::vector<std::pair<int, Edge>>;  // sorted (vertex, edge) assignments

// All simple paths u -> v, neighbors explored ascending.
void simple_paths(const Graph& g, int u, int v, std::vector<int>& cur, std::vector<char>& used,
                  std::vector<std::vector<int>>& out) {
  int x = cur.back();
  if (x == v) {
    out.push_back(cur);
    return;
  }
  for (int y : g.neighbors(x)) {
    if (used[y]) continue;
    used[y] = 1;
    cur.push_back(y);
    simple_paths(g, u, v, cur, used, out);
    cur.pop_back();
    used[y] = 0;
  }
}

// Witnesses for one request: every simple path, every split of its edges
// between the two endpoints. Sorted by size then lexicographically.
std::vector<PairSet> request_witnesses(const Graph& g, const Edge& req) {
  std::vector<std::vector<int>> paths;
  std::vector<int> cur{req.first};
  std::vector<char> used(g.vertex_count(), 0);
  used[req.first] = 1;
  simple_paths(g, req.first, req.second, cur, used, paths);

  std::vector<PairSet> out;
  for (const auto& p : paths) {
    int len = static_cast<int>(p.size()) - 1;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      PairSet w;
      for (int i = 0; i < len; ++i) {
        Edge e = make_edge(p[i], p[i + 1]);
        w.emplace_back((mask >> i) & 1 ? req.second : req.first, e);
      }
      std::sort(w.begin(), w.end());
      w.erase(std::unique(w.begin(), w.end()), w.end());
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const PairSet& a, const PairSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool search(const std::vector<std::vector<PairSet>>& witnesses, size_t i,
            std::set<std::pair<int, Edge>>& chosen, int budget, long long& nodes) {
  ++nodes;
  if (i == witnesses.size()) return true;
  for (const PairSet& w : witnesses[i]) {
    std::vector<std::pair<int, Edge>> added;
    for (const auto& p : w)
      if (!chosen.count(p)) added.push_back(p);
    if (static_cast<int>(chosen.size() + added.size()) > budget) continue;
    for (const auto& p : added) chosen.insert(p);
    if (search(witnesses, i + 1, chosen, budget, nodes)) return true;
    for (const auto& p : added) chosen.erase(p);
  }
  return false;
}

}  // namespace

OracleGuard OracleGuard::from_env() {
  OracleGuard g;
  g.max_n = env_int("MCD_ORACLE_MAX_N", g.max_n);
  g.max_m = env_int("MCD_ORACLE_MAX_M", g.max_m);
  g.max_requests = env_int("MCD_ORACLE_MAX_R", g.max_requests);
  return g;
}

McdOracleResult brute_force_mcd(const Graph& g, const RequestSet& r, int cost_cap,
                                std::optional<OracleGuard> guard) {
  OracleGuard lim = guard ? *guard : OracleGuard::from_env();
  if (g.vertex_count() > lim.max_n || g.edge_count() > lim.max_m || r.size() > lim.max_requests)
    throw GuardError("oracle guard exceeded (n=" + std::to_string(g.vertex_count()) +
                     ", m=" + std::to_string(g.edge_count()) +
                     ", |R|=" + std::to_string(r.size()) + ")");
  r.validate_against(g);

  McdOracleResult res;
  res.witness = Dispersal(g.vertex_count());
  if (r.empty()) return res;

  int lower = 0;
  std::vector<std::vector<PairSet>> witnesses;
  for (const Edge& req : r.requests()) {
    auto w = request_witnesses(g, req);
    if (w.empty())
      throw InfeasibleError("request {" + std::to_string(req.first) + "," +
                            std::to_string(req.second) + "} has disconnected endpoints");
    lower = std::max(lower, static_cast<int>(w.front().size()));
    witnesses.push_back(std::move(w));
  }
  // Largest first tightens the budget pruning.
  std::sort(witnesses.begin(), witnesses.end(),
            [](const auto& a, const auto& b) { return a.front().size() > b.front().size(); });

  for (int k = lower; k <= cost_cap; ++k) {
    std::set<std::pair<int, Edge>> chosen;
    if (search(witnesses, 0, chosen, k, res.nodes)) {
      res.cost = static_cast<int>(chosen.size());
      for (const auto& [v, e] : chosen) res.witness.add(v, e);
      if (!satisfies(g, res.witness, r).ok) throw Error("oracle witness infeasible (bug)");
      return res;
    }
  }
  throw InfeasibleError("oracle cost cap " + std::to_string(cost_cap) +
                        " reached without a feasible dispersal");
}

McdOracleResult brute_force_mcd_full(const Graph& g, const RequestSet& r) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (n * m > 18) throw GuardError("full-enumeration oracle limited to n*m <= 18");
  r.validate_against(g);
  const auto& edges = g.edges();

  McdOracleResult res;
  res.cost = -1;
  for (unsigned long long mask = 0; mask < (1ull << (n * m)); ++mask) {
    int c = std::popcount(mask);
    if (res.cost >= 0 && c >= res.cost) continue;
    Dispersal d(n);
    for (int v = 0; v < n; ++v)
      for (int e = 0; e < m; ++e)
        if ((mask >> (v * m + e)) & 1) d.add(v, edges[e]);
    ++res.nodes;
    if (satisfies(g, d, r).ok) {
      res.cost = c;
      res.witness = d;
    }
  }
  if (res.cost < 0) throw InfeasibleError("no feasible dispersal exists");
  return res;
}

SteinerOracleResult brute_force_steiner(const Graph& g, std::vector<int> terminals, int max_m) {
  const int m = g.edge_count();
  if (m > max_m) throw GuardError("Steiner oracle limited to m <= " + std::to_string(max_m));
  for (int t : terminals) g.check_vertex(t);
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());

  SteinerOracleResult res;
  if (terminals.size() <= 1) return res;
  const auto& edges = g.edges();

  auto connects = [&](unsigned mask) {
    std::map<int, int> comp;  // naive union-find substitute
    int next = 0;
    std::map<int, int> id;
    auto find = [&](int v) {
      if (!id.count(v)) id[v] = next++;
      int x = id[v];
      while (comp.count(x)) x = comp[x];
      return x;
    };
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) comp[a] = b;
    }
    int root = find(terminals[0]);
    for (int t : terminals)
      if (find(t) != root) return false;
    return true;
  };

  for (int k = 0; k <= m; ++k) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) != k) continue;
      ++res.nodes;
      if (connects(mask)) {
        res.cost = k;
        for (int e = 0; e < m; ++e)
          if ((mask >> e) & 1) res.witness.insert(edges[e]);
        return res;
      }
    }
  }
  throw InfeasibleError("terminals disconnected");
}

CoverOracleResult brute_force_vertex_cover(const CutBipartite& b) {
  std::vector<int> verts = b.left;
  verts.insert(verts.end(), b.right.begin(), b.right.end());
  const int v = static_cast<int>(verts.size());
  if (v > 16) throw GuardError("vertex cover oracle limited to 16 vertices");

  CoverOracleResult res;
  res.cost = -1;
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    int c = std::popcount(mask);
    if (res.cost >= 0 && c >= res.cost) continue;
    std::set<int> chosen;
    for (int i = 0; i < v; ++i)
      if ((mask >> i) & 1) chosen.insert(verts[i]);
    ++res.nodes;
    bool covers = true;
    for (const auto& [a, c2] : b.crossing)
      if (!chosen.count(a) && !chosen.count(c2)) {
        covers = false;
        break;
      }
    if (covers) {
      res.cost = c;
      res.witness.assign(chosen.begin(), chosen.end());
    }
  }
  return res;
}

}  // namespace mcd
