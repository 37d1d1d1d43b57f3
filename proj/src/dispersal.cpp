#include "mcd/dispersal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace mcd {

namespace {

// Vertices reachable from s using only the given edges.
std::set<int> reachable(int s, const EdgeSet& edges) {
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<int> seen{s};
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    auto it = adj.find(x);
    if (it == adj.end()) continue;
    for (int y : it->second)
      if (seen.insert(y).second) q.push(y);
  }
  return seen;
}

}  // namespace

int Dispersal::cost() const {
  int c = 0;
  for (const EdgeSet& s : local_) c += static_cast<int>(s.size());
  return c;
}

void validate_dispersal(const Graph& g, const Dispersal& d) {
  if (d.host_size() != g.vertex_count()) throw Error("dispersal size does not match graph");
  for (int v = 0; v < d.host_size(); ++v)
    for (const Edge& e : d.at(v))
      if (!g.has_edge(e.first, e.second))
        throw Error("dispersal holds edge {" + std::to_string(e.first) + "," +
                    std::to_string(e.second) + "} absent from the graph");
}

bool satisfies_request(const Graph& g, const Dispersal& d, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return true;
  EdgeSet avail = d.at(u);
  avail.insert(d.at(v).begin(), d.at(v).end());
  return reachable(u, avail).count(v) != 0;
}

SatisfyResult satisfies(const Graph& g, const Dispersal& d, const RequestSet& r) {
  for (const Edge& req : r.requests())
    if (!satisfies_request(g, d, req.first, req.second)) return {false, req};
  return {true, std::nullopt};
}

std::optional<int> connecting_point(const Graph& g, const Dispersal& d, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::set<int> from_u = reachable(u, d.at(u));
  std::set<int> from_v = reachable(v, d.at(v));
  for (int a : from_u)  // ascending, so the first hit is the smallest id
    if (from_v.count(a)) return a;
  return std::nullopt;
}

Dispersal unite(const Dispersal& a, const Dispersal& b) {
  if (a.host_size() != b.host_size()) throw Error("dispersal union: host graph mismatch");
  Dispersal out = a;
  for (int v = 0; v < b.host_size(); ++v) out.add_all(v, b.at(v));
  return out;
}

}  // namespace mcd
