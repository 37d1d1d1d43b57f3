#include "mcd/graph.hpp"

#include <algorithm>
#include <queue>

namespace mcd {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  if (n < 0) throw Error("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.first == e.second) throw Error("self-loop on vertex " + std::to_string(e.first));
    Edge c = make_edge(e.first, e.second);
    if (c.first < 0 || c.second >= n)
      throw Error("edge endpoint out of range: {" + std::to_string(c.first) + "," +
                  std::to_string(c.second) + "}");
    edges_.push_back(c);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error("duplicate edge");
  for (const Edge& e : edges_) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  Edge c = make_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), c);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error("vertex id out of range: " + std::to_string(v));
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    out.push_back(make_edge(vertices[i], vertices[i + 1]));
  return out;
}

RequestSet::RequestSet(const std::vector<Edge>& requests) {
  requests_.reserve(requests.size());
  for (const Edge& r : requests) {
    if (r.first == r.second) throw Error("self-request on vertex " + std::to_string(r.first));
    requests_.push_back(make_edge(r.first, r.second));
  }
  std::sort(requests_.begin(), requests_.end());
  requests_.erase(std::unique(requests_.begin(), requests_.end()), requests_.end());
}

void RequestSet::validate_against(const Graph& g) const {
  for (const Edge& r : requests_) {
    g.check_vertex(r.first);
    g.check_vertex(r.second);
  }
}

std::vector<int> RequestSet::endpoints() const {
  std::vector<int> out;
  for (const Edge& r : requests_) {
    out.push_back(r.first);
    out.push_back(r.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int RequestGraph::compact_of(int host) const {
  auto it = of_host.find(host);
  if (it == of_host.end()) throw Error("vertex " + std::to_string(host) + " not in V_R");
  return it->second;
}

const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Tree: return "tree";
    case StructureKind::Star: return "star";
    case StructureKind::Forest: return "forest";
    case StructureKind::General: return "general";
  }
  return "?";
}

std::optional<Path> shortest_path(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<int> parent(g.vertex_count(), -2);
  std::queue<int> q;
  parent[u] = -1;
  q.push(u);
  while (!q.empty() && parent[v] == -2) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
    }
  }
  if (parent[v] == -2) return std::nullopt;
  Path p;
  for (int x = v; x != -1; x = parent[x]) p.vertices.push_back(x);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Structure classify_structure(const Graph& g) {
  int n = g.vertex_count();
  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  if (n == 0) return {StructureKind::Forest, 0};

  // Count components via BFS.
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
  }
  bool acyclic = g.edge_count() == n - components;
  if (components == 1 && acyclic) {
    int internal = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= 2) ++internal;
    return {internal <= 1 ? StructureKind::Star : StructureKind::Tree, max_deg};
  }
  if (acyclic) return {StructureKind::Forest, max_deg};
  return {StructureKind::General, max_deg};
}

RequestGraph build_request_graph(const RequestSet& r) {
  if (r.empty()) throw Error("empty request set has no request graph");
  RequestGraph h;
  h.to_host = r.endpoints();
  for (size_t i = 0; i < h.to_host.size(); ++i) h.of_host[h.to_host[i]] = static_cast<int>(i);
  std::vector<Edge> compact_edges;
  compact_edges.reserve(r.size());
  for (const Edge& req : r.requests())
    compact_edges.push_back(make_edge(h.of_host.at(req.first), h.of_host.at(req.second)));
  h.compact = Graph(static_cast<int>(h.to_host.size()), compact_edges);
  return h;
}

RootedTree root_tree(const RequestGraph& h, int root) {
  Structure s = classify_structure(h.compact);
  if (s.kind != StructureKind::Tree && s.kind != StructureKind::Star)
    throw UnsupportedClassError("request graph is not a tree");
  if (!h.contains_host(root)) throw Error("root " + std::to_string(root) + " not in V_R");

  RootedTree t;
  t.root = root;
  t.parent[root] = -1;
  t.depth[root] = 0;

  // Iterative DFS; children pushed in descending order so the postorder
  // visits ascending children first.
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [host, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      t.postorder.push_back(host);
      continue;
    }
    stack.emplace_back(host, true);
    int c = h.compact_of(host);
    std::vector<int> kids;
    for (int nb : h.compact.neighbors(c)) {
      int nb_host = h.host_of(nb);
      if (nb_host != t.parent.at(host)) kids.push_back(nb_host);
    }
    std::sort(kids.begin(), kids.end());
    t.children[host] = kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      t.parent[*it] = host;
      t.depth[*it] = t.depth.at(host) + 1;
      stack.emplace_back(*it, false);
    }
  }
  return t;
}

}  // namespace mcd
