#include "mcd/approx_tree.hpp"

#include <algorithm>

namespace mcd {

ParityPartition depth_parity_partition(const RootedTree& t, const RequestSet& r) {
  ParityPartition p;
  std::vector<Edge> even, odd;
  for (const Edge& req : r.requests()) {
    auto du = t.depth.find(req.first);
    auto dv = t.depth.find(req.second);
    if (du == t.depth.end() || dv == t.depth.end())
      throw Error("request endpoint not in the rooted tree");
    // Every request must be a parent-child pair of H_R.
    bool tree_edge = (t.parent.at(req.first) == req.second) ||
                     (t.parent.at(req.second) == req.first);
    if (!tree_edge) throw Error("request is not an edge of the rooted request tree");
    int shallow = du->second < dv->second ? du->second : dv->second;
    p.parity[req] = shallow % 2;
    (shallow % 2 == 0 ? even : odd).push_back(req);
  }
  p.even = RequestSet(even);
  p.odd = RequestSet(odd);
  return p;
}

std::vector<RequestSet> request_components(const RequestSet& r) {
  if (r.empty()) return {};
  RequestGraph h = build_request_graph(r);
  const int k = h.compact.vertex_count();
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : h.compact.neighbors(x))
        if (comp[y] == -1) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<Edge>> buckets(ncomp);
  for (const Edge& req : r.requests())
    buckets[comp[h.compact_of(req.first)]].push_back(req);
  std::vector<RequestSet> out;
  for (auto& b : buckets) out.emplace_back(b);
  return out;
}

std::vector<RequestSet> star_components(const RequestSet& ri) {
  std::vector<RequestSet> comps = request_components(ri);
  for (const RequestSet& c : comps) {
    RequestGraph h = build_request_graph(c);
    if (classify_structure(h.compact).kind != StructureKind::Star)
      throw Error("parity class component is not a star");
  }
  return comps;
}

namespace {

Dispersal solve_star_forest(const Graph& g, const RequestSet& ri, StarMode mode, int cap) {
  Dispersal d(g.vertex_count());
  for (const RequestSet& comp : star_components(ri)) d = unite(d, solve_star(g, comp, mode, cap));
  return d;
}

}  // namespace

TreeApproxBreakdown solve_tree_approx_detail(const Graph& g, const RequestSet& r, StarMode mode,
                                             std::optional<int> root, int terminal_cap) {
  r.validate_against(g);
  TreeApproxBreakdown out{Dispersal(g.vertex_count()), Dispersal(g.vertex_count()),
                          Dispersal(g.vertex_count())};
  if (r.empty()) return out;

  RequestGraph h = build_request_graph(r);
  auto kind = classify_structure(h.compact).kind;
  if (kind == StructureKind::General)
    throw UnsupportedClassError("request graph is not a forest of trees");

  std::vector<Edge> even, odd;
  for (const RequestSet& comp : request_components(r)) {
    RequestGraph hc = build_request_graph(comp);
    int comp_root = hc.to_host.front();
    if (root && hc.contains_host(*root)) comp_root = *root;
    RootedTree t = root_tree(hc, comp_root);
    ParityPartition p = depth_parity_partition(t, comp);
    even.insert(even.end(), p.even.requests().begin(), p.even.requests().end());
    odd.insert(odd.end(), p.odd.requests().begin(), p.odd.requests().end());
  }

  out.even_part = solve_star_forest(g, RequestSet(even), mode, terminal_cap);
  out.odd_part = solve_star_forest(g, RequestSet(odd), mode, terminal_cap);
  out.result = unite(out.even_part, out.odd_part);
  return out;
}

Dispersal solve_tree_approx(const Graph& g, const RequestSet& r, StarMode mode,
                            std::optional<int> root, int terminal_cap) {
  return solve_tree_approx_detail(g, r, mode, root, terminal_cap).result;
}

}  // namespace mcd
