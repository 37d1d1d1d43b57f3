#include "mcd/dp_consttree.hpp"

#include <algorithm>

#include "mcd/steiner.hpp"

namespace mcd {

namespace {

// Memoized exact Steiner solve keyed by the canonical terminal set.
// One instance per thread inside the candidate enumeration.
struct SteinerCache {
  const Graph* g;
  int cap;
  std::map<std::vector<int>, std::optional<EdgeSet>> memo;

  const std::optional<EdgeSet>& solve(std::vector<int> terminals) {
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    auto it = memo.find(terminals);
    if (it != memo.end()) return it->second;
    std::optional<EdgeSet> result;
    auto tree = try_dreyfus_wagner(*g, terminals, cap);
    if (tree) result = std::move(tree->edges);
    return memo.emplace(std::move(terminals), std::move(result)).first->second;
  }
};

long long pow_ll(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

DpTable dp_fill(const Graph& g, const RequestSet& r, const DpOptions& opts) {
  r.validate_against(g);
  if (r.empty()) throw Error("dp_fill needs a nonempty request set");

  RequestGraph h = build_request_graph(r);
  Structure s = classify_structure(h.compact);
  if (s.kind != StructureKind::Tree && s.kind != StructureKind::Star)
    throw UnsupportedClassError("request graph is not a tree");
  if (s.max_degree > opts.degree_cap)
    throw UnsupportedClassError("request tree degree " + std::to_string(s.max_degree) +
                                " exceeds cap " + std::to_string(opts.degree_cap));

  const int n = g.vertex_count();
  int root = opts.root.value_or(h.to_host.front());
  RootedTree t = root_tree(h, root);

  DpTable table;
  table.root = root;
  table.order = t.postorder;

  for (int u : t.postorder) {
    const std::vector<int>& kids = t.children.at(u);
    const int gamma = static_cast<int>(kids.size());
    const long long combos = pow_ll(n, gamma);
    std::vector<DpCell> row(n);

#pragma omp parallel if (opts.parallel)
    {
      SteinerCache cache{&g, opts.terminal_cap, {}};
#pragma omp for schedule(dynamic)
      for (int alpha = 0; alpha < n; ++alpha) {
        long long best_cost = kDpInfinity;
        long long best_flat = -1;
        for (long long flat = 0; flat < combos; ++flat) {
          std::vector<int> terminals{u, alpha};
          long long child_cost = 0;
          long long rest = flat;
          bool dead = false;
          for (int k = 0; k < gamma; ++k) {
            int ak = static_cast<int>(rest % n);
            rest /= n;
            terminals.push_back(ak);
            long long cc = table.cells.at(kids[k])[ak].cost;
            if (cc >= kDpInfinity) {
              dead = true;
              break;
            }
            child_cost += cc;
          }
          if (dead) continue;
          const auto& steiner = cache.solve(terminals);
          if (!steiner) continue;
          long long total = static_cast<long long>(steiner->size()) + child_cost;
          if (total < best_cost) {  // first encountered wins on ties
            best_cost = total;
            best_flat = flat;
          }
        }
        if (best_flat < 0) continue;

        DpCell& cell = row[alpha];
        cell.cost = best_cost;
        std::vector<int> terminals{u, alpha};
        long long rest = best_flat;
        for (int k = 0; k < gamma; ++k) {
          int ak = static_cast<int>(rest % n);
          rest /= n;
          terminals.push_back(ak);
          for (const auto& [v, es] : table.cells.at(kids[k])[ak].local)
            cell.local[v].insert(es.begin(), es.end());
        }
        const auto& steiner = cache.solve(terminals);
        if (!steiner->empty()) cell.local[u].insert(steiner->begin(), steiner->end());
      }
    }
    table.cells.emplace(u, std::move(row));
  }
  return table;
}

Dispersal dp_solve(const Graph& g, const RequestSet& r, const DpOptions& opts) {
  if (r.empty()) return Dispersal(g.vertex_count());
  DpTable table = dp_fill(g, r, opts);
  const DpCell& cell = table.cells.at(table.root)[table.root];
  if (cell.cost >= kDpInfinity)
    throw InfeasibleError("some request endpoints are disconnected in G");
  Dispersal d(g.vertex_count());
  for (const auto& [v, es] : cell.local) d.add_all(v, es);
  return d;
}

}  // namespace mcd
