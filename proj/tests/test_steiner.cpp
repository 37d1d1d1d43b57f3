#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"
#include "mcd/oracle.hpp"
#include "mcd/steiner.hpp"

using namespace mcd;
using test::cycle_graph;
using test::path_graph;
using test::star_graph;

namespace {

bool connects(const EdgeSet& edges, const std::vector<int>& terminals) {
  if (terminals.size() <= 1) return true;
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> stack{terminals[0]};
  std::set<int> seen{terminals[0]};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  for (int t : terminals)
    if (!seen.count(t)) return false;
  return true;
}

}  // namespace

TEST_CASE("dreyfus_wagner degenerate cases") {
  Graph p4 = path_graph(4);
  CHECK(dreyfus_wagner(p4, {2}).cost() == 0);
  // Two terminals: shortest path.
  auto two = dreyfus_wagner(p4, {0, 3});
  CHECK(two.cost() == 3);
  CHECK(two.edges == EdgeSet{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("dreyfus_wagner on triangle and star") {
  Graph c3 = cycle_graph(3);
  CHECK(dreyfus_wagner(c3, {0, 1, 2}).cost() == 2);

  Graph k13 = star_graph(3);
  auto s = dreyfus_wagner(k13, {1, 2, 3});
  CHECK(s.cost() == brute_force_steiner(k13, {1, 2, 3}).cost);
  CHECK(s.cost() == 3);
  CHECK(connects(s.edges, {1, 2, 3}));
}

TEST_CASE("dreyfus_wagner guard and disconnection") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(try_dreyfus_wagner(g, {0, 2}).has_value());
  CHECK_THROWS_AS(dreyfus_wagner(g, {0, 2}), InfeasibleError);
  Graph p = path_graph(5);
  CHECK_THROWS_AS(dreyfus_wagner(p, {0, 1, 2, 3}, 3), GuardError);
}

TEST_CASE("dreyfus_wagner matches the exhaustive oracle") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 120; ++it) {
    Graph g = test::random_connected_graph(8, static_cast<int>(rng() % 4), rng);
    if (g.edge_count() > 12) continue;
    int t = 2 + static_cast<int>(rng() % 3);
    std::vector<int> terminals;
    for (int i = 0; i < t; ++i) terminals.push_back(static_cast<int>(rng() % 8));
    auto exact = dreyfus_wagner(g, terminals);
    auto oracle = brute_force_steiner(g, terminals);
    CHECK(exact.cost() == oracle.cost);
    CHECK(connects(exact.edges, terminals));
  }
}

TEST_CASE("steiner_2approx basics") {
  Graph p4 = path_graph(4);
  CHECK(steiner_2approx(p4, {0, 3}).edges == dreyfus_wagner(p4, {0, 3}).edges);

  Graph k13 = star_graph(3);
  CHECK(steiner_2approx(k13, {1, 2, 3}).cost() == dreyfus_wagner(k13, {1, 2, 3}).cost());

  Graph c4 = cycle_graph(4);
  CHECK(steiner_2approx(c4, {0, 2}).cost() == 2);
}

TEST_CASE("approximation within factor two and output pruned") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 80; ++it) {
    Graph g = test::random_connected_graph(9, 1 + static_cast<int>(rng() % 5), rng);
    int t = 2 + static_cast<int>(rng() % 4);
    std::vector<int> terminals;
    for (int i = 0; i < t; ++i) terminals.push_back(static_cast<int>(rng() % 9));
    auto exact = dreyfus_wagner(g, terminals);
    auto approx = steiner_2approx(g, terminals);
    CHECK(connects(approx.edges, terminals));
    CHECK(approx.cost() <= 2 * exact.cost());

    // Pruned: any single removal disconnects some terminal (when the
    // tree is nonempty).
    for (const auto& victim : approx.edges) {
      EdgeSet rest = approx.edges;
      rest.erase(victim);
      CHECK_FALSE(connects(rest, terminals));
    }
  }
}

TEST_CASE("star_to_steiner terminals") {
  Graph p8 = path_graph(8);
  CHECK(star_to_steiner(p8, RequestSet({{0, 1}, {0, 2}})).terminals == std::vector<int>{0, 1, 2});
  CHECK(star_to_steiner(p8, RequestSet({{5, 7}})).terminals == std::vector<int>{5, 7});
  auto wide = star_to_steiner(p8, RequestSet({{3, 1}, {3, 5}, {3, 7}}));
  CHECK(wide.terminals.size() == 4);  // Δ+1 terminals
  CHECK_THROWS_AS(star_to_steiner(p8, RequestSet({{0, 1}, {1, 2}, {2, 3}})),
                  UnsupportedClassError);
}

TEST_CASE("steiner_to_star_dispersal assigns everything to the center") {
  Graph k13 = star_graph(3);
  SteinerTree s{{{0, 1}, {0, 2}, {0, 3}}};
  RequestSet r({{1, 0}, {1, 2}, {1, 3}});  // request star internal at graph leaf 1
  Dispersal d = steiner_to_star_dispersal(s, 1, k13);
  CHECK(d.cost() == 3);
  CHECK(d.at(1).size() == 3);
  CHECK(satisfies(k13, d, r).ok);

  Dispersal empty = steiner_to_star_dispersal(SteinerTree{}, 0, k13);
  CHECK(empty.cost() == 0);
}

TEST_CASE("dispersal_to_steiner collapses duplicates") {
  Graph p3 = path_graph(3);
  Dispersal d(3);
  d.add(0, {0, 1});
  d.add(2, {1, 2});
  CHECK(dispersal_to_steiner(d) == EdgeSet{{0, 1}, {1, 2}});

  Dispersal dup(3);
  dup.add(0, {0, 1});
  dup.add(2, {0, 1});
  CHECK(static_cast<int>(dispersal_to_steiner(dup).size()) < dup.cost());
}

TEST_CASE("solve_star costs") {
  Graph k13 = star_graph(3);
  RequestSet star({{0, 1}, {0, 2}, {0, 3}});
  Dispersal d = solve_star(k13, star, StarMode::Exact);
  CHECK(satisfies(k13, d, star).ok);
  CHECK(d.cost() == brute_force_mcd(k13, star).cost);
  CHECK(d.cost() == 3);

  Graph p3 = path_graph(3);
  CHECK(solve_star(p3, RequestSet({{0, 2}}), StarMode::Auto).cost() == 2);

  CHECK(solve_star(p3, RequestSet{}, StarMode::Auto).cost() == 0);
  CHECK_THROWS_AS(solve_star(path_graph(6), RequestSet({{0, 1}, {0, 2}, {0, 3}}),
                             StarMode::Exact, 3),
                  GuardError);
}

TEST_CASE("reduction round-trip never gains cost") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 60; ++it) {
    Graph g = test::random_connected_graph(7, static_cast<int>(rng() % 4), rng);
    int center = static_cast<int>(rng() % 7);
    std::vector<Edge> reqs;
    for (int v = 0; v < 7 && reqs.size() < 3; ++v)
      if (v != center && rng() % 2) reqs.push_back(make_edge(center, v));
    if (reqs.empty()) continue;
    RequestSet r(reqs);

    Dispersal d = solve_star(g, r, StarMode::Exact);
    REQUIRE(satisfies(g, d, r).ok);
    EdgeSet s = dispersal_to_steiner(d);
    CHECK(static_cast<int>(s.size()) <= d.cost());
    CHECK(connects(s, r.endpoints()));

    RequestGraph h = build_request_graph(r);
    Dispersal back = steiner_to_star_dispersal(SteinerTree{s}, star_center(h), g);
    CHECK(back.cost() == static_cast<int>(s.size()));
    CHECK(satisfies(g, back, r).ok);
  }
}
