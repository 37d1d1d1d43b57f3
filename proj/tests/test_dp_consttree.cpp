#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mcd/dp_consttree.hpp"
#include "mcd/oracle.hpp"

using namespace mcd;
using test::path_graph;
using test::star_graph;

TEST_CASE("dp_solve trivial cases") {
  Graph p4 = path_graph(4);
  CHECK(dp_solve(p4, RequestSet{}).cost() == 0);

  // Single request costs the shortest-path length.
  CHECK(dp_solve(p4, RequestSet({{0, 3}})).cost() == 3);

  Graph p3 = path_graph(3);
  RequestSet chain({{0, 1}, {1, 2}});
  Dispersal d = dp_solve(p3, chain);
  CHECK(satisfies(p3, d, chain).ok);
  CHECK(d.cost() == brute_force_mcd(p3, chain).cost);
  CHECK(d.cost() == 2);

  Graph k13 = star_graph(3);
  RequestSet star({{0, 1}, {0, 2}, {0, 3}});
  DpOptions rooted_center;
  rooted_center.root = 0;
  CHECK(dp_solve(k13, star, rooted_center).cost() == 3);
}

TEST_CASE("dp_solve errors") {
  Graph p6 = path_graph(6);
  // Degree-4 star request exceeds the default cap of 3.
  Graph k14 = star_graph(4);
  RequestSet wide({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_THROWS_AS(dp_solve(k14, wide), UnsupportedClassError);
  DpOptions relaxed;
  relaxed.degree_cap = 4;
  CHECK(dp_solve(k14, wide, relaxed).cost() == 4);

  // Cyclic request graph is not a tree.
  CHECK_THROWS_AS(dp_solve(p6, RequestSet({{0, 1}, {1, 2}, {0, 2}})), UnsupportedClassError);

  // Disconnected endpoints.
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(dp_solve(split, RequestSet({{1, 2}})), InfeasibleError);
}

TEST_CASE("dp table cells: leaf recurrence base") {
  // H_R = path 0-1-2 rooted at 2; child of 1 is 0.
  Graph p3 = path_graph(3);
  RequestSet chain({{0, 1}, {1, 2}});
  DpOptions opts;
  opts.root = 2;
  DpTable table = dp_fill(p3, chain, opts);

  // Leaf 0: cell[0][alpha] holds the shortest 0->alpha path at vertex 0.
  CHECK(table.cells.at(0)[0].cost == 0);
  CHECK(table.cells.at(0)[0].local.empty());
  CHECK(table.cells.at(0)[1].cost == 1);
  CHECK(table.cells.at(0)[2].cost == 2);

  // cell[1][1]: best over alpha_0 of |path(1,alpha_0)| + cost(cell[0][alpha_0]).
  // Hand enumeration over alpha_0 in {0,1,2} gives 1.
  CHECK(table.cells.at(1)[1].cost == 1);

  CHECK(table.root == 2);
  CHECK(table.cells.at(2)[2].cost == brute_force_mcd(p3, chain).cost);
}

TEST_CASE("dp equals oracle on seeded random instances") {
  std::mt19937_64 rng(101);
  int tested = 0;
  for (int it = 0; it < 200 && tested < 60; ++it) {
    GenParams gp;
    gp.n = 6;
    gp.requests = 1 + static_cast<int>(rng() % 3);
    gp.delta = 2;
    gp.extra_edges = static_cast<int>(rng() % 4);
    Instance inst = generate_instance(GenKind::TreeRequest, gp, rng());
    if (inst.graph.edge_count() > 8) continue;
    ++tested;

    Dispersal d = dp_solve(inst.graph, inst.requests);
    CHECK(satisfies(inst.graph, d, inst.requests).ok);
    CHECK(d.cost() == brute_force_mcd(inst.graph, inst.requests).cost);

    // Well-satisfaction invariant: every request has a connecting point.
    for (const Edge& req : inst.requests.requests())
      CHECK(connecting_point(inst.graph, d, req.first, req.second).has_value());
  }
  CHECK(tested >= 30);
}

TEST_CASE("dp cost is root independent") {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 15; ++it) {
    GenParams gp;
    gp.n = 6;
    gp.requests = 2 + static_cast<int>(rng() % 2);
    gp.delta = 3;
    Instance inst = generate_instance(GenKind::TreeRequest, gp, rng());

    std::optional<int> base_cost;
    for (int root : inst.requests.endpoints()) {
      DpOptions opts;
      opts.root = root;
      int c = dp_solve(inst.graph, inst.requests, opts).cost();
      if (!base_cost) base_cost = c;
      CHECK(c == *base_cost);
    }
  }
}

TEST_CASE("parallel and serial enumeration agree") {
  std::mt19937_64 rng(202);
  for (int it = 0; it < 10; ++it) {
    GenParams gp;
    gp.n = 7;
    gp.requests = 2 + static_cast<int>(rng() % 3);
    gp.delta = 3;
    Instance inst = generate_instance(GenKind::TreeRequest, gp, rng());

    DpOptions par;
    DpOptions ser;
    ser.parallel = false;
    CHECK(dp_solve(inst.graph, inst.requests, par) == dp_solve(inst.graph, inst.requests, ser));
  }
}

TEST_CASE("cell soundness on a sampled table") {
  Graph g = path_graph(5);
  RequestSet r({{0, 2}, {2, 4}});
  DpTable table = dp_fill(g, r, {});
  for (const auto& [u, row] : table.cells) {
    for (int alpha = 0; alpha < g.vertex_count(); ++alpha) {
      const DpCell& cell = row[alpha];
      if (cell.cost >= kDpInfinity) continue;
      long long total = 0;
      for (const auto& [v, es] : cell.local) total += static_cast<long long>(es.size());
      CHECK(total == cell.cost);
      // D_u alone must reach alpha.
      Dispersal only_u(g.vertex_count());
      if (cell.local.count(u)) only_u.add_all(u, cell.local.at(u));
      CHECK(satisfies_request(g, only_u, u, alpha));
      // And the cell is feasible for its subtree requests (H_R is the
      // path 0-2-4 rooted at 0, so subtree(2) carries request {2,4}).
      if (u == 2 || u == 0) {
        Dispersal d(g.vertex_count());
        for (const auto& [v, es] : cell.local) d.add_all(v, es);
        CHECK(satisfies_request(g, d, 2, 4));
      }
    }
  }
}
