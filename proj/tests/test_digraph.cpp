#include <doctest.h>

#include <set>

#include "edgeideal/betti.hpp"
#include "edgeideal/digraph.hpp"
#include "edgeideal/enumerate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace edgeideal;
using Arcs = std::vector<std::pair<std::size_t, std::size_t>>;

namespace {

Digraph chain(std::size_t c) {
  Arcs arcs;
  for (std::size_t i = 0; i + 1 < c; ++i) arcs.emplace_back(i, i + 1);
  return Digraph::from_arcs(c, arcs);
}

bool betti_cm(const Graph& g) {
  const MonomialIdeal i = edge_ideal(g);
  return oracle::hochster(i).projdim() == height(i);
}

}  // namespace

TEST_SUITE("digraph") {

TEST_CASE("digraph of a perfectly matched graph") {
  CHECK(build_digraph(disjoint_edges(4)).num_arcs() == 0);
  const Digraph p = build_digraph(fixture::matched(2, {{1, 2}}));
  CHECK(p.arcs() == Arcs{{0, 1}});
  const Digraph s = build_digraph(fixture::susp_p7());
  CHECK(s.arcs() == Arcs{{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}});
  CHECK(s.labels[4] == std::pair<std::string, std::string>{"x5", "y5"});
  CHECK_THROWS_AS(build_digraph(fixture::k13()), InvalidInput);
  CHECK_THROWS_AS(build_digraph(cycle_graph(5)), InvalidInput);
  CHECK(to_json(p) == nlohmann::json::parse(R"({"c":2,"arcs":[[1,2]],
      "labels":{"1":{"x":"x1","y":"y1"},"2":{"x":"x2","y":"y2"}}})"));
}

TEST_CASE("collapse") {
  const Digraph two = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
  const Digraph one = collapse(two);
  CHECK(one.c == 1);
  CHECK(one.num_arcs() == 0);
  const Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const Digraph e = collapse(d);
  CHECK(e.c == 2);
  CHECK(e.arcs() == Arcs{{0, 1}});
  CHECK_THROWS_AS(collapse(chain(3)), InvalidInput);
}

TEST_CASE("transitive closure") {
  CHECK(transitive_closure(chain(3)).arcs() == Arcs{{0, 1}, {0, 2}, {1, 2}});
  const Digraph closed = Digraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(transitive_closure(closed) == closed);
  CHECK(transitive_closure(chain(4)).num_arcs() == 6);
  CHECK(is_poset(transitive_closure(chain(5))));
  CHECK_FALSE(is_poset(chain(3)));
}

TEST_CASE("reduction to the Cohen-Macaulay case") {
  const Reduction cm = reduce_to_cm(fixture::staircase(3));
  REQUIRE(cm.steps.size() == 2);
  CHECK(cm.steps[0].kind == "initial");
  CHECK(cm.steps[1].kind == "closure");
  CHECK(cm.result == build_digraph(fixture::staircase(3)));

  const Reduction square = reduce_to_cm(fixture::c4());
  CHECK(square.steps[1].kind == "collapse");
  CHECK(square.result.c == 1);
  CHECK(square.graph.num_edges() == 1);
  CHECK(square.steps.front().e == 2);
  CHECK(multiplicity(square.ideal) == 2);

  for (const Graph& g : {fixture::susp_path(5), fixture::susp_cycle(6), fixture::susp_p7()}) {
    const Reduction r = reduce_to_cm(g);
    for (const auto& step : r.steps) CHECK(step.kind != "collapse");
    CHECK(r.result == transitive_closure(build_digraph(g)));
  }
  CHECK_THROWS_AS(reduce_to_cm(fixture::k13()), InvalidInput);
}

TEST_CASE("antichains") {
  for (std::size_t c = 1; c <= 6; ++c) {
    CHECK(count_antichains(chain(c)) == c + 1);
    CHECK(count_antichains(Digraph::from_arcs(c, {})) == (std::uint64_t{1} << c));
  }
  const Digraph s = build_digraph(fixture::susp_p7());
  CHECK(max_antichain_size(s) == 4);
  CHECK(antichains(s).count() == oracle::antichain_count(7, s.arcs()));
  CHECK_THROWS_AS(antichains(Digraph::from_arcs(2, {{0, 1}, {1, 0}})), InvalidInput);
  const auto fam = antichains(Digraph::from_arcs(3, {{0, 1}}));
  CHECK(to_json(fam)["antichains"] == nlohmann::json::parse("[[],[1],[1,3],[2],[2,3],[3]]"));
}

TEST_CASE("kappa") {
  CHECK(kappa(disjoint_edges(5)) == 5);
  CHECK(kappa(fixture::path3()) == 1);
  CHECK(kappa(fixture::susp_p7()) == 4);
}

TEST_CASE("mu") {
  CHECK(mu(3, 3) == 1);
  CHECK(mu(5, 2) == 1);
  CHECK(mu(1, 3) == 2);
  CHECK(mu(2, 3) == Rational(5, 3));
  for (std::size_t r = 0; r <= 8; ++r)
    for (std::size_t g = 0; g <= 12; ++g) CHECK(mu(r, g) == oracle::mu(r, g));
  for (std::size_t c = 1; c <= 8; ++c) CHECK(2 * mu(1, c) == Rational(c + 1));
}

TEST_CASE("mu inequality") {
  CHECK(mu_inequality_holds(2, 4, 2));
  CHECK(mu_inequality_holds(2, 3, 2));
  const MuComparison hand = mu_inequality(2, 4, 2);
  // 2^2 mu(2,3) + 2 mu(1,2) against 2^2 mu(2,4)
  CHECK(hand.lhs == 4 * oracle::mu(2, 3) + 2 * oracle::mu(1, 2));
  CHECK(hand.rhs == 4 * oracle::mu(2, 4));
  CHECK(hand.hypotheses);
  const MuComparison outside = mu_inequality(1, 3, 2);
  CHECK_FALSE(outside.hypotheses);
  CHECK(outside.holds == (outside.lhs < outside.rhs));
}

TEST_CASE("cohen-macaulay bipartite graphs") {
  const CmVerdict p = is_cm_bipartite(fixture::path3());
  CHECK(p.cohen_macaulay);
  CHECK_FALSE(is_cm_bipartite(fixture::c4()).cohen_macaulay);
  for (const Graph& core : {path_graph(4), cycle_graph(4), cycle_graph(6), fixture::k13()})
    CHECK(is_cm_bipartite(suspension(core)).cohen_macaulay);
  CHECK_THROWS_AS(is_cm_bipartite(cycle_graph(5)), InvalidInput);

  for (const Graph& g : enumerate_bipartite_up_to(8)) {
    CAPTURE(to_json(g).dump());
    const CmVerdict v = is_cm_bipartite(g);
    CHECK(v.cohen_macaulay == betti_cm(g));
    if (!v.cohen_macaulay) continue;
    // witness: x_i y_j edges only for j >= i
    std::map<std::string, std::size_t> xi, yi;
    for (std::size_t k = 0; k < v.labeling.size(); ++k) {
      xi[v.labeling[k].first] = k;
      yi[v.labeling[k].second] = k;
    }
    REQUIRE(2 * v.labeling.size() == g.num_vertices());
    for (const Edge& e : g.edges()) {
      std::string a = g.name(e.u), b = g.name(e.v);
      if (!xi.count(a)) std::swap(a, b);
      REQUIRE(xi.count(a));
      REQUIRE(yi.count(b));
      CHECK(yi[b] >= xi[a]);
    }
    CHECK(kappa(g) == induced_matching_number(g));
  }
}

TEST_CASE("multiplicity from antichains") {
  const Graph ci = disjoint_edges(4);
  const Digraph d = build_digraph(ci);
  CHECK(antichain_multiplicity(d) == 16);
  // the empty antichain labels the prime generated by the x side
  const auto primes = unmixed_primes_from_antichains(d);
  const Graph h = bipartite_graph_of(d);
  CHECK(std::count(primes.begin(), primes.end(), h.mask_of({"x1", "x2", "x3", "x4"})) == 1);

  const Digraph closed = transitive_closure(chain(5));
  CHECK(antichain_multiplicity(closed) == 6);
  CHECK(oracle::covers(edge_ideal(bipartite_graph_of(closed))).second == 6);
  CHECK_THROWS_AS(antichain_multiplicity(chain(3)), InvalidInput);

  for (const Graph& g : enumerate_perfectly_matched(4)) {
    const CmVerdict v = is_cm_bipartite(g);
    if (!v.cohen_macaulay) continue;
    CAPTURE(to_json(g).dump());
    Matching m;
    for (const auto& [x, y] : v.labeling) {
      const std::size_t a = g.require_index(x), b = g.require_index(y);
      m.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    const Digraph poset = build_digraph(g, m);
    REQUIRE(is_poset(poset));
    const Graph relabelled = bipartite_graph_of(poset);
    auto from_antichains = unmixed_primes_from_antichains(poset);
    auto covers = oracle::minimal_covers(oracle::edge_masks(relabelled), relabelled.num_vertices());
    std::erase_if(covers, [&](VertexMask c) { return popcount(c) != poset.c; });
    std::sort(from_antichains.begin(), from_antichains.end());
    std::sort(covers.begin(), covers.end());
    CHECK(from_antichains == covers);
  }
}

TEST_CASE("reduction invariants on perfectly matched graphs") {
  for (const Graph& g : enumerate_perfectly_matched(5)) {
    CAPTURE(to_json(g).dump());
    const Reduction r = reduce_to_cm(g);
    const std::size_t e = oracle::covers(edge_ideal(g)).second;
    for (std::size_t k = 1; k < r.steps.size(); ++k) {
      CHECK(r.steps[k].e == e);
      CHECK(r.steps[k].kappa <= r.steps[k - 1].kappa);
      CHECK(r.steps[k].height <= r.steps[k - 1].height);
    }
    CHECK(is_poset(r.result));
    CHECK(oracle::antichain_count(r.result.c, r.result.arcs()) == e);
    CHECK(oracle::covers(r.ideal).second == e);
  }
}

}  // TEST_SUITE
