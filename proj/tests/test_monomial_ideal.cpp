#include <doctest.h>

#include "edgeideal/betti.hpp"
#include "edgeideal/enumerate.hpp"
#include "edgeideal/monomial_ideal.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace edgeideal;
using fixture::ideal;

namespace {

std::vector<std::string> gens(const MonomialIdeal& i) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < i.num_generators(); ++k) out.push_back(i.monomial_string(k));
  return out;
}

MonomialIdeal coprime_quadratics(std::size_t c) { return edge_ideal(disjoint_edges(c)); }

}  // namespace

TEST_SUITE("monomial-ideal") {

TEST_CASE("parsing and minimalization") {
  const MonomialIdeal i = ideal("a b\nb c");
  CHECK(i.num_generators() == 2);
  CHECK(i.is_square_free_quadratic());
  CHECK(i.variables() == std::vector<std::string>{"a", "b", "c"});

  const MonomialIdeal j = ideal("a b\na b c");
  CHECK(j.num_generators() == 1);
  CHECK(j.support(0) == 0b011);

  const MonomialIdeal x = ideal("x x");
  CHECK_FALSE(x.is_square_free());
  CHECK(x.generator(0) == Exponents{2});
  CHECK(x.is_quadratic());

  const MonomialIdeal ordered = parse_monomial_list("b c\n", std::vector<std::string>{"a", "b", "c"});
  CHECK(ordered.num_variables() == 3);
  CHECK(ordered.support(0) == 0b110);
  CHECK_THROWS_AS(parse_monomial_list("d\n", std::vector<std::string>{"a"}), ParseError);
  CHECK(ideal("# nothing\n").is_zero());
}

TEST_CASE("json round trip") {
  for (const MonomialIdeal& i : {ideal("a b\nb c"), ideal("x x y\nx y y\n"), fixture::aux_j()}) {
    CHECK(ideal_from_json(to_json(i)) == i);
  }
  CHECK(to_json(ideal("a b\nb c"))["generators"] == nlohmann::json::parse(R"([["a","b"],["b","c"]])"));
}

TEST_CASE("edge ideals and graphs") {
  CHECK(gens(edge_ideal(fixture::parse("a b"))) == gens(ideal("a b")));
  const Graph p = graph_of(ideal("a b\nb c"));
  CHECK(p == fixture::parse("a b\nb c"));
  const Graph s = fixture::susp_cycle(6);
  CHECK(graph_of(edge_ideal(s)) == s);
  CHECK_THROWS_AS(graph_of(ideal("a b c")), InvalidInput);
  CHECK_THROWS_AS(graph_of(ideal("a a")), InvalidInput);
}

TEST_CASE("polarization") {
  const MonomialIdeal p = polarize(ideal("x x"));
  CHECK(p.is_square_free());
  CHECK(p.variables() == std::vector<std::string>{"x#1", "x#2"});
  CHECK(p.num_generators() == 1);
  CHECK(p.support(0) == 0b11);

  const MonomialIdeal sf = ideal("a b\nb c");
  CHECK(polarize(sf) == sf);

  const MonomialIdeal q = ideal("x x y\nx y y\n");
  const BettiTable polarized = betti_table(polarize(q));
  const BettiTable taylor = taylor_oracle_betti(q);
  CHECK(polarized.graded == taylor.graded);
}

TEST_CASE("colon and sum by a variable") {
  const MonomialIdeal i = ideal("a b\nb c");
  CHECK(gens(colon_by_var(i, "b")) == std::vector<std::string>{"a", "c"});
  CHECK(gens(add_var(i, "a")) == std::vector<std::string>{"a", "bc"});
  const MonomialIdeal k = ideal("x1 y1\nx1 y5\nx2 y5\n");
  CHECK(gens(colon_by_var(k, "x1")) == std::vector<std::string>{"y1", "y5"});
  CHECK_THROWS(colon_by_var(i, "z"));
  CHECK_THROWS(add_var(i, "z"));
}

TEST_CASE("height and essential height") {
  CHECK(height(ideal("a b")) == 1);
  for (std::size_t c = 1; c <= 5; ++c) CHECK(height(coprime_quadratics(c)) == c);
  CHECK(height(edge_ideal(cycle_graph(6))) == 3);
  CHECK(height(edge_ideal(cycle_graph(6))) == vertex_cover_number(cycle_graph(6)));
  CHECK(height(MonomialIdeal{}) == 0);

  CHECK(essential_height(ideal("x\na b")) == 1);
  const MonomialIdeal q = edge_ideal(fixture::susp_p7());
  CHECK(essential_height(q) == static_cast<long>(height(q)));
}

TEST_CASE("rho") {
  for (const Graph& g : {fixture::c4(), fixture::k13(), fixture::susp_p7(), cycle_graph(7)})
    CHECK(rho(edge_ideal(g)) == matching_number(g));
  CHECK(rho(ideal("a b\nb c\nc d")) == 2);
  CHECK(oracle::rho(ideal("a b\nb c\nc d")) == 2);
}

TEST_CASE("taylor twists") {
  for (std::size_t c = 1; c <= 5; ++c) {
    const auto t = taylor_twists(coprime_quadratics(c), TwistMethod::Brute);
    for (std::size_t l = 1; l <= c; ++l) CHECK(t.values[l - 1] == 2 * l);
  }
  CHECK(taylor_twists(ideal("a b\nb c"), TwistMethod::Brute).values == std::vector<std::size_t>{2, 3});
  const MonomialIdeal s5 = edge_ideal(fixture::susp_path(5));
  const auto brute = taylor_twists(s5, TwistMethod::Brute);
  const auto closed = taylor_twists(s5, TwistMethod::ClosedForm);
  CHECK(brute.values == closed.values);
  CHECK(brute.values == oracle::twists(s5, 64));
  CHECK(closed_form_twists(2, 4, 4) == std::vector<std::size_t>{2, 4, 4, 4});
  // K_{1,3} fails the standing hypothesis, so there is no closed form
  CHECK_THROWS(taylor_twists(edge_ideal(fixture::k13()), TwistMethod::ClosedForm));
  CHECK_THROWS_AS(taylor_twists(edge_ideal(path_graph(24)), TwistMethod::Brute, SIZE_MAX, 10), CapExceeded);
}

TEST_CASE("standing hypothesis") {
  for (std::size_t c = 1; c <= 4; ++c) CHECK(check_standing_hypothesis(coprime_quadratics(c)).holds);
  const MonomialIdeal star = edge_ideal(fixture::k13());
  const auto h = check_standing_hypothesis(star);
  CHECK_FALSE(h.holds);
  REQUIRE(h.witness);
  CHECK(h.c == 1);
  // a leaf fails on the sum side: height(I, x) = 2
  CHECK(height(add_var(star, "l1")) == 2);
  for (const Graph& core : {path_graph(4), cycle_graph(5), fixture::k13(), fixture::parse("a b\nb c\nc a\n")})
    CHECK(check_standing_hypothesis(edge_ideal(suspension(core))).holds);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(ideal("a b")) == 2);
  CHECK(multiplicity(edge_ideal(fixture::parse("a b\nb c"))) == 1);
  for (std::size_t c = 1; c <= 6; ++c) CHECK(multiplicity(coprime_quadratics(c)) == (std::size_t{1} << c));
  for (const auto& i : random_square_free_ideals(60, 9, 8, 7)) {
    CAPTURE(to_json(i).dump());
    const auto [c, e] = oracle::covers(i);
    CHECK(height(i) == c);
    CHECK(multiplicity(i) == e);
    CHECK(rho(i) == oracle::rho(i));
  }
}

TEST_CASE("exhaustive identities on perfectly matched graphs") {
  std::size_t graphs = 0;
  for (const Graph& g : enumerate_perfectly_matched(5)) {
    CAPTURE(to_json(g).dump());
    ++graphs;
    const MonomialIdeal i = edge_ideal(g);
    const std::size_t c = height(i);
    const std::size_t e = multiplicity(i);
    REQUIRE(check_standing_hypothesis(i).holds);
    CHECK(2 * rho(i) >= c);
    const auto T = taylor_twists(i, TwistMethod::Brute, c).values;
    std::size_t sum = 0;
    for (std::size_t x = 0; x < i.num_variables(); ++x) {
      const MonomialIdeal colon = colon_by_var(i, x);
      const MonomialIdeal plus = add_var(i, x);
      CHECK(e == multiplicity(colon) + multiplicity(plus));
      sum += multiplicity(plus);
      CHECK(essential_height(colon) <= static_cast<long>(c - g.degree(x)));
      // only the quadratic part of the colon enters the regular sequence
      std::vector<Exponents> quad;
      for (std::size_t k = 0; k < colon.num_generators(); ++k)
        if (colon.degree(k) == 2) quad.push_back(colon.generator(k));
      CHECK(oracle::rho(MonomialIdeal(colon.variables(), quad)) < rho(i));
      const auto Tc = oracle::twists(colon, c);
      const auto Tp = oracle::twists(plus, c);
      for (std::size_t l = 0; l < std::min(Tc.size(), T.size()); ++l) CHECK(Tc[l] <= T[l]);
      for (std::size_t l = 0; l < std::min(Tp.size(), T.size()); ++l) CHECK(Tp[l] <= T[l]);
    }
    CHECK(c * e == sum);
  }
  CHECK(graphs > 100);
}

TEST_CASE("standing hypothesis matches perfect matchings") {
  for (const Graph& g : enumerate_bipartite_up_to(8)) {
    CAPTURE(to_json(g).dump());
    CHECK(check_standing_hypothesis(edge_ideal(g)).holds == is_perfectly_matched(g));
  }
}

TEST_CASE("rho is at least half the height") {
  for (const auto& i : random_square_free_ideals(200, 10, 9, 11)) {
    std::vector<Exponents> quad;
    for (std::size_t k = 0; k < i.num_generators(); ++k)
      if (i.degree(k) == 2) quad.push_back(i.generator(k));
    const MonomialIdeal q(i.variables(), quad);
    CHECK(2 * rho(q) >= height(q));
  }
}

}  // TEST_SUITE
