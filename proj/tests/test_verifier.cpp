#include <doctest.h>

#include "edgeideal/betti.hpp"
#include "edgeideal/enumerate.hpp"
#include "edgeideal/verifier.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

const CheckResult& find(const VerdictReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("hhsu bound") {
  for (std::size_t c = 1; c <= 5; ++c) {
    const CheckResult r = check_hhsu(edge_ideal(disjoint_edges(c)));
    CHECK(r.verdict == Verdict::Equality);
    CHECK(*r.lhs == Rational(std::size_t{1} << c));
    CHECK(r.status == CheckStatus::Proved);
  }
  const CheckResult p = check_hhsu(edge_ideal(fixture::path3()));
  CHECK(p.verdict == Verdict::Equality);
  CHECK(*p.lhs == 3);
  CHECK(*p.rhs == 3);
  const CheckResult s = check_hhsu(edge_ideal(fixture::susp_p7()));
  CHECK(s.verdict == Verdict::Holds);
  CHECK(*s.lhs < *s.rhs);
  // non-bipartite input is only conjectured
  CHECK(check_hhsu(edge_ideal(cycle_graph(5))).status == CheckStatus::Conjectured);
}

TEST_CASE("taylor bound") {
  for (std::size_t c = 1; c <= 5; ++c) CHECK(check_taylor(edge_ideal(disjoint_edges(c))).verdict == Verdict::Equality);
  const CheckResult r = check_taylor(fixture::ideal("a b\nb c"));
  CHECK(r.status == CheckStatus::Proved);
  CHECK(*r.lhs == 1);
  CHECK(*r.rhs == 2);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(check_taylor(fixture::ideal("a b c\nc d")).status == CheckStatus::Conjectured);
}

TEST_CASE("equality characterization") {
  const CheckResult ci = check_equality_characterization(disjoint_edges(3));
  CHECK(ci.verdict == Verdict::Equality);
  CHECK(ci.witnesses == std::vector<std::string>{"complete intersection"});
  CHECK(is_pure(betti_table(edge_ideal(disjoint_edges(3)))));

  const Graph stairs = fixture::staircase(3);
  const CheckResult cm = check_equality_characterization(stairs);
  CHECK(cm.verdict == Verdict::Equality);
  CHECK(cm.witnesses == std::vector<std::string>{"CM with reg 1"});
  CHECK(is_pure(betti_table(edge_ideal(stairs))));

  const CheckResult s5 = check_equality_characterization(fixture::susp_path(5));
  CHECK(s5.verdict == Verdict::Holds);
  CHECK(betti_table(edge_ideal(fixture::susp_path(5))).reg() == 3);
}

TEST_CASE("quasi-pure classification") {
  for (const Graph& g : {fixture::susp_path(5), fixture::susp_path(6), fixture::susp_cycle(6)}) {
    const BettiTable t = betti_table(edge_ideal(g));
    CHECK(t.reg() == 3);
    CHECK(is_quasi_pure(t));
    CHECK(check_quasipure_classification(g).verdict == Verdict::Holds);
  }
  const Graph s7 = fixture::susp_p7();
  CHECK(check_quasipure_classification(s7).verdict == Verdict::Holds);
  CHECK_FALSE(is_quasi_pure(betti_table(edge_ideal(s7))));
  CHECK_FALSE(is_quasi_pure(betti_table(edge_ideal(fixture::susp_cycle(8)))));

  const Graph s4 = fixture::susp_path(4);
  const BettiTable t4 = betti_table(edge_ideal(s4));
  CHECK(t4.reg() == 2);
  CHECK(is_quasi_pure(t4));
  CHECK(check_quasipure_classification(s4).verdict == Verdict::Holds);
  CHECK(check_quasipure_classification(fixture::c4()).verdict == Verdict::NotApplicable);
}

TEST_CASE("hhsl spot checks") {
  for (std::size_t c = 1; c <= 4; ++c) {
    const CheckResult r = check_hhsl_spot(disjoint_edges(c));
    CHECK(r.verdict == Verdict::Equality);
    CHECK(r.status == CheckStatus::Conjectured);
    CHECK_FALSE(r.fatal());
  }
  const CheckResult s5 = check_hhsl_spot(fixture::susp_path(5));
  CHECK(s5.lhs);
  CHECK(s5.rhs);
  CHECK(s5.verdict != Verdict::NotApplicable);
  CHECK(check_hhsl_spot(fixture::path3()).verdict == Verdict::Equality);
  CHECK(check_hhsl_spot(fixture::c4()).verdict == Verdict::NotApplicable);
}

TEST_CASE("fatal only for proved statements") {
  CheckResult r;
  r.status = CheckStatus::Proved;
  r.verdict = Verdict::Fails;
  CHECK(r.fatal());
  r.status = CheckStatus::Conjectured;
  CHECK_FALSE(r.fatal());
  r.status = CheckStatus::Informational;
  CHECK_FALSE(r.fatal());
}

TEST_CASE("registry") {
  const auto& names = registered_checks();
  CHECK(names.front() == "hhsu");
  CHECK(is_registered_check("oracle"));
  CHECK_FALSE(is_registered_check("nope"));
  Subject s(fixture::c4());
  CHECK_THROWS_AS(run_check("nope", s), InvalidInput);
  SweepOptions o;
  o.checks = {"nope"};
  CHECK_THROWS_AS(sweep_small_graphs(o), InvalidInput);
  o.checks = {};
  o.max_vertices = 15;
  CHECK_THROWS_AS(sweep_small_graphs(o), CapExceeded);
}

TEST_CASE("full report on one graph") {
  Subject s(fixture::susp_path(5));
  const VerdictReport rep = make_report(s, registered_checks());
  CHECK_FALSE(rep.has_fatal());
  CHECK(rep.quantities.e == multiplicity(edge_ideal(fixture::susp_path(5))));
  CHECK(rep.quantities.reg == std::optional<std::size_t>{3});
  CHECK(rep.oracle_agreement.at("taylor_complex"));
  CHECK(rep.oracle_agreement.at("antichain_count"));
  CHECK(rep.characteristics == std::vector<std::uint32_t>{0, 2});
  CHECK(find(rep, "cm").verdict == Verdict::Holds);
  const auto j = to_json(rep);
  for (const char* key : {"subject", "canonical", "quantities", "checks", "oracle_agreement", "characteristics"})
    CHECK(j.contains(key));
  CHECK(j["quantities"]["M"].size() == 5);
}

TEST_CASE("lazy quantities") {
  Subject s(fixture::susp_p7());
  const VerdictReport rep = make_report(s, {"multiplicity"});
  CHECK_FALSE(s.has_betti());
  CHECK_FALSE(rep.quantities.reg);
  CHECK(rep.quantities.e == 34);
}

TEST_CASE("sweep on four vertices") {
  SweepOptions o;
  o.max_vertices = 4;
  o.family = SweepFamily::Bipartite;
  std::vector<Graph> seen;
  o.on_report = [&](const VerdictReport& r) { seen.push_back(graph_from_json(r.canonical)); };
  const SweepSummary sum = sweep_small_graphs(o);
  CHECK(sum.ok());
  CHECK(sum.graphs == seen.size());
  bool pair = false, square = false;
  for (const Graph& g : seen) {
    pair |= are_isomorphic(g, disjoint_edges(2));
    square |= are_isomorphic(g, cycle_graph(4));
  }
  CHECK(pair);
  CHECK(square);
  for (const auto& [name, t] : sum.tallies) {
    CAPTURE(name);
    CHECK(t.fails == 0);
  }
  CHECK(sum.tallies.at("oracle").holds == sum.graphs);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  SweepOptions o;
  o.max_vertices = 7;
  o.family = SweepFamily::Bipartite;
  std::string serial, threaded;
  o.on_report = [&](const VerdictReport& r) { serial += to_json(r).dump() + "\n"; };
  const auto a = sweep_small_graphs(o);
  o.verify.jobs = 3;
  o.on_report = [&](const VerdictReport& r) { threaded += to_json(r).dump() + "\n"; };
  const auto b = sweep_small_graphs(o);
  CHECK(serial == threaded);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.ok());
}

TEST_CASE("first strand statement") {
  for (const Graph& g : enumerate_bipartite_up_to(7)) {
    CAPTURE(to_json(g).dump());
    const BettiTable t = betti_table(edge_ideal(g));
    std::size_t top = 0;
    for (std::size_t l = 1; l <= t.projdim(); ++l)
      if (t.m(l) == l + 1) top = l;
    const std::size_t k = oracle::largest_complete_bipartite(g);
    // taken literally the statement is off by one
    CHECK(top != k);
    CHECK(top + 1 == k);
  }
}

TEST_CASE("antichain bound") {
  const AntichainBoundSummary s = verify_antichain_bound(6);
  CHECK(s.ok());
  CHECK(s.violations == 0);
  CHECK(s.equality_mismatches == 0);
  // equality only for chains (r = 1) and antichains (r = c): two per c
  CHECK(s.equalities == 2 * 6 - 1);
}

TEST_CASE("mu grid") {
  const MuGridSummary g = verify_mu_grid(12);
  CHECK(g.ok());
  CHECK(g.triples > 50);
}

TEST_CASE("colon height counterexample search") {
  const auto found = colon_height_counterexamples(4, 1);
  REQUIRE(found.size() == 1);
  const MonomialIdeal& i = found.front();
  CAPTURE(to_json(i).dump());
  const std::size_t c = oracle::covers(i).first;
  bool some_colon_differs = false;
  for (std::size_t x = 0; x < i.num_variables(); ++x) {
    CHECK(oracle::covers(add_var(i, x)).first == c);
    const MonomialIdeal colon = colon_by_var(i, x);
    if (oracle::covers(colon).first != c) some_colon_differs = true;
  }
  CHECK(some_colon_differs);
  for (std::size_t k = 0; k < i.num_generators(); ++k) CHECK(i.degree(k) >= 2);
  CHECK(colon_height_counterexamples(3, 1).empty());
}

}  // TEST_SUITE
