#include "edgeideal/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/parallel.hpp"

namespace edgeideal {

namespace {

std::string rational_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

Rational factorial(std::size_t c) {
  Rational f = 1;
  for (std::size_t k = 2; k <= c; ++k) f *= k;
  return f;
}

// prod_{l=1}^{c} v_l / c!
Rational product_bound(const std::vector<std::size_t>& v, std::size_t c) {
  Rational p = 1;
  for (std::size_t l = 0; l < c; ++l) p *= v[l];
  return p / factorial(c);
}

Verdict compare(const Rational& lhs, const Rational& rhs, const std::string& relation) {
  if (lhs == rhs) return Verdict::Equality;
  const bool ok = relation == "<=" ? lhs < rhs : lhs > rhs;
  return ok ? Verdict::Holds : Verdict::Fails;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Collects the sub-assertions of a composite check.
class Expect {
 public:
  template <class F>
  void operator()(bool ok, F&& message) {
    ++tested_;
    if (!ok && failures_.size() < 8) failures_.push_back(message());
    if (!ok) failed_ = true;
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  CheckResult finish(std::string name, CheckStatus status) {
    CheckResult r;
    r.name = std::move(name);
    r.status = status;
    if (tested_ == 0) {
      r.verdict = Verdict::NotApplicable;
    } else {
      r.verdict = failed_ ? Verdict::Fails : Verdict::Holds;
    }
    r.witnesses = std::move(failures_);
    for (auto& n : notes_) r.witnesses.push_back(std::move(n));
    return r;
  }

 private:
  std::size_t tested_ = 0;
  bool failed_ = false;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

CheckResult not_applicable(std::string name, CheckStatus status, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.status = status;
  r.verdict = Verdict::NotApplicable;
  r.witnesses.push_back(std::move(why));
  return r;
}

BettiOptions betti_options(const VerifyOptions& o, std::uint32_t characteristic) {
  BettiOptions b;
  b.characteristic = characteristic;
  b.cap_n = o.cap_n;
  b.jobs = o.jobs;
  return b;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  VertexMask seen = 0;
  for (VertexMask s : ideal.supports()) {
    if (s & seen) return false;
    seen |= s;
  }
  return true;
}

// rho of the quadratic generators only; the linear ones of a colon are
// left out.
std::size_t quadratic_rho(const MonomialIdeal& ideal) {
  std::vector<Exponents> gens;
  for (std::size_t k = 0; k < ideal.num_generators(); ++k)
    if (ideal.degree(k) == 2) gens.push_back(ideal.generator(k));
  return gens.empty() ? 0 : rho(MonomialIdeal(ideal.variables(), std::move(gens)));
}

const std::vector<Graph>& quasi_pure_exceptions() {
  static const std::vector<Graph> graphs{suspension(path_graph(5)), suspension(path_graph(6)),
                                         suspension(cycle_graph(6))};
  return graphs;
}

// ---------------------------------------------------------------- checks

CheckResult check_oracle(Subject& s) {
  const auto& ideal = s.ideal();
  if (ideal.num_generators() > s.options().cap_m)
    return not_applicable("oracle", CheckStatus::Proved, "too many generators for the Taylor complex");
  Expect expect;
  const BettiTable taylor = taylor_oracle_betti(ideal, s.options().characteristic, s.options().cap_m);
  expect(same_betti_numbers(taylor, s.betti()), [] { return std::string("Hochster and Taylor tables differ"); });
  return expect.finish("oracle", CheckStatus::Proved);
}

CheckResult check_characteristic(Subject& s) {
  Expect expect;
  const auto& a = s.betti();
  const auto& b = s.betti_second();
  expect(same_betti_numbers(a, b), [&] {
    return "Betti numbers differ between characteristic " + std::to_string(a.characteristic) + " and " +
           std::to_string(b.characteristic);
  });
  return expect.finish("char", CheckStatus::Informational);
}

CheckResult check_multiplicity(Subject& s) {
  if (!s.bipartite_graph() || !s.perfectly_matched())
    return not_applicable("multiplicity", CheckStatus::Proved, "needs a perfectly matched bipartite graph");
  const Graph& g = *s.graph();
  Expect expect;
  const std::size_t c = s.c();
  std::vector<VertexMask> covers;
  for (VertexMask cover : enumerate_minimal_vertex_covers(g))
    if (popcount(cover) == c) covers.push_back(cover);
  std::sort(covers.begin(), covers.end(), lex_less);
  const std::size_t e = covers.size();
  expect(e == s.e(), [&] { return "cover count " + std::to_string(e) + " vs hitting sets " + std::to_string(s.e()); });

  const Reduction red = reduce_to_cm(g);
  for (std::size_t k = 0; k < red.steps.size(); ++k) {
    const auto& step = red.steps[k];
    expect(step.e == e, [&] { return step.kind + " step " + std::to_string(k) + ": e = " + std::to_string(step.e); });
    if (k > 0) {
      const auto& prev = red.steps[k - 1];
      expect(step.height <= prev.height, [&] { return step.kind + " step raised the height"; });
      expect(step.kappa <= prev.kappa, [&] { return step.kind + " step raised kappa"; });
    }
  }
  const std::size_t count = antichain_multiplicity(red.result);
  expect(count == e, [&] { return "antichains " + std::to_string(count) + " vs covers " + std::to_string(e); });
  auto from_antichains = unmixed_primes_from_antichains(red.result);
  auto direct = unmixed_primes(red.ideal);
  std::sort(direct.begin(), direct.end(), lex_less);
  expect(from_antichains == direct, [] { return std::string("antichain primes differ from the reduced covers"); });

  const Digraph d = build_digraph(g);
  if (is_poset(d)) {
    // Map the primes of bipartite_graph_of(d) back onto g's vertices.
    std::vector<std::size_t> xs(d.c), ys(d.c);
    for (std::size_t i = 0; i < d.c; ++i) {
      xs[i] = g.require_index(d.labels[i].first);
      ys[i] = g.require_index(d.labels[i].second);
    }
    std::vector<VertexMask> mapped;
    for (VertexMask p : unmixed_primes_from_antichains(d)) {
      VertexMask q = 0;
      for (std::size_t i = 0; i < d.c; ++i) {
        if (p & bit(i)) q |= bit(xs[i]);
        if (p & bit(i + d.c)) q |= bit(ys[i]);
      }
      mapped.push_back(q);
    }
    std::sort(mapped.begin(), mapped.end(), lex_less);
    expect(mapped == covers, [] { return std::string("antichain primes differ from the minimal covers"); });
  }
  CheckResult r = expect.finish("multiplicity", CheckStatus::Proved);
  r.lhs = Rational(e);
  r.rhs = Rational(count);
  r.relation = "=";
  r.witnesses.push_back("reduction steps " + std::to_string(red.steps.size()) + ", e = " + std::to_string(e));
  return r;
}

CheckResult check_chains(Subject& s) {
  if (!s.bipartite_graph() || !s.perfectly_matched())
    return not_applicable("chains", CheckStatus::Proved, "needs a perfectly matched bipartite graph");
  const Graph& g = *s.graph();
  const Digraph d = build_digraph(g);
  const auto reach = reachability(d);
  Expect expect;
  std::vector<std::size_t> xs(d.c), ys(d.c);
  for (std::size_t i = 0; i < d.c; ++i) {
    xs[i] = g.require_index(d.labels[i].first);
    ys[i] = g.require_index(d.labels[i].second);
  }
  for (VertexMask p : unmixed_primes(s.square_free())) {
    for (std::size_t i = 0; i < d.c; ++i) {
      const bool has_x = p & bit(xs[i]);
      const bool has_y = p & bit(ys[i]);
      expect(has_x != has_y, [&] { return "prime holds both or neither of " + d.labels[i].first + ", " + d.labels[i].second; });
      if (!has_y) continue;
      for (std::size_t j : indices_of(reach[i]))
        expect((p & bit(ys[j])) != 0, [&] { return "y chain broken from " + d.labels[i].second + " to " + d.labels[j].second; });
    }
  }
  return expect.finish("chains", CheckStatus::Proved);
}

CheckResult check_strands(Subject& s) {
  const auto& ideal = s.square_free();
  if (ideal.is_unit()) return not_applicable("strands", CheckStatus::Proved, "unit ideal");
  const BettiTable& t = s.betti();
  const std::size_t c = s.c();
  Expect expect;
  expect(t.beta(0, 0) == 1, [] { return std::string("beta_{0,0} != 1"); });
  for (const auto& [key, v] : t.graded)
    expect(key.second >= key.first, [&] { return "beta_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "} below the diagonal"; });
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> sums;
  for (const auto& [key, v] : t.multigraded) sums[{key.first, popcount(key.second)}] += v;
  expect(sums == t.graded, [] { return std::string("graded entries are not sums of multigraded ones"); });

  const auto M = t.M_list();
  for (std::size_t l = 2; l <= c && l <= M.size(); ++l)
    expect(M[l - 1] > M[l - 2], [&] { return "M_" + std::to_string(l) + " does not exceed M_" + std::to_string(l - 1); });
  if (s.graph() && ideal.is_square_free_quadratic()) {
    const std::size_t r = *s.r();
    for (std::size_t l = 1; l <= c && l <= M.size(); ++l) {
      if (l <= r) expect(M[l - 1] == 2 * l, [&] { return "M_" + std::to_string(l) + " != 2l below r"; });
      if (l >= r) expect(M[l - 1] >= l + r, [&] { return "M_" + std::to_string(l) + " < l + r"; });
    }
  }
  return expect.finish("strands", CheckStatus::Proved);
}

CheckResult check_first_strand(Subject& s) {
  if (!s.graph()) return not_applicable("first-strand", CheckStatus::Proved, "needs an edge ideal");
  const Graph& g = *s.graph();
  if (g.num_edges() == 0) return not_applicable("first-strand", CheckStatus::Proved, "no edges");
  const auto& ideal = s.square_free();
  const BettiTable& t = s.betti();
  Expect expect;
  const std::uint64_t total = std::uint64_t{1} << g.num_vertices();
  for (std::uint64_t sigma = 0; sigma < total; ++sigma) {
    if (popcount(sigma) < 2) continue;
    const bool strand = t.beta_at(popcount(sigma) - 1, sigma) != 0;
    expect(strand == complete_multipartite_strand(ideal, sigma), [&] {
      return "complete multipartite test disagrees on " + nlohmann::json(g.names_of(sigma)).dump();
    });
  }
  if (g.is_bipartite()) {
    std::size_t top = 0;
    for (std::size_t l = 1; l <= t.projdim(); ++l)
      if (t.m(l) == l + 1) top = l;
    const std::size_t largest = largest_complete_bipartite(g);
    expect(top + 1 == largest, [&] {
      return "max{l : m_l = l+1} = " + std::to_string(top) + " but the largest complete bipartite subgraph has " +
             std::to_string(largest) + " vertices";
    });
  }
  return expect.finish("first-strand", CheckStatus::Proved);
}

CheckResult check_colon(Subject& s) {
  const auto& ideal = s.square_free();
  if (ideal.is_unit() || ideal.is_zero()) return not_applicable("colon", CheckStatus::Proved, "trivial ideal");
  const std::size_t c = s.c();
  const BettiTable& t = s.betti();
  const auto bo = betti_options(s.options(), s.options().characteristic);
  const auto T = taylor_twists(ideal, TwistMethod::Brute, c, s.options().brute_cap).values;
  Expect expect;
  for (std::size_t x = 0; x < ideal.num_variables(); ++x) {
    const std::string& name = ideal.variables()[x];
    const MonomialIdeal colon = colon_by_var(ideal, x);
    const MonomialIdeal sum = add_var(ideal, x);
    const BettiTable tc = betti_table(colon, bo);
    for (const auto& [J, tj, side] : {std::tuple{&colon, &tc, "colon"}, std::tuple{&sum, (const BettiTable*)nullptr, "sum"}}) {
      const BettiTable own = tj ? BettiTable{} : betti_table(*J, bo);
      const BettiTable& table = tj ? *tj : own;
      for (std::size_t l = 1; l <= c; ++l) {
        const auto mj = table.M(l);
        if (mj) expect(*mj <= t.M(l).value_or(0), [&] { return std::string(side) + " by " + name + " raised M_" + std::to_string(l); });
      }
      const auto TJ = taylor_twists(*J, TwistMethod::Brute, c, s.options().brute_cap).values;
      for (std::size_t l = 1; l <= TJ.size() && l <= T.size(); ++l)
        expect(TJ[l - 1] <= T[l - 1], [&] { return std::string(side) + " by " + name + " raised T_" + std::to_string(l); });
    }
    expect(tc.projdim() <= t.projdim(), [&] { return "colon by " + name + " raised projdim"; });
    for (const auto& [key, v] : tc.multigraded) {
      const auto [l, sigma] = key;
      expect(t.beta_at(l, sigma) != 0 || t.beta_at(l, sigma | bit(x)) != 0,
             [&, l = l] { return "colon by " + name + " has an unsupported entry in homological degree " + std::to_string(l); });
    }
    // Restriction to the other variables.
    const VertexMask w = low_bits(ideal.num_variables()) & ~bit(x);
    const BettiTable tr = betti_table(restrict_to(ideal, w), bo);
    std::map<std::pair<std::size_t, VertexMask>, std::size_t> expected;
    for (const auto& [key, v] : t.multigraded)
      if ((key.second & ~w) == 0) expected[key] = v;
    expect(tr.multigraded == expected, [&] { return "restriction away from " + name + " changed Betti numbers"; });
  }
  return expect.finish("colon", CheckStatus::Proved);
}

CheckResult check_hypothesis(Subject& s) {
  const auto& ideal = s.square_free();
  if (ideal.is_unit() || ideal.is_zero()) return not_applicable("hypothesis", CheckStatus::Proved, "trivial ideal");
  Expect expect;
  const std::size_t c = s.c();
  const StandingHypothesis sh = check_standing_hypothesis(ideal);
  if (s.bipartite_graph())
    expect(sh.holds == s.perfectly_matched(), [&] {
      return std::string("standing hypothesis ") + (sh.holds ? "holds" : "fails") + " but the graph is " +
             (s.perfectly_matched() ? "" : "not ") + "perfectly matched";
    });
  const bool quadratic = ideal.is_square_free_quadratic();
  if (quadratic) expect(2 * s.rho() >= c, [&] { return "rho = " + std::to_string(s.rho()) + " < c/2"; });
  if (sh.holds) {
    const std::size_t e = s.e();
    std::size_t sum = 0;
    for (std::size_t x = 0; x < ideal.num_variables(); ++x) {
      const std::string& name = ideal.variables()[x];
      const MonomialIdeal colon = colon_by_var(ideal, x);
      const std::size_t ea = multiplicity(add_var(ideal, x));
      const std::size_t ec = multiplicity(colon);
      expect(e == ea + ec, [&] { return "e != e(I," + name + ") + e(I:" + name + ")"; });
      sum += ea;
      if (quadratic) {
        expect(quadratic_rho(colon) < s.rho(), [&] { return "rho did not drop under colon by " + name; });
        const long degree = static_cast<long>(s.graph()->degree(x));
        expect(essential_height(colon) <= static_cast<long>(c) - degree,
               [&] { return "essential height of the colon by " + name + " exceeds c - deg"; });
      }
    }
    expect(c * e == sum, [&] { return "c e != sum of e(I,x)"; });
  } else {
    expect.note("standing hypothesis fails at " + ideal.variables()[*sh.witness] + " (" + sh.failed_side + ")");
  }
  return expect.finish("hypothesis", CheckStatus::Proved);
}

CheckResult check_twists(Subject& s) {
  const auto& ideal = s.ideal();
  if (ideal.is_unit() || ideal.is_zero()) return not_applicable("twists", CheckStatus::Proved, "trivial ideal");
  const std::size_t c = s.c();
  TaylorTwists brute;
  try {
    brute = taylor_twists(ideal, TwistMethod::Brute, SIZE_MAX, s.options().brute_cap);
  } catch (const CapExceeded&) {
    brute = taylor_twists(ideal, TwistMethod::Brute, c, s.options().brute_cap);
  }
  const auto& T = brute.values;
  Expect expect;
  expect(T[0] == ideal.max_degree(), [] { return std::string("T_1 is not the largest generator degree"); });
  for (std::size_t l = 2; l <= T.size(); ++l)
    expect(T[l - 1] >= T[l - 2], [&] { return "T_" + std::to_string(l) + " decreased"; });
  if (ideal.is_square_free())
    expect(T.back() <= ideal.num_variables(), [] { return std::string("T_l exceeds n"); });

  const auto& sf = s.square_free();
  if (sf.is_square_free_quadratic() && check_standing_hypothesis(sf).holds) {
    const std::size_t n = ideal.num_variables();
    const std::size_t m = ideal.num_generators();
    for (std::size_t l = 2; l <= T.size(); ++l)
      if (T[l - 1] < n) expect(T[l - 1] > T[l - 2], [&] { return "T_" + std::to_string(l) + " stalled below n"; });
    for (std::size_t l = 2; l + 1 <= T.size(); ++l)
      expect(T[l - 1] - T[l - 2] >= T[l] - T[l - 1], [&] { return "increments of T grow at l = " + std::to_string(l); });
    const auto closed = closed_form_twists(s.rho(), n, m);
    for (std::size_t l = 1; l <= c && l <= T.size(); ++l)
      expect(closed[l - 1] == T[l - 1], [&] { return "closed form differs at l = " + std::to_string(l); });
    for (std::size_t l = c + 1; l <= T.size(); ++l)
      if (closed[l - 1] != T[l - 1]) {
        expect.note("closed form differs beyond c at l = " + std::to_string(l));
        break;
      }
  }
  CheckResult r = expect.finish("twists", CheckStatus::Proved);
  r.witnesses.push_back("T = " + join(T));
  return r;
}

CheckResult check_regularity(Subject& s) {
  if (!s.bipartite_graph()) return not_applicable("regularity", CheckStatus::Proved, "needs a bipartite graph");
  const Graph& g = *s.graph();
  if (g.num_edges() == 0) return not_applicable("regularity", CheckStatus::Proved, "no edges");
  Expect expect;
  const std::size_t r = *s.r();
  const std::size_t reg = s.betti().reg();
  expect(reg >= r, [&] { return "reg " + std::to_string(reg) + " < r " + std::to_string(r); });
  if (is_forest(g)) expect(reg == r, [&] { return "forest with reg " + std::to_string(reg) + " != r " + std::to_string(r); });
  if (s.perfectly_matched()) {
    const Digraph d = build_digraph(g);
    const std::size_t kap = coclique_number(d);
    expect(r >= kap, [&] { return "r < kappa"; });
    if (is_acyclic(d)) expect(kap >= max_antichain_size(d), [&] { return "kappa < largest antichain"; });
    if (s.cm_verdict().cohen_macaulay) {
      expect(reg == r, [&] { return "CM graph with reg " + std::to_string(reg) + " != r " + std::to_string(r); });
      expect(r == kap, [&] { return "CM graph with r != kappa"; });
      if (is_poset(d)) expect(r == max_antichain_size(d), [&] { return "CM graph with r != largest antichain"; });
      const auto M = s.betti().M_list();
      for (std::size_t l = r; l >= 1 && l <= s.c() && l <= M.size(); ++l)
        expect(M[l - 1] == l + r, [&] { return "CM graph with M_" + std::to_string(l) + " != l + r"; });
    }
  }
  CheckResult res = expect.finish("regularity", CheckStatus::Proved);
  res.witnesses.push_back("reg " + std::to_string(reg) + ", r " + std::to_string(r));
  return res;
}

CheckResult check_cm(Subject& s) {
  if (!s.bipartite_graph()) return not_applicable("cm", CheckStatus::Proved, "needs a bipartite graph");
  Expect expect;
  const bool betti_cm = s.cohen_macaulay();
  const CmVerdict& v = s.cm_verdict();
  expect(betti_cm == v.cohen_macaulay, [&] {
    return std::string("projdim = height says ") + (betti_cm ? "CM" : "not CM") + " but the digraph test says " +
           (v.cohen_macaulay ? "CM" : "not CM");
  });
  if (betti_cm) expect(s.perfectly_matched(), [] { return std::string("CM graph without a perfect matching"); });
  CheckResult r = expect.finish("cm", CheckStatus::Proved);
  r.witnesses.push_back(v.reason);
  return r;
}

// If one perfect matching gives a poset, it is the only perfect matching:
// a second one would differ by a permutation whose cycles are directed
// cycles of the first digraph.
CheckResult check_matching_independence(Subject& s) {
  if (!s.bipartite_graph() || !s.perfectly_matched())
    return not_applicable("matching-independence", CheckStatus::Informational, "needs a perfectly matched bipartite graph");
  Expect expect;
  const auto& per = s.cm_verdict().per_matching;
  std::size_t posets = 0;
  for (const auto& mv : per) posets += mv.acyclic && mv.transitively_closed;
  std::size_t acyclic = 0;
  for (const auto& mv : per) acyclic += mv.acyclic;
  expect(acyclic == 0 || per.size() == 1, [&] {
    return std::to_string(acyclic) + " of " + std::to_string(per.size()) + " perfect matchings give acyclic digraphs";
  });
  CheckResult r = expect.finish("matching-independence", CheckStatus::Informational);
  r.witnesses.push_back(std::to_string(per.size()) + " perfect matchings, " + std::to_string(posets) + " posets");
  return r;
}

using CheckFn = CheckResult (*)(Subject&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"hhsu", [](Subject& s) { return check_hhsu(s); }},
      {"taylor", [](Subject& s) { return check_taylor(s); }},
      {"equality", [](Subject& s) { return check_equality_characterization(s); }},
      {"quasipure", [](Subject& s) { return check_quasipure_classification(s); }},
      {"hhsl", [](Subject& s) { return check_hhsl_spot(s); }},
      {"oracle", check_oracle},
      {"char", check_characteristic},
      {"multiplicity", check_multiplicity},
      {"chains", check_chains},
      {"strands", check_strands},
      {"first-strand", check_first_strand},
      {"colon", check_colon},
      {"hypothesis", check_hypothesis},
      {"twists", check_twists},
      {"regularity", check_regularity},
      {"cm", check_cm},
      {"matching-independence", check_matching_independence},
  };
  return table;
}

// Oracle comparisons recorded in the report's agreement map.
const std::map<std::string, std::string>& oracle_keys() {
  static const std::map<std::string, std::string> keys{
      {"oracle", "taylor_complex"}, {"char", "second_characteristic"},
      {"multiplicity", "antichain_count"}, {"cm", "digraph_poset"}};
  return keys;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Proved: return "PROVED";
    case CheckStatus::Conjectured: return "CONJECTURED";
    case CheckStatus::Informational: return "INFO";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

// ---------------------------------------------------------------- Subject

Subject::Subject(MonomialIdeal ideal, VerifyOptions options, std::string name)
    : name_(std::move(name)), options_(options), ideal_(std::move(ideal)) {
  polarized_ = ideal_.is_square_free() ? ideal_ : polarize(ideal_);
  if (ideal_.is_square_free_quadratic()) graph_ = graph_of(ideal_);
}

Subject::Subject(const Graph& graph, VerifyOptions options, std::string name)
    : name_(std::move(name)), options_(options), ideal_(edge_ideal(graph)), graph_(graph) {
  polarized_ = ideal_;
}

const BettiTable& Subject::betti() {
  if (!betti_) betti_ = betti_table(polarized_, betti_options(options_, options_.characteristic));
  return *betti_;
}

const BettiTable& Subject::betti_second() {
  if (!betti_second_) betti_second_ = betti_table(polarized_, betti_options(options_, options_.second_characteristic));
  return *betti_second_;
}

std::size_t Subject::c() {
  if (!c_) c_ = height(polarized_);
  return *c_;
}

std::size_t Subject::e() {
  if (!e_) e_ = multiplicity(polarized_);
  return *e_;
}

std::size_t Subject::rho() {
  if (!rho_) rho_ = edgeideal::rho(ideal_);
  return *rho_;
}

std::optional<std::size_t> Subject::r() {
  if (!graph_) return std::nullopt;
  if (!r_) r_ = induced_matching_number(*graph_);
  return r_;
}

const std::vector<std::size_t>& Subject::twists() {
  if (!twists_) twists_ = taylor_twists(ideal_, TwistMethod::Auto, c(), options_.brute_cap).values;
  return *twists_;
}

bool Subject::perfectly_matched() { return graph_ && is_perfectly_matched(*graph_); }

bool Subject::cohen_macaulay() { return is_cohen_macaulay(betti(), polarized_); }

const CmVerdict& Subject::cm_verdict() {
  if (!cm_) {
    if (!bipartite_graph()) throw InvalidInput("the digraph test needs a bipartite graph");
    cm_ = is_cm_bipartite(*graph_);
  }
  return *cm_;
}

// ---------------------------------------------------------------- bounds

CheckResult check_hhsu(Subject& s) {
  const CheckStatus status = s.bipartite_graph() ? CheckStatus::Proved : CheckStatus::Conjectured;
  if (s.ideal().is_unit()) return not_applicable("hhsu", status, "unit ideal");
  const std::size_t c = s.c();
  const auto M = s.betti().M_list();
  CheckResult r;
  r.name = "hhsu";
  r.status = status;
  r.relation = "<=";
  r.lhs = Rational(s.e());
  r.rhs = product_bound(M, c);
  r.verdict = compare(*r.lhs, *r.rhs, r.relation);
  r.witnesses.push_back("M = " + join(std::vector<std::size_t>(M.begin(), M.begin() + static_cast<long>(c))));
  return r;
}

CheckResult check_taylor(Subject& s) {
  const CheckStatus status = s.ideal().is_quadratic() ? CheckStatus::Proved : CheckStatus::Conjectured;
  if (s.ideal().is_unit()) return not_applicable("taylor", status, "unit ideal");
  const std::size_t c = s.c();
  const auto& T = s.twists();
  CheckResult r;
  r.name = "taylor";
  r.status = status;
  r.relation = "<=";
  r.lhs = Rational(s.e());
  r.rhs = product_bound(T, c);
  r.verdict = compare(*r.lhs, *r.rhs, r.relation);
  r.witnesses.push_back("T = " + join(T));
  return r;
}

CheckResult check_equality_characterization(Subject& s) {
  if (!s.bipartite_graph()) return not_applicable("equality", CheckStatus::Proved, "needs a bipartite graph");
  const CheckResult bound = check_hhsu(s);
  const bool equal = bound.verdict == Verdict::Equality;
  const bool ci = is_complete_intersection(s.ideal());
  const bool cm = s.cohen_macaulay();
  const bool reg1 = s.betti().reg() == 1;
  const bool pure = is_pure(s.betti());
  Expect expect;
  expect(equal == (ci || (cm && reg1)), [&] {
    return std::string(equal ? "equality" : "strict inequality") + " with complete intersection " +
           (ci ? "yes" : "no") + ", CM " + (cm ? "yes" : "no") + ", reg " + std::to_string(s.betti().reg());
  });
  if (equal) expect(cm && pure, [] { return std::string("equality case is not CM with a pure resolution"); });
  CheckResult r = expect.finish("equality", CheckStatus::Proved);
  r.lhs = bound.lhs;
  r.rhs = bound.rhs;
  r.relation = bound.relation;
  if (equal) r.witnesses.push_back(ci ? "complete intersection" : "CM with reg 1");
  if (r.verdict == Verdict::Holds && equal) r.verdict = Verdict::Equality;
  return r;
}

CheckResult check_quasipure_classification(Subject& s) {
  if (!s.bipartite_graph()) return not_applicable("quasipure", CheckStatus::Proved, "needs a bipartite graph");
  const Graph& g = *s.graph();
  if (g.num_edges() == 0 || !is_connected(g) || !s.cm_verdict().cohen_macaulay)
    return not_applicable("quasipure", CheckStatus::Proved, "needs a connected CM graph");
  const BettiTable& t = s.betti();
  const bool predicate = t.reg() >= 3 && is_quasi_pure(t);
  bool listed = false;
  for (const Graph& h : quasi_pure_exceptions())
    if (h.num_vertices() == g.num_vertices() && h.num_edges() == g.num_edges() && are_isomorphic(h, g)) listed = true;
  Expect expect;
  expect(predicate == listed, [&] {
    return std::string("reg ") + std::to_string(t.reg()) + (is_quasi_pure(t) ? " quasi-pure" : " not quasi-pure") +
           (listed ? " but listed" : " but not listed");
  });
  CheckResult r = expect.finish("quasipure", CheckStatus::Proved);
  r.witnesses.push_back(std::string("reg ") + std::to_string(t.reg()) + (is_quasi_pure(t) ? ", quasi-pure" : ", not quasi-pure"));
  return r;
}

CheckResult check_hhsl_spot(Subject& s) {
  if (s.ideal().is_unit() || !s.cohen_macaulay())
    return not_applicable("hhsl", CheckStatus::Conjectured, "needs a Cohen-Macaulay quotient");
  const std::size_t c = s.c();
  const auto m = s.betti().m_list();
  CheckResult r;
  r.name = "hhsl";
  r.status = CheckStatus::Conjectured;
  r.relation = ">=";
  r.lhs = Rational(s.e());
  r.rhs = product_bound(m, c);
  r.verdict = compare(*r.lhs, *r.rhs, r.relation);
  r.witnesses.push_back("m = " + join(std::vector<std::size_t>(m.begin(), m.begin() + static_cast<long>(c))));
  return r;
}

CheckResult check_hhsu(const MonomialIdeal& ideal, const VerifyOptions& options) {
  Subject s(ideal, options);
  return check_hhsu(s);
}

CheckResult check_taylor(const MonomialIdeal& ideal, const VerifyOptions& options) {
  Subject s(ideal, options);
  return check_taylor(s);
}

CheckResult check_equality_characterization(const Graph& g, const VerifyOptions& options) {
  Subject s(g, options);
  return check_equality_characterization(s);
}

CheckResult check_quasipure_classification(const Graph& g, const VerifyOptions& options) {
  Subject s(g, options);
  return check_quasipure_classification(s);
}

CheckResult check_hhsl_spot(const Graph& g, const VerifyOptions& options) {
  Subject s(g, options);
  return check_hhsl_spot(s);
}

// ---------------------------------------------------------------- registry

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_registered_check(const std::string& name) {
  const auto& names = registered_checks();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult run_check(const std::string& name, Subject& s) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(s);
  throw InvalidInput("unknown check: " + name);
}

// ---------------------------------------------------------------- reports

bool VerdictReport::has_fatal() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.fatal(); });
}

VerdictReport make_report(Subject& s, const std::vector<std::string>& checks) {
  VerdictReport rep;
  rep.subject = s.name();
  rep.canonical = s.graph() ? to_json(*s.graph()) : to_json(s.ideal());
  rep.characteristics.push_back(s.options().characteristic);
  for (const auto& name : checks) {
    CheckResult r = run_check(name, s);
    auto key = oracle_keys().find(name);
    if (key != oracle_keys().end() && r.verdict != Verdict::NotApplicable)
      rep.oracle_agreement[key->second] = r.verdict != Verdict::Fails;
    if (name == "char") rep.characteristics.push_back(s.options().second_characteristic);
    rep.checks.push_back(std::move(r));
  }
  auto& q = rep.quantities;
  q.n = s.ideal().num_variables();
  q.m = s.ideal().num_generators();
  if (!s.ideal().is_unit()) {
    q.c = s.c();
    q.e = s.e();
    q.rho = s.rho();
    q.r = s.r();
    if (s.has_twists()) q.T = s.twists();
    if (s.has_betti()) {
      const BettiTable& t = s.betti();
      q.reg = t.reg();
      q.projdim = t.projdim();
      q.M = t.M_list();
      q.m_low = t.m_list();
    }
  }
  return rep;
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j{{"name", r.name}, {"status", to_string(r.status)}, {"verdict", to_string(r.verdict)}};
  if (r.lhs) j["lhs"] = rational_string(*r.lhs);
  if (r.rhs) j["rhs"] = rational_string(*r.rhs);
  if (!r.relation.empty()) j["relation"] = r.relation;
  j["witnesses"] = r.witnesses;
  return j;
}

namespace {

nlohmann::json optional_json(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const VerdictReport& r) {
  const auto& q = r.quantities;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"subject", r.subject},
          {"canonical", r.canonical},
          {"quantities",
           {{"n", q.n},
            {"m", q.m},
            {"e", q.e},
            {"c", q.c},
            {"rho", q.rho},
            {"r", optional_json(q.r)},
            {"reg", optional_json(q.reg)},
            {"projdim", optional_json(q.projdim)},
            {"M", q.M},
            {"m_min", q.m_low},
            {"T", q.T}}},
          {"checks", std::move(checks)},
          {"oracle_agreement", r.oracle_agreement},
          {"characteristics", r.characteristics}};
}

// ---------------------------------------------------------------- sweeps

SweepSummary sweep_small_graphs(const SweepOptions& options) {
  if (options.max_vertices > 14) throw CapExceeded("sweeps are capped at 14 vertices");
  std::vector<std::string> checks = options.checks.empty() ? registered_checks() : options.checks;
  for (const auto& name : checks)
    if (!is_registered_check(name)) throw InvalidInput("unknown check: " + name);

  std::vector<Graph> graphs =
      options.family == SweepFamily::PerfectlyMatched
          ? enumerate_perfectly_matched(options.max_vertices / 2, options.connected_only)
          : enumerate_bipartite_up_to(options.max_vertices, {false, options.connected_only});

  SweepSummary summary;
  summary.graphs = graphs.size();
  for (const auto& name : checks) summary.tallies[name];
  // Inner computations stay serial; the sweep itself is the parallel map.
  VerifyOptions inner = options.verify;
  inner.jobs = 1;
  constexpr std::size_t kChunk = 512;
  for (std::size_t begin = 0; begin < graphs.size(); begin += kChunk) {
    const std::size_t end = std::min(graphs.size(), begin + kChunk);
    std::vector<VerdictReport> reports(end - begin);
    parallel_for(end - begin, options.verify.jobs, [&](std::size_t i) {
      const Graph& g = graphs[begin + i];
      Subject s(g, inner, canonical_code(g));
      reports[i] = make_report(s, checks);
    });
    for (auto& rep : reports) {
      bool finding = false;
      for (const auto& r : rep.checks) {
        auto& t = summary.tallies[r.name];
        switch (r.verdict) {
          case Verdict::Holds: ++t.holds; break;
          case Verdict::Equality: ++t.equality; break;
          case Verdict::Fails: ++t.fails; finding |= !r.fatal(); break;
          case Verdict::NotApplicable: ++t.not_applicable; break;
        }
      }
      if (options.on_report) options.on_report(rep);
      if (rep.has_fatal()) {
        if (summary.failures.size() < 16) summary.failures.push_back(std::move(rep));
      } else if (finding && summary.findings.size() < 16) {
        summary.findings.push_back(std::move(rep));
      }
    }
  }
  return summary;
}

nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [name, t] : s.tallies)
    tallies[name] = {{"holds", t.holds}, {"equality", t.equality}, {"fails", t.fails}, {"n/a", t.not_applicable}};
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& r : s.failures) failures.push_back(to_json(r));
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& r : s.findings) findings.push_back(to_json(r));
  return {{"graphs", s.graphs}, {"ok", s.ok()}, {"tallies", tallies}, {"failures", failures}, {"findings", findings}};
}

AntichainBoundSummary verify_antichain_bound(std::size_t max_c) {
  AntichainBoundSummary out;
  for (std::size_t c = 1; c <= max_c; ++c) {
    for_each_natural_poset(c, [&](const std::vector<VertexMask>& down) {
      Digraph d;
      d.c = c;
      d.out = down;  // arcs point downwards
      const std::uint64_t count = count_antichains(d);
      const std::size_t r = max_antichain_size(d);
      const Rational bound = Rational(boost::multiprecision::cpp_int(1) << r) * mu(r, c);
      ++out.posets;
      const Rational lhs(count);
      const bool equal = lhs == bound;
      if (lhs > bound) {
        ++out.violations;
        if (!out.counterexample) out.counterexample = down;
      }
      if (equal) ++out.equalities;
      if (equal != (r == 1 || r == c)) {
        ++out.equality_mismatches;
        if (!out.counterexample) out.counterexample = down;
      }
    });
  }
  return out;
}

MuGridSummary verify_mu_grid(std::size_t max_gamma) {
  MuGridSummary out;
  for (std::size_t rho = 2; rho < max_gamma; ++rho)
    for (std::size_t gamma = rho + 1; gamma <= max_gamma; ++gamma)
      for (std::size_t gamma1 = 1; gamma1 <= gamma; ++gamma1) {
        if (gamma > rho * gamma1 || rho - 1 + gamma1 > gamma) continue;
        ++out.triples;
        if (!mu_inequality_holds(rho, gamma, gamma1)) out.failures.push_back({rho, gamma, gamma1});
      }
  return out;
}

std::vector<MonomialIdeal> colon_height_counterexamples(std::size_t max_n, std::size_t limit) {
  if (max_n > 4) throw CapExceeded("the colon height search is capped at 4 variables");
  std::vector<MonomialIdeal> out;
  for (std::size_t n = 1; n <= max_n && out.size() < limit; ++n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("z" + std::to_string(i + 1));
    const std::size_t supports = (std::size_t{1} << n) - 1;  // nonempty subsets
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << supports) && out.size() < limit; ++family) {
      std::vector<VertexMask> sets;
      for (std::size_t k = 0; k < supports; ++k)
        if (family & (std::uint64_t{1} << k)) sets.push_back(k + 1);
      if (std::any_of(sets.begin(), sets.end(), [](VertexMask s) { return popcount(s) < 2; })) continue;
      bool antichain = true;
      for (std::size_t a = 0; a < sets.size() && antichain; ++a)
        for (std::size_t b = 0; b < sets.size() && antichain; ++b)
          if (a != b && (sets[a] & ~sets[b]) == 0) antichain = false;
      if (!antichain) continue;
      std::vector<Exponents> gens;
      for (VertexMask s : sets) {
        Exponents e(n, 0);
        for (std::size_t i : indices_of(s)) e[i] = 1;
        gens.push_back(std::move(e));
      }
      MonomialIdeal ideal(vars, gens);
      const std::size_t c = height(ideal);
      bool sums = true, colons = true;
      for (std::size_t x = 0; x < n; ++x) {
        sums = sums && height(add_var(ideal, x)) == c;
        colons = colons && height(colon_by_var(ideal, x)) == c;
      }
      if (sums && !colons) out.push_back(std::move(ideal));
    }
  }
  return out;
}

}  // namespace edgeideal
