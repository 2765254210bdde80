#ifndef EDGEIDEAL_VERIFIER_HPP
#define EDGEIDEAL_VERIFIER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/digraph.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

// PROVED failures are fatal; CONJECTURED failures are findings.
enum class CheckStatus { Proved, Conjectured, Informational };
enum class Verdict { Holds, Equality, Fails, NotApplicable };

std::string to_string(CheckStatus s);
std::string to_string(Verdict v);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Proved;
  Verdict verdict = Verdict::NotApplicable;
  // For bound checks: lhs `relation` rhs is the claimed inequality.
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::string relation;
  std::vector<std::string> witnesses;

  bool fatal() const { return status == CheckStatus::Proved && verdict == Verdict::Fails; }
};

struct VerifyOptions {
  std::uint32_t characteristic = 0;
  std::size_t cap_n = 20;        // Hochster path
  std::size_t cap_m = 14;        // Taylor oracle
  std::size_t brute_cap = 20;    // Taylor twists, log2 of subsets visited
  std::size_t jobs = 1;
  // Second characteristic compared against the first by the "char" check.
  std::uint32_t second_characteristic = 2;
};

/**
 * One ideal under verification, with every derived quantity computed on
 * first use. Non-square-free ideals are polarized for the algebra; Taylor
 * twists use the original generators (polarization preserves lcm degrees).
 */
class Subject {
 public:
  explicit Subject(MonomialIdeal ideal, VerifyOptions options = {}, std::string name = {});
  explicit Subject(const Graph& graph, VerifyOptions options = {}, std::string name = {});

  const std::string& name() const { return name_; }
  const VerifyOptions& options() const { return options_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  const MonomialIdeal& square_free() const { return polarized_; }
  const std::optional<Graph>& graph() const { return graph_; }
  bool bipartite_graph() const { return graph_ && graph_->is_bipartite(); }

  const BettiTable& betti();
  const BettiTable& betti_second();
  std::size_t c();
  std::size_t e();
  std::size_t rho();
  std::optional<std::size_t> r();
  // T_1..T_c.
  const std::vector<std::size_t>& twists();
  bool perfectly_matched();
  // Betti-level: projdim == height.
  bool cohen_macaulay();
  const CmVerdict& cm_verdict();

  bool has_betti() const { return betti_.has_value(); }
  bool has_twists() const { return twists_.has_value(); }

 private:
  std::string name_;
  VerifyOptions options_;
  MonomialIdeal ideal_;
  MonomialIdeal polarized_;
  std::optional<Graph> graph_;

  std::optional<BettiTable> betti_;
  std::optional<BettiTable> betti_second_;
  std::optional<std::size_t> c_, e_, rho_, r_;
  std::optional<std::vector<std::size_t>> twists_;
  std::optional<CmVerdict> cm_;
};

CheckResult check_hhsu(Subject& s);
CheckResult check_taylor(Subject& s);
CheckResult check_equality_characterization(Subject& s);
CheckResult check_quasipure_classification(Subject& s);
CheckResult check_hhsl_spot(Subject& s);

CheckResult check_hhsu(const MonomialIdeal& ideal, const VerifyOptions& options = {});
CheckResult check_taylor(const MonomialIdeal& ideal, const VerifyOptions& options = {});
CheckResult check_equality_characterization(const Graph& g, const VerifyOptions& options = {});
CheckResult check_quasipure_classification(const Graph& g, const VerifyOptions& options = {});
CheckResult check_hhsl_spot(const Graph& g, const VerifyOptions& options = {});

// Names accepted by run_check and sweep_small_graphs, in report order.
const std::vector<std::string>& registered_checks();
bool is_registered_check(const std::string& name);
// Throws InvalidInput for an unknown name.
CheckResult run_check(const std::string& name, Subject& s);

struct Quantities {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t e = 0;
  std::size_t c = 0;
  std::size_t rho = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> reg;
  std::optional<std::size_t> projdim;
  std::vector<std::size_t> M;
  std::vector<std::size_t> m_low;
  std::vector<std::size_t> T;
};

struct VerdictReport {
  std::string subject;
  nlohmann::json canonical;  // graph or ideal JSON
  Quantities quantities;
  std::vector<CheckResult> checks;
  std::map<std::string, bool> oracle_agreement;
  std::vector<std::uint32_t> characteristics;

  bool has_fatal() const;
};

// Runs the named checks. Betti-dependent quantities are filled in only if
// some check needed them.
VerdictReport make_report(Subject& s, const std::vector<std::string>& checks);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const VerdictReport& r);

struct CheckTally {
  std::size_t holds = 0;
  std::size_t equality = 0;
  std::size_t fails = 0;
  std::size_t not_applicable = 0;
};

enum class SweepFamily { PerfectlyMatched, Bipartite };

struct SweepOptions {
  std::size_t max_vertices = 8;
  std::vector<std::string> checks;  // empty: all registered
  SweepFamily family = SweepFamily::PerfectlyMatched;
  bool connected_only = false;
  VerifyOptions verify;
  // Called in enumeration order for every report.
  std::function<void(const VerdictReport&)> on_report;
};

struct SweepSummary {
  std::size_t graphs = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<VerdictReport> failures;  // fatal, smallest graphs first
  std::vector<VerdictReport> findings;  // non-fatal failures
  bool ok() const { return failures.empty(); }
};

// Enumerates bipartite graphs up to isomorphism with at most max_vertices
// (14 at most) vertices and runs the checks on each.
SweepSummary sweep_small_graphs(const SweepOptions& options);

nlohmann::json to_json(const SweepSummary& s);

struct AntichainBoundSummary {
  std::size_t posets = 0;
  std::size_t violations = 0;
  std::size_t equalities = 0;
  // Equality without r in {1, c}, or r in {1, c} without equality.
  std::size_t equality_mismatches = 0;
  std::optional<std::vector<VertexMask>> counterexample;  // down-sets
  bool ok() const { return violations == 0 && equality_mismatches == 0; }
};

// |antichains| <= 2^r mu(r, c) over every naturally labelled poset with
// 1..max_c elements.
AntichainBoundSummary verify_antichain_bound(std::size_t max_c);

struct MuGridSummary {
  std::size_t triples = 0;
  std::vector<std::array<std::size_t, 3>> failures;
  bool ok() const { return failures.empty(); }
};

// Every (rho, gamma, gamma1) with 2 <= rho < gamma <= rho*gamma1,
// rho - 1 <= gamma - gamma1 and gamma <= max_gamma.
MuGridSummary verify_mu_grid(std::size_t max_gamma);

// Square-free ideals in at most max_n variables, generated in degree at
// least two, with height(I, x) = c for every x but height(I : x) != c for
// some x; smallest first.
std::vector<MonomialIdeal> colon_height_counterexamples(std::size_t max_n, std::size_t limit = 1);

}  // namespace edgeideal

#endif  // EDGEIDEAL_VERIFIER_HPP
