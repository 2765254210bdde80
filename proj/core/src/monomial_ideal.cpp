#include "edgeideal/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace edgeideal {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::size_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

VertexMask support_of(const Exponents& e) {
  VertexMask m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) m |= bit(i);
  return m;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Number of l-subsets visited by a brute-force sweep over sizes 1..max_l.
double subsets_up_to(std::size_t m, std::size_t max_l) {
  double total = 0;
  double binom = 1;
  for (std::size_t l = 1; l <= std::min(m, max_l); ++l) {
    binom = binom * static_cast<double>(m - l + 1) / static_cast<double>(l);
    total += binom;
  }
  return total;
}

class HeightSolver {
 public:
  explicit HeightSolver(const std::vector<VertexMask>& supports) : supports_(supports) {
    if (supports.size() > kMaxMaskWidth)
      throw CapExceeded("height: more than 64 generators");
  }

  // Minimum number of variables hitting every generator in `remaining`.
  std::size_t solve(std::uint64_t remaining) {
    if (remaining == 0) return 0;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    const std::size_t first = lowest(remaining);
    std::size_t best = SIZE_MAX;
    for (std::size_t x : indices_of(supports_[first])) {
      std::uint64_t rest = remaining;
      for (std::size_t k : indices_of(remaining))
        if (supports_[k] & bit(x)) rest &= ~bit(k);
      best = std::min(best, 1 + solve(rest));
    }
    memo_.emplace(remaining, best);
    return best;
  }

 private:
  const std::vector<VertexMask>& supports_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Exponents> generators)
    : variables_(std::move(variables)) {
  const std::size_t n = variables_.size();
  if (n > kMaxMaskWidth) throw CapExceeded("ideals are limited to 64 variables");
  {
    std::set<std::string> seen(variables_.begin(), variables_.end());
    if (seen.size() != n) throw InvalidInput("duplicate variable name");
  }
  for (const auto& g : generators)
    if (g.size() != n) throw InvalidInput("exponent vector length does not match the variables");

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Sort by degree so a divisor always precedes its multiples.
  std::stable_sort(generators.begin(), generators.end(), [](const Exponents& a, const Exponents& b) {
    return total_degree(a) < total_degree(b);
  });
  std::vector<Exponents> minimal;
  for (auto& g : generators) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::sort(minimal.begin(), minimal.end(), [](const Exponents& a, const Exponents& b) {
    const std::size_t da = total_degree(a);
    const std::size_t db = total_degree(b);
    if (da != db) return da < db;
    const VertexMask sa = support_of(a);
    const VertexMask sb = support_of(b);
    if (sa != sb) return lex_less(sa, sb);
    return a > b;
  });
  generators_ = std::move(minimal);
  supports_.reserve(generators_.size());
  for (const auto& g : generators_) {
    supports_.push_back(support_of(g));
    for (auto e : g)
      if (e > 1) square_free_ = false;
  }
}

std::size_t MonomialIdeal::degree(std::size_t k) const { return total_degree(generators_[k]); }

std::size_t MonomialIdeal::max_degree() const {
  std::size_t d = 0;
  for (std::size_t k = 0; k < generators_.size(); ++k) d = std::max(d, degree(k));
  return d;
}

bool MonomialIdeal::is_square_free_quadratic() const {
  if (!square_free_) return false;
  for (VertexMask s : supports_)
    if (popcount(s) != 2) return false;
  return true;
}

bool MonomialIdeal::is_quadratic() const {
  for (std::size_t k = 0; k < generators_.size(); ++k)
    if (degree(k) != 2) return false;
  return true;
}

std::optional<std::size_t> MonomialIdeal::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == var) return i;
  return std::nullopt;
}

std::size_t MonomialIdeal::require_index(std::string_view var) const {
  if (auto i = index_of(var)) return *i;
  throw InvalidInput("unknown variable " + std::string(var));
}

std::string MonomialIdeal::monomial_string(std::size_t k) const {
  if (supports_[k] == 0) return "1";
  std::string out;
  for (std::size_t i : indices_of(supports_[k])) {
    out += variables_[i];
    if (generators_[k][i] > 1) out += "^" + std::to_string(generators_[k][i]);
  }
  return out;
}

MonomialIdeal parse_monomial_list(std::string_view text,
                                  const std::optional<std::vector<std::string>>& vars) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  if (vars) {
    for (const auto& v : *vars) {
      if (!index.emplace(v, names.size()).second) throw InvalidInput("duplicate variable " + v);
      names.push_back(v);
    }
  }
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> sparse;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (raw[first] == '#') continue;
    std::map<std::size_t, unsigned> exps;
    for (const auto& tok : split_ws(raw)) {
      auto it = index.find(tok);
      if (it == index.end()) {
        if (vars) throw ParseError(line_no, "variable " + tok + " is not declared");
        it = index.emplace(tok, names.size()).first;
        names.push_back(tok);
      }
      if (++exps[it->second] > kMaxExponent)
        throw ParseError(line_no, "exponent of " + tok + " exceeds 255");
    }
    sparse.emplace_back(exps.begin(), exps.end());
  }
  if (names.size() > kMaxMaskWidth) throw CapExceeded("ideals are limited to 64 variables");
  std::vector<Exponents> gens;
  for (const auto& s : sparse) {
    Exponents e(names.size(), 0);
    for (auto [i, k] : s) e[i] = static_cast<std::uint8_t>(k);
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) {
    nlohmann::json mono = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (unsigned k = 0; k < g[i]; ++k) mono.push_back(ideal.variables()[i]);
    gens.push_back(std::move(mono));
  }
  return {{"variables", ideal.variables()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  auto names = j.at("variables").get<std::vector<std::string>>();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<Exponents> gens;
  for (const auto& mono : j.at("generators")) {
    Exponents e(names.size(), 0);
    for (const auto& v : mono) {
      auto it = index.find(v.get<std::string>());
      if (it == index.end()) throw InvalidInput("unknown variable " + v.get<std::string>());
      if (e[it->second] == kMaxExponent) throw InvalidInput("exponent exceeds 255");
      ++e[it->second];
    }
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Exponents> gens;
  gens.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    Exponents x(g.num_vertices(), 0);
    x[e.u] = 1;
    x[e.v] = 1;
    gens.push_back(std::move(x));
  }
  return MonomialIdeal(g.vertices(), std::move(gens));
}

Graph graph_of(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free_quadratic())
    throw InvalidInput("graph_of needs a square-free quadratic ideal");
  std::vector<Edge> edges;
  for (VertexMask s : ideal.supports()) {
    const auto ends = indices_of(s);
    edges.push_back({ends[0], ends[1]});
  }
  return Graph(ideal.variables(), edges);
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  if (ideal.is_square_free()) return ideal;
  const std::size_t n = ideal.num_variables();
  std::vector<unsigned> top(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max<unsigned>(top[i], g[i]);
  std::vector<std::string> names;
  std::vector<std::size_t> offset(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = names.size();
    if (top[i] <= 1) {
      names.push_back(ideal.variables()[i]);
    } else {
      for (unsigned k = 1; k <= top[i]; ++k)
        names.push_back(ideal.variables()[i] + "#" + std::to_string(k));
    }
  }
  if (names.size() > kMaxMaskWidth) throw CapExceeded("polarization needs more than 64 variables");
  std::vector<Exponents> gens;
  for (const auto& g : ideal.generators()) {
    Exponents e(names.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < g[i]; ++k) e[offset[i] + k] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

MonomialIdeal colon_by_var(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.num_variables()) throw InvalidInput("colon_by_var: unknown variable");
  std::vector<Exponents> gens = ideal.generators();
  for (auto& g : gens)
    if (g[var] > 0) --g[var];
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal colon_by_var(const MonomialIdeal& ideal, std::string_view var) {
  return colon_by_var(ideal, ideal.require_index(var));
}

MonomialIdeal add_var(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.num_variables()) throw InvalidInput("add_var: unknown variable");
  std::vector<Exponents> gens = ideal.generators();
  Exponents x(ideal.num_variables(), 0);
  x[var] = 1;
  gens.push_back(std::move(x));
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal add_var(const MonomialIdeal& ideal, std::string_view var) {
  return add_var(ideal, ideal.require_index(var));
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, VertexMask vars) {
  std::vector<Exponents> gens;
  for (std::size_t k = 0; k < ideal.num_generators(); ++k)
    if ((ideal.support(k) & ~vars) == 0) gens.push_back(ideal.generator(k));
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

std::size_t height(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return kInfiniteHeight;
  HeightSolver solver(ideal.supports());
  return solver.solve(low_bits(ideal.num_generators()));
}

long essential_height(const MonomialIdeal& ideal) {
  long linear = 0;
  for (std::size_t k = 0; k < ideal.num_generators(); ++k)
    if (ideal.degree(k) == 1) ++linear;
  return static_cast<long>(height(ideal)) - linear;
}

std::size_t rho(const MonomialIdeal& ideal) {
  const std::size_t m = ideal.num_generators();
  if (m > kMaxMaskWidth) throw CapExceeded("rho: more than 64 generators");
  std::vector<std::uint64_t> conflicts(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (ideal.support(a) & ideal.support(b)) conflicts[a] |= bit(b);
  std::unordered_map<std::uint64_t, std::size_t> memo;
  auto rec = [&](auto&& self, std::uint64_t avail) -> std::size_t {
    if (avail == 0) return 0;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const std::size_t g = lowest(avail);
    std::size_t best = 1 + self(self, avail & ~conflicts[g] & ~bit(g));
    // Skipping g only helps if some other generator conflicts with it.
    if ((conflicts[g] & avail & ~bit(g)) != 0) best = std::max(best, self(self, avail & ~bit(g)));
    memo.emplace(avail, best);
    return best;
  };
  return rec(rec, low_bits(m));
}

std::vector<VertexMask> unmixed_primes(const MonomialIdeal& ideal) {
  std::vector<VertexMask> out;
  if (ideal.is_unit()) return out;
  const std::size_t c = height(ideal);
  const auto& supports = ideal.supports();
  auto rec = [&](auto&& self, VertexMask chosen, VertexMask excluded, std::size_t size) -> void {
    std::size_t unhit = SIZE_MAX;
    for (std::size_t k = 0; k < supports.size(); ++k) {
      if ((supports[k] & chosen) == 0) {
        unhit = k;
        break;
      }
    }
    if (unhit == SIZE_MAX) {
      if (size == c) out.push_back(chosen);
      return;
    }
    if (size == c) return;
    VertexMask skip = excluded;
    for (std::size_t x : indices_of(supports[unhit] & ~excluded)) {
      self(self, chosen | bit(x), skip, size + 1);
      skip |= bit(x);
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::size_t multiplicity(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw InvalidInput("multiplicity needs a square-free ideal");
  return unmixed_primes(ideal).size();
}

std::vector<std::size_t> closed_form_twists(std::size_t rho_value, std::size_t n, std::size_t m) {
  std::vector<std::size_t> t;
  t.reserve(m);
  for (std::size_t l = 1; l <= m; ++l)
    t.push_back(l <= rho_value ? 2 * l : std::min(rho_value + l, n));
  return t;
}

TaylorTwists taylor_twists(const MonomialIdeal& ideal, TwistMethod method, std::size_t max_l,
                           std::size_t brute_cap) {
  const std::size_t m = ideal.num_generators();
  const std::size_t top = std::min(m, max_l);
  TaylorTwists out;
  out.rho = ideal.is_square_free() ? rho(ideal) : 0;

  const bool closed_ok = ideal.is_square_free_quadratic() && check_standing_hypothesis(ideal).holds;
  if (method == TwistMethod::ClosedForm && !closed_ok)
    throw InvalidInput("closed-form Taylor twists need a quadratic ideal with the standing hypothesis");
  // Auto trusts the closed form only up to the height, where it is proved.
  if (method == TwistMethod::ClosedForm || (method == TwistMethod::Auto && closed_ok && top <= height(ideal))) {
    out.values = closed_form_twists(out.rho, ideal.num_variables(), top);
    out.method = TwistMethod::ClosedForm;
    return out;
  }

  if (subsets_up_to(m, top) > static_cast<double>(std::uint64_t{1} << std::min<std::size_t>(brute_cap, 62)))
    throw CapExceeded("Taylor twists: brute force over " + std::to_string(m) +
                      " generators exceeds the cap");
  out.method = TwistMethod::Brute;
  out.values.assign(top, 0);
  if (ideal.is_square_free()) {
    const auto& supports = ideal.supports();
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth, VertexMask lcm) -> void {
      for (std::size_t k = start; k < m; ++k) {
        const VertexMask next = lcm | supports[k];
        out.values[depth] = std::max(out.values[depth], popcount(next));
        if (depth + 1 < top) self(self, k + 1, depth + 1, next);
      }
    };
    if (top > 0) rec(rec, 0, 0, 0);
  } else {
    const auto& gens = ideal.generators();
    Exponents lcm(ideal.num_variables(), 0);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      for (std::size_t k = start; k < m; ++k) {
        const Exponents saved = lcm;
        for (std::size_t i = 0; i < lcm.size(); ++i) lcm[i] = std::max(lcm[i], gens[k][i]);
        out.values[depth] = std::max(out.values[depth], total_degree(lcm));
        if (depth + 1 < top) self(self, k + 1, depth + 1);
        lcm = saved;
      }
    };
    if (top > 0) rec(rec, 0, 0);
  }
  return out;
}

StandingHypothesis check_standing_hypothesis(const MonomialIdeal& ideal) {
  StandingHypothesis res;
  res.c = height(ideal);
  for (std::size_t x = 0; x < ideal.num_variables(); ++x) {
    const std::size_t hc = height(colon_by_var(ideal, x));
    if (hc != res.c) {
      res.holds = false;
      res.witness = x;
      res.failed_side = "colon";
      res.witness_height = hc;
      return res;
    }
    const std::size_t hs = height(add_var(ideal, x));
    if (hs != res.c) {
      res.holds = false;
      res.witness = x;
      res.failed_side = "sum";
      res.witness_height = hs;
      return res;
    }
  }
  return res;
}

}  // namespace edgeideal
