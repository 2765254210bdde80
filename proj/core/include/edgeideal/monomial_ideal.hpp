#ifndef EDGEIDEAL_MONOMIAL_IDEAL_HPP
#define EDGEIDEAL_MONOMIAL_IDEAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgeideal/common.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

// Exponent vector of a monomial, one entry per ring variable.
using Exponents = std::vector<std::uint8_t>;

inline constexpr unsigned kMaxExponent = 255;

/**
 * Monomial ideal in k[V] given by its minimal generating set.
 *
 * Generators are kept minimal (no generator divides another) and sorted by
 * degree, then lexicographically by support, then by exponent vector. The
 * unit ideal is represented by the single generator 1.
 */
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> variables, std::vector<Exponents> generators);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Exponents>& generators() const { return generators_; }
  const Exponents& generator(std::size_t k) const { return generators_[k]; }

  // Variables dividing generator k.
  VertexMask support(std::size_t k) const { return supports_[k]; }
  const std::vector<VertexMask>& supports() const { return supports_; }
  std::size_t degree(std::size_t k) const;
  std::size_t max_degree() const;

  bool is_square_free() const { return square_free_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && supports_[0] == 0; }
  // Square-free and every generator of degree 2.
  bool is_square_free_quadratic() const;
  // Every generator of degree 2 (squares allowed).
  bool is_quadratic() const;

  std::optional<std::size_t> index_of(std::string_view var) const;
  std::size_t require_index(std::string_view var) const;

  std::string monomial_string(std::size_t k) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.variables_ == b.variables_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<std::string> variables_;
  std::vector<Exponents> generators_;
  std::vector<VertexMask> supports_;
  bool square_free_ = true;
};

/**
 * Parses one generator per nonempty line, variables separated by spaces and
 * repeated for powers ("x x y" is x^2 y). Lines starting with `#` are
 * comments. Variable order is `vars` when given, otherwise first appearance.
 */
MonomialIdeal parse_monomial_list(std::string_view text,
                                  const std::optional<std::vector<std::string>>& vars = std::nullopt);

nlohmann::json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

MonomialIdeal edge_ideal(const Graph& g);
// Inverse of edge_ideal; throws InvalidInput unless square-free quadratic.
Graph graph_of(const MonomialIdeal& ideal);

// Variable x with maximal exponent e becomes x#1..x#e; variables with
// exponent at most one keep their names.
MonomialIdeal polarize(const MonomialIdeal& ideal);

MonomialIdeal colon_by_var(const MonomialIdeal& ideal, std::size_t var);
MonomialIdeal colon_by_var(const MonomialIdeal& ideal, std::string_view var);
MonomialIdeal add_var(const MonomialIdeal& ideal, std::size_t var);
MonomialIdeal add_var(const MonomialIdeal& ideal, std::string_view var);

// Generators whose support lies inside `vars`, in the same ring.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, VertexMask vars);

// Minimum size of a variable set meeting every generator support;
// kInfiniteHeight for the unit ideal and 0 for the zero ideal.
std::size_t height(const MonomialIdeal& ideal);
// height minus the number of degree one generators.
long essential_height(const MonomialIdeal& ideal);

// Largest set of generators with pairwise disjoint supports.
std::size_t rho(const MonomialIdeal& ideal);

// Hitting sets of the generator supports of size height(ideal); each is an
// inclusion-minimal cover and corresponds to an unmixed prime.
std::vector<VertexMask> unmixed_primes(const MonomialIdeal& ideal);
// Number of unmixed primes. Requires a square-free ideal.
std::size_t multiplicity(const MonomialIdeal& ideal);

enum class TwistMethod { Brute, ClosedForm, Auto };

struct TaylorTwists {
  std::vector<std::size_t> values;  // values[l-1] = T_l
  std::size_t rho = 0;
  TwistMethod method = TwistMethod::Brute;
};

/**
 * T_l for l = 1..min(max_l, m). Brute force takes the largest lcm degree over
 * all l-subsets of generators and refuses to visit more than 2^brute_cap
 * subsets; the closed form needs a quadratic square-free ideal satisfying
 * the standing hypothesis. Auto prefers the closed form when max_l is at
 * most the height.
 */
TaylorTwists taylor_twists(const MonomialIdeal& ideal, TwistMethod method = TwistMethod::Auto,
                           std::size_t max_l = SIZE_MAX, std::size_t brute_cap = 20);

// T_l from the closed form (2l up to rho, then min(rho + l, n)).
std::vector<std::size_t> closed_form_twists(std::size_t rho, std::size_t n, std::size_t m);

struct StandingHypothesis {
  bool holds = true;
  std::optional<std::size_t> witness;  // variable index
  std::string failed_side;             // "colon" or "sum"
  std::size_t witness_height = 0;      // height of the failing side
  std::size_t c = 0;
};

StandingHypothesis check_standing_hypothesis(const MonomialIdeal& ideal);

}  // namespace edgeideal

#endif  // EDGEIDEAL_MONOMIAL_IDEAL_HPP
