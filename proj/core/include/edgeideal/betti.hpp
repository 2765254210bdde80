#ifndef EDGEIDEAL_BETTI_HPP
#define EDGEIDEAL_BETTI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgeideal/common.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

/**
 * Betti numbers of R/I. Only nonzero entries are stored. Multigraded entries
 * are kept for square-free ideals, keyed by (l, sigma).
 *
 * For the unit ideal R/I = 0 and the table is empty; for the zero ideal the
 * only entry is beta_{0,0} = 1.
 */
struct BettiTable {
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  bool has_multigraded = false;
  std::map<std::pair<std::size_t, VertexMask>, std::size_t> multigraded;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> graded;  // (l, j)

  std::size_t beta(std::size_t l, std::size_t j) const;
  std::size_t beta_at(std::size_t l, VertexMask sigma) const;

  bool empty() const { return graded.empty(); }
  std::size_t projdim() const;
  // Largest and smallest j with beta_{l,j} != 0.
  std::optional<std::size_t> M(std::size_t l) const;
  std::optional<std::size_t> m(std::size_t l) const;
  // M_1..M_projdim and m_1..m_projdim; element l - 1 belongs to l.
  std::vector<std::size_t> M_list() const;
  std::vector<std::size_t> m_list() const;
  std::size_t reg() const;
};

// Same graded Betti numbers, and same multigraded ones when both have them.
bool same_betti_numbers(const BettiTable& a, const BettiTable& b);

struct BettiOptions {
  std::uint32_t characteristic = 0;
  std::size_t cap_n = 20;
  // Skip multidegrees where some variable of sigma lies in no generator
  // inside sigma; the restricted complex is then a cone. For edge ideals
  // also fold dominated vertices before computing homology.
  bool prune = true;
  std::size_t jobs = 1;
};

// Hochster's formula: beta_{l,sigma} = dim H~_{|sigma|-l-1}(Delta|sigma).
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

// Homology of the Taylor complex tensored with the residue field; only terms
// whose lcm does not drop survive in the differential.
BettiTable taylor_oracle_betti(const MonomialIdeal& ideal, std::uint32_t characteristic = 0,
                               std::size_t cap_m = 14);

bool is_pure(const BettiTable& t);
// m_{l+1} >= M_l for every l < projdim: consecutive modules do not overlap
// in degree.
bool is_quasi_pure(const BettiTable& t);
// projdim equals height (Auslander-Buchsbaum).
bool is_cohen_macaulay(const BettiTable& t, const MonomialIdeal& ideal);

// For an edge ideal: sigma splits into at least two parts with every pair
// from different parts adjacent, i.e. the complement of G restricted to
// sigma is disconnected. For bipartite G this is a complete bipartite
// subgraph.
bool complete_multipartite_strand(const MonomialIdeal& ideal, VertexMask sigma);

nlohmann::json to_json(const BettiTable& t);
// Rows are j - l, columns l; zero entries print as '.'.
std::string render_betti_triangle(const BettiTable& t);

}  // namespace edgeideal

#endif  // EDGEIDEAL_BETTI_HPP
