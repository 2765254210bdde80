#ifndef EDGEIDEAL_SIMPLICIAL_HPP
#define EDGEIDEAL_SIMPLICIAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "edgeideal/common.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

/**
 * Simplicial complex on named vertices, given by its facets.
 *
 * No facets at all is the void complex; the single facet {} is the
 * complex {∅}, whose only nonzero reduced homology sits in dimension -1.
 */
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<VertexMask> facets;  // sorted lexicographically, none contains another

  bool is_void() const { return facets.empty(); }
  // Every face, grouped by cardinality (index 0 holds the empty face).
  std::vector<std::vector<VertexMask>> faces_by_size() const;
};

// Makes `facets` an antichain under inclusion and sorts it.
std::vector<VertexMask> maximal_sets(std::vector<VertexMask> sets);

// Faces are the variable sets containing no generator support.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

// Subsets of `sigma` containing no member of `supports`, grouped by size.
std::vector<std::vector<VertexMask>> independence_faces(const std::vector<VertexMask>& supports,
                                                        VertexMask sigma);

/**
 * Reduced homology ranks from faces grouped by size; entry d + 1 is the rank
 * in dimension d, so index 0 is dimension -1. The result runs up to the top
 * dimension of the complex.
 */
std::vector<std::size_t> reduced_homology_from_faces(const std::vector<std::vector<VertexMask>>& faces,
                                                     std::uint32_t characteristic);

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                std::uint32_t characteristic = 0);

}  // namespace edgeideal

#endif  // EDGEIDEAL_SIMPLICIAL_HPP
