#ifndef EDGEIDEAL_ENUMERATE_HPP
#define EDGEIDEAL_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edgeideal/common.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

struct BipartiteFilter {
  bool perfect_matching = false;
  bool connected = false;
};

/**
 * Bipartite graphs with sides of sizes a <= b and no isolated vertices, one
 * per class of biadjacency matrices under row and column permutations (and
 * transposition when a == b). Connected graphs appear once each;
 * a disconnected graph may appear more than once because its components can
 * be flipped independently. Vertices are x1..xa (V1) and y1..yb (V2).
 */
std::vector<Graph> enumerate_bipartite(std::size_t a, std::size_t b, const BipartiteFilter& filter = {});

// All side sizes 1 <= a <= b with a + b <= max_vertices.
std::vector<Graph> enumerate_bipartite_up_to(std::size_t max_vertices, const BipartiteFilter& filter = {});

// Perfectly matched bipartite graphs with c = 1..max_c.
std::vector<Graph> enumerate_perfectly_matched(std::size_t max_c, bool connected_only = false);

// Canonical biadjacency code used for the deduplication above; equal codes
// mean isomorphic graphs. Needs a bipartite graph without isolated vertices.
std::string canonical_code(const Graph& g);

/**
 * Calls fn(down) for every naturally labelled poset on [c]: down[i] is the
 * set of elements strictly below i, all of them smaller than i. Every poset
 * on c elements is isomorphic to at least one of these.
 */
void for_each_natural_poset(std::size_t c, const std::function<void(const std::vector<VertexMask>&)>& fn);

// Random square-free ideals with 1..max_n variables and 1..max_m generators.
std::vector<MonomialIdeal> random_square_free_ideals(std::size_t count, std::size_t max_n, std::size_t max_m,
                                                     std::uint64_t seed);

}  // namespace edgeideal

#endif  // EDGEIDEAL_ENUMERATE_HPP
