#ifndef EDGEIDEAL_TESTS_FIXTURES_HPP
#define EDGEIDEAL_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace fixture {

using namespace edgeideal;

inline Graph parse(const std::string& text) { return parse_edge_list(text); }
inline MonomialIdeal ideal(const std::string& text) { return parse_monomial_list(text); }

// x1..xc / y1..yc with the pairs x_i y_i and the listed (i, j) as x_i y_j.
inline Graph matched(std::size_t c, const std::vector<std::pair<std::size_t, std::size_t>>& extra) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= c; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= c; ++i) names.push_back("y" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= c; ++i) edges.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
  for (auto [i, j] : extra) edges.emplace_back("x" + std::to_string(i), "y" + std::to_string(j));
  Bipartition b{low_bits(c), low_bits(2 * c) & ~low_bits(c)};
  return Graph::from_names(names, edges, b);
}

inline Graph c4() { return parse("x1 y1\ny1 x2\nx2 y2\ny2 x1\n"); }
inline Graph k13() { return star_graph(3); }
inline Graph path3() { return parse("a b\nb c\nc d\n"); }

// The 14-vertex tree with the labels used for its digraph 15 25 26 36 37 47.
inline Graph susp_p7() { return matched(7, {{1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}}); }

inline Graph susp_path(std::size_t k) { return suspension(path_graph(k)); }
inline Graph susp_cycle(std::size_t k) { return suspension(cycle_graph(k)); }

// All x_i y_j with j >= i.
inline Graph staircase(std::size_t c) {
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  for (std::size_t i = 1; i <= c; ++i)
    for (std::size_t j = i + 1; j <= c; ++j) extra.emplace_back(i, j);
  return matched(c, extra);
}

inline MonomialIdeal aux_j() { return ideal("x1 y5\nx2 y5\nx5 y5\nx2 y6\nx3 y6\nx3 y7\n"); }

}  // namespace fixture

#endif  // EDGEIDEAL_TESTS_FIXTURES_HPP
