#ifndef EDGEIDEAL_GRAPH_HPP
#define EDGEIDEAL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgeideal/common.hpp"

namespace edgeideal {

// Undirected edge between vertex indices, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Bipartition {
  VertexMask left = 0;   // V1
  VertexMask right = 0;  // V2

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/**
 * Finite simple undirected graph on at most 64 named vertices.
 *
 * Vertex names are opaque strings; indices follow the order in which the
 * vertices were supplied. The bipartition is either the one given at
 * construction (validated against every edge) or the 2-colouring found by
 * breadth-first search in index order, so `bipartition()` is present exactly
 * when the graph is bipartite.
 */
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges,
        std::optional<Bipartition> bipartition = std::nullopt);

  static Graph from_names(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges,
                          std::optional<Bipartition> bipartition = std::nullopt);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(std::size_t v) const { return names_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexMask all() const { return low_bits(names_.size()); }

  VertexMask neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return (adjacency_[u] & bit(v)) != 0; }
  std::size_t degree(std::size_t v) const { return popcount(adjacency_[v]); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  VertexMask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(VertexMask m) const;

  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  bool is_bipartite() const { return bipartition_.has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
  std::optional<Bipartition> bipartition_;
};

struct Matching {
  std::vector<Edge> edges;
  std::size_t size() const { return edges.size(); }
};

/**
 * Parses the edge-list text format: one "u v" pair per nonempty line, `#`
 * starting a comment, and an optional header line
 * `#bipartite V1: a b ... / V2: c d ...`. Duplicate edges are dropped with a
 * warning appended to `warnings` (when given). Throws ParseError on loops,
 * malformed lines, or edges violating the declared bipartition.
 */
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Maximum matching; among maximum matchings the lexicographically least
// sorted edge list is returned. Bipartite graphs use augmenting paths,
// others an exhaustive search.
Matching max_matching(const Graph& g);
std::size_t matching_number(const Graph& g);
bool is_perfectly_matched(const Graph& g);

// Every perfect matching of a bipartite graph, as (left vertex, partner)
// edges ordered by the left vertex; the list is in lexicographic order.
std::vector<Matching> perfect_matchings(const Graph& g);

// Lexicographically least minimum vertex cover.
VertexMask min_vertex_cover(const Graph& g);
std::size_t vertex_cover_number(const Graph& g);

// All inclusion-minimal vertex covers in lexicographic order.
std::vector<VertexMask> enumerate_minimal_vertex_covers(const Graph& g, std::size_t cap = 24);

Graph induced_subgraph(const Graph& g, VertexMask sigma);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& sigma);

// Largest set of pairwise disconnected edges (an induced matching).
std::size_t induced_matching_number(const Graph& g);

// Largest independent set of g, by branch and bound.
std::size_t independence_number(const Graph& g);

// Attaches one new leaf `name + leaf_suffix` to every vertex.
Graph suspension(const Graph& core, std::string_view leaf_suffix = "'");

// The core G' when g is the suspension of G'; for a single-edge component
// the earlier vertex is taken as the core vertex.
std::optional<Graph> suspension_decompose(const Graph& g);

// Number of vertices of the largest complete bipartite subgraph with both
// sides nonempty. Throws InvalidInput when g is not bipartite.
std::size_t largest_complete_bipartite(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
std::vector<VertexMask> connected_components(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Named families used throughout the tests and the CLI.
Graph path_graph(std::size_t vertices, std::string_view prefix = "v");
Graph cycle_graph(std::size_t vertices, std::string_view prefix = "v");
Graph disjoint_edges(std::size_t count);
Graph star_graph(std::size_t leaves);

}  // namespace edgeideal

#endif  // EDGEIDEAL_GRAPH_HPP
