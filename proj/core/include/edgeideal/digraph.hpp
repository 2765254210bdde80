#ifndef EDGEIDEAL_DIGRAPH_HPP
#define EDGEIDEAL_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "edgeideal/common.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Directed graph on [c] (0-based here, 1-based in JSON) attached to a
 * bipartite graph with a perfect matching: arc i -> j for each edge x_i y_j
 * with i != j. labels[i] holds the names of x_i and y_i.
 */
struct Digraph {
  std::size_t c = 0;
  std::vector<VertexMask> out;
  std::vector<std::pair<std::string, std::string>> labels;

  static Digraph from_arcs(std::size_t c, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

  bool has_arc(std::size_t i, std::size_t j) const { return (out[i] & bit(j)) != 0; }
  std::size_t num_arcs() const;
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.c == b.c && a.out == b.out; }
};

// Building along the lexicographically least perfect matching, or along a
// given one. V1 supplies the x side. Throws InvalidInput when g is not
// bipartite or not perfectly matched.
Digraph build_digraph(const Graph& g);
Digraph build_digraph(const Graph& g, const Matching& matching);

// Vertices x_1..x_c then y_1..y_c, edges x_i y_i and x_i y_j per arc.
Graph bipartite_graph_of(const Digraph& d);

// reach[i] = vertices at the end of a nonempty directed path from i.
std::vector<VertexMask> reachability(const Digraph& d);
bool is_acyclic(const Digraph& d);
bool is_transitively_closed(const Digraph& d);
bool is_poset(const Digraph& d);

// The cycle contracted by collapse: starts at the least vertex on any cycle
// and always moves to the least vertex that can still return, closing as
// soon as an arc back exists.
std::optional<std::vector<std::size_t>> find_cycle(const Digraph& d);

// Contracts find_cycle(d) onto its first vertex; the survivors are
// renumbered in order. Throws InvalidInput on acyclic input.
Digraph collapse(const Digraph& d);
Digraph transitive_closure(const Digraph& d);

struct ReductionStep {
  std::string kind;  // "initial", "collapse" or "closure"
  Digraph digraph;
  std::vector<std::size_t> contracted;  // indices in the previous digraph
  std::size_t e = 0;
  std::size_t kappa = 0;
  std::size_t height = 0;
};

struct Reduction {
  std::vector<ReductionStep> steps;
  Digraph result;
  Graph graph;
  MonomialIdeal ideal;
};

Reduction reduce_to_cm(const Graph& g);

struct AntichainFamily {
  std::vector<VertexMask> antichains;  // sorted; includes the empty set
  std::size_t max_size = 0;
  std::size_t count() const { return antichains.size(); }
};

// Antichains for the order given by directed paths. Throws InvalidInput on
// cyclic input and CapExceeded for c above the cap.
AntichainFamily antichains(const Digraph& d, std::size_t cap = 24);
std::uint64_t count_antichains(const Digraph& d);
std::size_t max_antichain_size(const Digraph& d);

// Largest coclique of the underlying undirected graph.
std::size_t coclique_number(const Digraph& d);
std::size_t kappa(const Graph& g);

Rational mu(std::size_t rho, std::size_t gamma);

struct MuComparison {
  Rational lhs;
  Rational rhs;
  bool holds = false;       // lhs < rhs
  bool hypotheses = false;  // 2 <= rho < gamma <= rho*gamma1 and rho-1 <= gamma-gamma1
};

MuComparison mu_inequality(std::size_t rho, std::size_t gamma, std::size_t gamma1);
bool mu_inequality_holds(std::size_t rho, std::size_t gamma, std::size_t gamma1);

struct MatchingVerdict {
  Matching matching;
  bool acyclic = false;
  bool transitively_closed = false;
};

struct CmVerdict {
  bool cohen_macaulay = false;
  std::string reason;
  // Witness labeling: labeling[k] = (x_{k+1}, y_{k+1}) with every edge
  // x_i y_j having j >= i.
  std::vector<std::pair<std::string, std::string>> labeling;
  std::vector<MatchingVerdict> per_matching;
};

// Searches every perfect matching for one whose digraph is a poset.
CmVerdict is_cm_bipartite(const Graph& g, std::size_t matching_cap = 100000);

// |antichains| and the unmixed primes they label, as vertex sets of
// bipartite_graph_of(d). Both need a poset.
std::size_t antichain_multiplicity(const Digraph& d);
std::vector<VertexMask> unmixed_primes_from_antichains(const Digraph& d);

nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const AntichainFamily& f);
nlohmann::json to_json(const Reduction& r);

}  // namespace edgeideal

#endif  // EDGEIDEAL_DIGRAPH_HPP
