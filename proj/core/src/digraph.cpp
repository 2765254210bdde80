#include "edgeideal/digraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace edgeideal {

namespace {

std::vector<VertexMask> reverse_reach(const std::vector<VertexMask>& reach) {
  std::vector<VertexMask> back(reach.size(), 0);
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (std::size_t j : indices_of(reach[i])) back[j] |= bit(i);
  return back;
}

// Vertices reachable from `from` inside `allowed` (from itself included).
VertexMask reach_within(const Digraph& d, std::size_t from, VertexMask allowed) {
  VertexMask seen = bit(from);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (std::size_t v : indices_of(frontier)) next |= d.out[v];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexMask> comparability(const Digraph& d) {
  const auto reach = reachability(d);
  const auto back = reverse_reach(reach);
  std::vector<VertexMask> comp(d.c);
  for (std::size_t i = 0; i < d.c; ++i) comp[i] = reach[i] | back[i];
  return comp;
}

void require_acyclic(const Digraph& d, const char* what) {
  if (!is_acyclic(d)) throw InvalidInput(std::string(what) + " needs an acyclic digraph");
}

}  // namespace

Digraph Digraph::from_arcs(std::size_t c, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  if (c > kMaxMaskWidth) throw CapExceeded("digraphs are limited to 64 vertices");
  Digraph d;
  d.c = c;
  d.out.assign(c, 0);
  for (auto [i, j] : arcs) {
    if (i >= c || j >= c) throw InvalidInput("arc endpoint out of range");
    if (i == j) throw InvalidInput("digraphs carry no self-arcs");
    d.out[i] |= bit(j);
  }
  for (std::size_t i = 0; i < c; ++i)
    d.labels.emplace_back("x" + std::to_string(i + 1), "y" + std::to_string(i + 1));
  return d;
}

std::size_t Digraph::num_arcs() const {
  std::size_t total = 0;
  for (VertexMask m : out) total += popcount(m);
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> a;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j : indices_of(out[i])) a.emplace_back(i, j);
  return a;
}

Digraph build_digraph(const Graph& g, const Matching& matching) {
  if (!g.is_bipartite()) throw InvalidInput("build_digraph needs a bipartite graph");
  const VertexMask left = g.bipartition()->left;
  const auto xs = indices_of(left);
  if (xs.size() * 2 != g.num_vertices() || matching.size() != xs.size())
    throw InvalidInput("build_digraph needs a perfect matching");
  std::vector<std::size_t> partner(g.num_vertices(), SIZE_MAX);
  for (const Edge& e : matching.edges) {
    if (!g.adjacent(e.u, e.v)) throw InvalidInput("matching edge is not an edge of the graph");
    if (partner[e.u] != SIZE_MAX || partner[e.v] != SIZE_MAX)
      throw InvalidInput("matching edges share a vertex");
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  Digraph d;
  d.c = xs.size();
  d.out.assign(d.c, 0);
  std::vector<std::size_t> index_of_y(g.num_vertices(), SIZE_MAX);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    index_of_y[partner[xs[i]]] = i;
    d.labels.emplace_back(g.name(xs[i]), g.name(partner[xs[i]]));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t y : indices_of(g.neighbors(xs[i]))) {
      const std::size_t j = index_of_y[y];
      if (j != i) d.out[i] |= bit(j);
    }
  return d;
}

Digraph build_digraph(const Graph& g) {
  if (!g.is_bipartite()) throw InvalidInput("build_digraph needs a bipartite graph");
  const Matching m = max_matching(g);
  if (m.size() * 2 != g.num_vertices() || popcount(g.bipartition()->left) != m.size())
    throw InvalidInput("build_digraph needs a perfectly matched graph");
  return build_digraph(g, m);
}

Graph bipartite_graph_of(const Digraph& d) {
  std::vector<std::string> names;
  for (const auto& l : d.labels) names.push_back(l.first);
  for (const auto& l : d.labels) names.push_back(l.second);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d.c; ++i) {
    edges.push_back({i, d.c + i});
    for (std::size_t j : indices_of(d.out[i])) edges.push_back({i, d.c + j});
  }
  Bipartition b{low_bits(d.c), low_bits(2 * d.c) & ~low_bits(d.c)};
  return Graph(std::move(names), edges, b);
}

std::vector<VertexMask> reachability(const Digraph& d) {
  std::vector<VertexMask> reach = d.out;
  // Warshall on bit rows.
  for (std::size_t k = 0; k < d.c; ++k)
    for (std::size_t i = 0; i < d.c; ++i)
      if (reach[i] & bit(k)) reach[i] |= reach[k];
  return reach;
}

bool is_acyclic(const Digraph& d) {
  const auto reach = reachability(d);
  for (std::size_t i = 0; i < d.c; ++i)
    if (reach[i] & bit(i)) return false;
  return true;
}

bool is_transitively_closed(const Digraph& d) {
  for (std::size_t i = 0; i < d.c; ++i)
    for (std::size_t j : indices_of(d.out[i]))
      if ((d.out[j] & ~d.out[i] & ~bit(i)) != 0) return false;
  return true;
}

bool is_poset(const Digraph& d) { return is_acyclic(d) && is_transitively_closed(d); }

std::optional<std::vector<std::size_t>> find_cycle(const Digraph& d) {
  const auto reach = reachability(d);
  std::size_t start = SIZE_MAX;
  for (std::size_t i = 0; i < d.c; ++i) {
    if (reach[i] & bit(i)) {
      start = i;
      break;
    }
  }
  if (start == SIZE_MAX) return std::nullopt;
  std::vector<std::size_t> cycle{start};
  VertexMask used = bit(start);
  std::size_t cur = start;
  while (true) {
    if (cycle.size() > 1 && d.has_arc(cur, start)) return cycle;
    // The least successor from which start is still reachable while
    // avoiding the vertices already on the path.
    const VertexMask allowed = (low_bits(d.c) & ~used) | bit(start);
    std::size_t next = SIZE_MAX;
    for (std::size_t v : indices_of(d.out[cur] & ~used)) {
      if (reach_within(d, v, allowed) & bit(start)) {
        next = v;
        break;
      }
    }
    if (next == SIZE_MAX) throw std::logic_error("find_cycle: lost the way back");
    cycle.push_back(next);
    used |= bit(next);
    cur = next;
  }
}

Digraph collapse(const Digraph& d) {
  const auto cycle = find_cycle(d);
  if (!cycle) throw InvalidInput("collapse needs a digraph with a directed cycle");
  const std::size_t keep = cycle->front();
  VertexMask removed = 0;
  for (std::size_t k = 1; k < cycle->size(); ++k) removed |= bit((*cycle)[k]);
  std::vector<std::size_t> renumber(d.c, SIZE_MAX);
  Digraph out;
  for (std::size_t i = 0; i < d.c; ++i) {
    if (removed & bit(i)) continue;
    renumber[i] = out.c++;
    out.labels.push_back(d.labels[i]);
  }
  for (std::size_t i = 0; i < d.c; ++i)
    if (removed & bit(i)) renumber[i] = renumber[keep];
  out.out.assign(out.c, 0);
  for (auto [i, j] : d.arcs()) {
    const std::size_t a = renumber[i];
    const std::size_t b = renumber[j];
    if (a != b) out.out[a] |= bit(b);
  }
  return out;
}

Digraph transitive_closure(const Digraph& d) {
  Digraph out = d;
  out.out = reachability(d);
  for (std::size_t i = 0; i < d.c; ++i) out.out[i] &= ~bit(i);
  return out;
}

std::size_t coclique_number(const Digraph& d) {
  std::vector<Edge> edges;
  for (auto [i, j] : d.arcs()) edges.push_back({std::min(i, j), std::max(i, j)});
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d.c; ++i) names.push_back(std::to_string(i + 1));
  return independence_number(Graph(std::move(names), edges));
}

std::size_t kappa(const Graph& g) { return coclique_number(build_digraph(g)); }

Reduction reduce_to_cm(const Graph& g) {
  Reduction red;
  auto record = [&](std::string kind, const Digraph& d, std::vector<std::size_t> contracted) {
    ReductionStep step;
    step.kind = std::move(kind);
    step.digraph = d;
    step.contracted = std::move(contracted);
    const MonomialIdeal ideal = edge_ideal(bipartite_graph_of(d));
    step.e = multiplicity(ideal);
    step.kappa = coclique_number(d);
    step.height = height(ideal);
    red.steps.push_back(std::move(step));
  };
  Digraph d = build_digraph(g);
  record("initial", d, {});
  while (auto cycle = find_cycle(d)) {
    d = collapse(d);
    record("collapse", d, *cycle);
  }
  d = transitive_closure(d);
  record("closure", d, {});
  red.result = d;
  red.graph = bipartite_graph_of(d);
  red.ideal = edge_ideal(red.graph);
  return red;
}

AntichainFamily antichains(const Digraph& d, std::size_t cap) {
  if (d.c > cap) throw CapExceeded("antichain enumeration is capped at " + std::to_string(cap));
  require_acyclic(d, "antichains");
  const auto comp = comparability(d);
  AntichainFamily fam;
  auto rec = [&](auto&& self, std::size_t start, VertexMask chosen, VertexMask blocked) -> void {
    fam.antichains.push_back(chosen);
    fam.max_size = std::max(fam.max_size, popcount(chosen));
    for (std::size_t v = start; v < d.c; ++v) {
      if (blocked & bit(v)) continue;
      self(self, v + 1, chosen | bit(v), blocked | comp[v]);
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(fam.antichains.begin(), fam.antichains.end(), lex_less);
  return fam;
}

std::uint64_t count_antichains(const Digraph& d) {
  require_acyclic(d, "count_antichains");
  const auto comp = comparability(d);
  std::unordered_map<VertexMask, std::uint64_t> memo;
  auto rec = [&](auto&& self, VertexMask avail) -> std::uint64_t {
    if (avail == 0) return 1;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const std::size_t v = lowest(avail);
    const std::uint64_t total = self(self, avail & ~bit(v)) + self(self, avail & ~bit(v) & ~comp[v]);
    memo.emplace(avail, total);
    return total;
  };
  return rec(rec, low_bits(d.c));
}

std::size_t max_antichain_size(const Digraph& d) {
  require_acyclic(d, "max_antichain_size");
  const auto comp = comparability(d);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d.c; ++i)
    for (std::size_t j : indices_of(comp[i]))
      if (i < j) edges.push_back({i, j});
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d.c; ++i) names.push_back(std::to_string(i + 1));
  return independence_number(Graph(std::move(names), edges));
}

Rational mu(std::size_t rho, std::size_t gamma) {
  Rational r = 1;
  for (std::size_t k = rho + 1; k <= gamma; ++k) r *= Rational(k + rho, k);
  return r;
}

MuComparison mu_inequality(std::size_t rho, std::size_t gamma, std::size_t gamma1) {
  if (rho == 0) throw InvalidInput("mu_inequality needs rho >= 1");
  if (gamma1 > gamma || gamma == 0) throw InvalidInput("mu_inequality needs 1 <= gamma1 <= gamma");
  MuComparison cmp;
  const Rational two_rho = Rational(boost::multiprecision::cpp_int(1) << rho);
  cmp.lhs = two_rho * mu(rho, gamma - 1) + (two_rho / 2) * mu(rho - 1, gamma - gamma1);
  cmp.rhs = two_rho * mu(rho, gamma);
  cmp.holds = cmp.lhs < cmp.rhs;
  cmp.hypotheses = rho >= 2 && rho < gamma && gamma <= rho * gamma1 && rho - 1 + gamma1 <= gamma;
  return cmp;
}

bool mu_inequality_holds(std::size_t rho, std::size_t gamma, std::size_t gamma1) {
  return mu_inequality(rho, gamma, gamma1).holds;
}

CmVerdict is_cm_bipartite(const Graph& g, std::size_t matching_cap) {
  if (!g.is_bipartite()) throw InvalidInput("is_cm_bipartite needs a bipartite graph");
  CmVerdict v;
  const VertexMask left = g.bipartition()->left;
  if (popcount(left) * 2 != g.num_vertices() || !is_perfectly_matched(g)) {
    v.reason = "not perfectly matched";
    return v;
  }
  const auto matchings = perfect_matchings(g);
  if (matchings.size() > matching_cap) throw CapExceeded("too many perfect matchings to search");
  for (const Matching& m : matchings) {
    const Digraph d = build_digraph(g, m);
    MatchingVerdict mv{m, is_acyclic(d), is_transitively_closed(d)};
    if (mv.acyclic && mv.transitively_closed && !v.cohen_macaulay) {
      v.cohen_macaulay = true;
      // Order by number of predecessors: arcs then run from lower to higher.
      const auto reach = reachability(d);
      const auto back = reverse_reach(reach);
      std::vector<std::size_t> order(d.c);
      for (std::size_t i = 0; i < d.c; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return popcount(back[a]) < popcount(back[b]); });
      for (std::size_t i : order) v.labeling.push_back(d.labels[i]);
    }
    v.per_matching.push_back(std::move(mv));
  }
  v.reason = v.cohen_macaulay ? "digraph is a poset" : "no perfect matching gives a poset";
  return v;
}

std::size_t antichain_multiplicity(const Digraph& d) {
  if (!is_poset(d)) throw InvalidInput("antichain_multiplicity needs a poset");
  return static_cast<std::size_t>(count_antichains(d));
}

std::vector<VertexMask> unmixed_primes_from_antichains(const Digraph& d) {
  if (!is_poset(d)) throw InvalidInput("unmixed_primes_from_antichains needs a poset");
  const auto reach = reachability(d);
  std::vector<VertexMask> primes;
  for (VertexMask a : antichains(d).antichains) {
    VertexMask up = a;  // j with j >= i for some i in A
    for (std::size_t i : indices_of(a)) up |= reach[i];
    const VertexMask xs = low_bits(d.c) & ~up;
    primes.push_back(xs | (up << d.c));
  }
  std::sort(primes.begin(), primes.end(), lex_less);
  return primes;
}

nlohmann::json to_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [i, j] : d.arcs()) arcs.push_back({i + 1, j + 1});
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t i = 0; i < d.c; ++i)
    labels[std::to_string(i + 1)] = {{"x", d.labels[i].first}, {"y", d.labels[i].second}};
  return {{"c", d.c}, {"arcs", std::move(arcs)}, {"labels", std::move(labels)}};
}

nlohmann::json to_json(const AntichainFamily& f) {
  nlohmann::json list = nlohmann::json::array();
  for (VertexMask a : f.antichains) {
    nlohmann::json s = nlohmann::json::array();
    for (std::size_t i : indices_of(a)) s.push_back(i + 1);
    list.push_back(std::move(s));
  }
  return {{"count", f.count()}, {"max_size", f.max_size}, {"antichains", std::move(list)}};
}

nlohmann::json to_json(const Reduction& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    nlohmann::json contracted = nlohmann::json::array();
    for (std::size_t i : s.contracted) contracted.push_back(i + 1);
    steps.push_back({{"kind", s.kind},
                     {"digraph", to_json(s.digraph)},
                     {"contracted", std::move(contracted)},
                     {"e", s.e},
                     {"kappa", s.kappa},
                     {"height", s.height}});
  }
  return {{"steps", std::move(steps)}, {"graph", to_json(r.graph)}, {"ideal", to_json(r.ideal)}};
}

}  // namespace edgeideal
