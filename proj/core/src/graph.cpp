#include "edgeideal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace edgeideal {

namespace {

std::optional<Bipartition> two_colouring(std::size_t n, const std::vector<VertexMask>& adj) {
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t w : indices_of(adj[v])) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? b.left : b.right) |= bit(v);
  return b;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Maximum matching size on the vertices of `mask`.
class MatchingOracle {
 public:
  explicit MatchingOracle(const Graph& g) : g_(g) {}

  std::size_t size_on(VertexMask mask) {
    if (g_.is_bipartite()) return kuhn(mask);
    return exhaustive(mask);
  }

 private:
  std::size_t kuhn(VertexMask mask) {
    const std::size_t n = g_.num_vertices();
    const VertexMask left = g_.bipartition()->left & mask;
    std::vector<int> partner(n, -1);
    std::size_t size = 0;
    for (std::size_t v : indices_of(left)) {
      VertexMask seen = 0;
      if (augment(v, mask, seen, partner)) ++size;
    }
    return size;
  }

  bool augment(std::size_t v, VertexMask mask, VertexMask& seen, std::vector<int>& partner) {
    for (std::size_t w : indices_of(g_.neighbors(v) & mask & ~seen)) {
      seen |= bit(w);
      if (partner[w] == -1 ||
          augment(static_cast<std::size_t>(partner[w]), mask, seen, partner)) {
        partner[w] = static_cast<int>(v);
        return true;
      }
    }
    return false;
  }

  std::size_t exhaustive(VertexMask mask) {
    // Drop vertices with no neighbour inside the mask.
    VertexMask live = 0;
    for (std::size_t v : indices_of(mask))
      if (g_.neighbors(v) & mask) live |= bit(v);
    if (live == 0) return 0;
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;
    const std::size_t v = lowest(live);
    std::size_t best = exhaustive(live & ~bit(v));
    for (std::size_t u : indices_of(g_.neighbors(v) & live)) {
      if (best * 2 + 2 > popcount(live)) break;
      best = std::max(best, 1 + exhaustive(live & ~bit(v) & ~bit(u)));
    }
    memo_.emplace(live, best);
    return best;
  }

  const Graph& g_;
  std::unordered_map<VertexMask, std::size_t> memo_;
};

// Minimum vertex cover size of the subgraph induced on `mask`.
class CoverSolver {
 public:
  explicit CoverSolver(const Graph& g) : g_(g) {}

  std::size_t solve(VertexMask mask) {
    VertexMask live = 0;
    for (std::size_t v : indices_of(mask))
      if (g_.neighbors(v) & mask) live |= bit(v);
    if (live == 0) return 0;
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;

    std::size_t best_v = 0;
    std::size_t best_deg = 0;
    std::size_t result = 0;
    bool reduced = false;
    for (std::size_t v : indices_of(live)) {
      const std::size_t d = popcount(g_.neighbors(v) & live);
      if (d == 1) {
        // Some optimal cover contains the neighbour of a leaf.
        const VertexMask w = g_.neighbors(v) & live;
        result = 1 + solve(live & ~bit(v) & ~w);
        reduced = true;
        break;
      }
      if (d > best_deg) {
        best_deg = d;
        best_v = v;
      }
    }
    if (!reduced) {
      const VertexMask nb = g_.neighbors(best_v) & live;
      const std::size_t take = 1 + solve(live & ~bit(best_v));
      const std::size_t skip = best_deg + solve(live & ~bit(best_v) & ~nb);
      result = std::min(take, skip);
    }
    memo_.emplace(live, result);
    return result;
  }

  // Smallest cover containing `in` and avoiding `out`, or nullopt when the
  // constraints are contradictory.
  std::optional<std::size_t> constrained(VertexMask in, VertexMask out) {
    VertexMask forced = in;
    for (std::size_t v : indices_of(out)) {
      if (g_.neighbors(v) & out) return std::nullopt;
      forced |= g_.neighbors(v);
    }
    if (forced & out) return std::nullopt;
    return popcount(forced) + solve(g_.all() & ~forced & ~out);
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexMask, std::size_t> memo_;
};

void bron_kerbosch(const std::vector<VertexMask>& non_adj, VertexMask r, VertexMask p, VertexMask x,
                   std::vector<VertexMask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = lowest(p | x);
  std::size_t best = 0;
  for (std::size_t u : indices_of(p | x)) {
    const std::size_t d = popcount(p & non_adj[u]);
    if (d >= best) {
      best = d;
      pivot = u;
    }
  }
  for (std::size_t v : indices_of(p & ~non_adj[pivot])) {
    bron_kerbosch(non_adj, r | bit(v), p & non_adj[v], x & non_adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges,
             std::optional<Bipartition> bipartition)
    : names_(std::move(vertices)) {
  const std::size_t n = names_.size();
  if (n > kMaxMaskWidth) throw CapExceeded("graphs are limited to 64 vertices");
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n) throw InvalidInput("duplicate vertex name");
  }
  adjacency_.assign(n, 0);
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) throw InvalidInput("edge refers to an unknown vertex");
    if (e.u == e.v) throw InvalidInput("loop at vertex " + names_[e.u]);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adjacency_[e.u] & bit(e.v)) continue;
    adjacency_[e.u] |= bit(e.v);
    adjacency_[e.v] |= bit(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (bipartition) {
    const Bipartition& b = *bipartition;
    if ((b.left & b.right) != 0 || (b.left | b.right) != all())
      throw InvalidInput("bipartition must split the vertex set into two disjoint parts");
    for (const Edge& e : edges_) {
      const bool cross = ((b.left & bit(e.u)) && (b.right & bit(e.v))) ||
                         ((b.right & bit(e.u)) && (b.left & bit(e.v)));
      if (!cross)
        throw InvalidInput("edge " + names_[e.u] + " " + names_[e.v] + " lies inside one side");
    }
    bipartition_ = b;
  } else {
    bipartition_ = two_colouring(n, adjacency_);
  }
}

Graph Graph::from_names(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        std::optional<Bipartition> bipartition) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InvalidInput("edge " + a + " " + b + " refers to an unknown vertex");
    es.push_back({ia->second, ib->second});
  }
  return Graph(std::move(vertices), es, bipartition);
}

std::optional<std::size_t> Graph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Graph::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InvalidInput("unknown vertex " + std::string(name));
}

VertexMask Graph::mask_of(const std::vector<std::string>& names) const {
  VertexMask m = 0;
  for (const auto& s : names) m |= bit(require_index(s));
  return m;
}

std::vector<std::string> Graph::names_of(VertexMask m) const {
  std::vector<std::string> out;
  for (std::size_t i : indices_of(m)) out.push_back(names_[i]);
  return out;
}

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = index.emplace(s, names.size());
    if (fresh) names.push_back(s);
    return it->second;
  };

  struct RawEdge {
    std::size_t u, v, line;
  };
  std::vector<RawEdge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> header;
  std::size_t header_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string line =
        trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto tokens = split_ws(std::string_view(line).substr(1));
      if (tokens.empty() || tokens[0] != "bipartite") continue;
      if (header) throw ParseError(line_no, "second #bipartite header");
      std::vector<std::string> v1, v2;
      std::vector<std::string>* side = nullptr;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        if (tok == "V1:") side = &v1;
        else if (tok == "V2:") side = &v2;
        else if (tok == "/") side = nullptr;
        else if (side == nullptr)
          throw ParseError(line_no, "expected 'V1:' or 'V2:' before vertex names in header");
        else side->push_back(tok);
      }
      for (const auto& s : v1) intern(s);
      for (const auto& s : v2) intern(s);
      header.emplace(std::move(v1), std::move(v2));
      header_line = line_no;
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(line_no, "expected exactly two vertex names");
    if (tokens[0] == tokens[1]) throw ParseError(line_no, "loop at vertex " + tokens[0]);
    std::size_t u = intern(tokens[0]);
    std::size_t v = intern(tokens[1]);
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge " + tokens[0] +
                            " " + tokens[1] + " ignored");
      continue;
    }
    edges.push_back({u, v, line_no});
  }
  if (names.size() > kMaxMaskWidth) throw CapExceeded("graphs are limited to 64 vertices");

  std::optional<Bipartition> bip;
  if (header) {
    Bipartition b;
    for (const auto& s : header->first) b.left |= bit(index.at(s));
    for (const auto& s : header->second) {
      if (b.left & bit(index.at(s)))
        throw ParseError(header_line, "vertex " + s + " listed on both sides");
      b.right |= bit(index.at(s));
    }
    for (const auto& e : edges) {
      const bool cross = ((b.left & bit(e.u)) && (b.right & bit(e.v))) ||
                         ((b.right & bit(e.u)) && (b.left & bit(e.v)));
      if (!cross)
        throw ParseError(e.line, "edge " + names[e.u] + " " + names[e.v] +
                                     " violates the declared bipartition");
    }
    if ((b.left | b.right) != low_bits(names.size()))
      throw ParseError(header_line, "header bipartition does not cover every vertex");
    bip = b;
  }
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& e : edges) es.push_back({e.u, e.v});
  return Graph(std::move(names), es, bip);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  j["edges"] = std::move(edges);
  if (g.bipartition()) {
    j["bipartition"] = {{"v1", g.names_of(g.bipartition()->left)},
                        {"v2", g.names_of(g.bipartition()->right)}};
  } else {
    j["bipartition"] = nullptr;
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  auto names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  std::optional<Bipartition> bip;
  if (j.contains("bipartition") && !j["bipartition"].is_null()) {
    Graph plain = Graph::from_names(names, edges);
    Bipartition b;
    b.left = plain.mask_of(j["bipartition"].at("v1").get<std::vector<std::string>>());
    b.right = plain.mask_of(j["bipartition"].at("v2").get<std::vector<std::string>>());
    bip = b;
  }
  return Graph::from_names(std::move(names), edges, bip);
}

std::size_t matching_number(const Graph& g) {
  MatchingOracle oracle(g);
  return oracle.size_on(g.all());
}

Matching max_matching(const Graph& g) {
  MatchingOracle oracle(g);
  const std::size_t target = oracle.size_on(g.all());
  Matching m;
  VertexMask available = g.all();
  for (std::size_t v = 0; v < g.num_vertices() && m.size() < target; ++v) {
    if (!(available & bit(v))) continue;
    bool matched = false;
    for (std::size_t u : indices_of(g.neighbors(v) & available & ~bit(v))) {
      const VertexMask rest = available & ~bit(v) & ~bit(u);
      if (m.size() + 1 + oracle.size_on(rest) == target) {
        m.edges.push_back({std::min(u, v), std::max(u, v)});
        available = rest;
        matched = true;
        break;
      }
    }
    if (!matched) available &= ~bit(v);
  }
  return m;
}

bool is_perfectly_matched(const Graph& g) {
  return g.num_vertices() % 2 == 0 && matching_number(g) * 2 == g.num_vertices();
}

std::vector<Matching> perfect_matchings(const Graph& g) {
  if (!g.is_bipartite()) throw InvalidInput("perfect_matchings requires a bipartite graph");
  const auto left = indices_of(g.bipartition()->left);
  std::vector<Matching> out;
  if (left.size() * 2 != g.num_vertices()) return out;
  Matching current;
  auto rec = [&](auto&& self, std::size_t k, VertexMask used) -> void {
    if (k == left.size()) {
      out.push_back(current);
      return;
    }
    const std::size_t v = left[k];
    for (std::size_t w : indices_of(g.neighbors(v) & ~used)) {
      current.edges.push_back({std::min(v, w), std::max(v, w)});
      self(self, k + 1, used | bit(w));
      current.edges.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::size_t vertex_cover_number(const Graph& g) {
  CoverSolver solver(g);
  return solver.solve(g.all());
}

VertexMask min_vertex_cover(const Graph& g) {
  CoverSolver solver(g);
  const std::size_t k = solver.solve(g.all());
  VertexMask in = 0;
  VertexMask out = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto size = solver.constrained(in | bit(v), out);
    if (size && *size <= k) in |= bit(v);
    else out |= bit(v);
  }
  return in;
}

std::vector<VertexMask> enumerate_minimal_vertex_covers(const Graph& g, std::size_t cap) {
  if (g.num_vertices() > cap)
    throw CapExceeded("minimal vertex cover enumeration is capped at " + std::to_string(cap) +
                      " vertices");
  const VertexMask all = g.all();
  std::vector<VertexMask> non_adj(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) non_adj[v] = all & ~g.neighbors(v) & ~bit(v);
  std::vector<VertexMask> independent;
  bron_kerbosch(non_adj, 0, all, 0, independent);
  std::vector<VertexMask> covers;
  covers.reserve(independent.size());
  for (VertexMask s : independent) covers.push_back(all & ~s);
  std::sort(covers.begin(), covers.end(), lex_less);
  return covers;
}

Graph induced_subgraph(const Graph& g, VertexMask sigma) {
  if (sigma & ~g.all()) throw InvalidInput("induced_subgraph: vertex set not contained in graph");
  const auto keep = indices_of(sigma);
  std::vector<std::size_t> remap(g.num_vertices(), 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = i;
    names.push_back(g.name(keep[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if ((sigma & bit(e.u)) && (sigma & bit(e.v))) edges.push_back({remap[e.u], remap[e.v]});
  std::optional<Bipartition> bip;
  if (g.bipartition()) {
    Bipartition b;
    for (std::size_t i = 0; i < keep.size(); ++i)
      (g.bipartition()->left & bit(keep[i]) ? b.left : b.right) |= bit(i);
    bip = b;
  }
  return Graph(std::move(names), edges, bip);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& sigma) {
  return induced_subgraph(g, g.mask_of(sigma));
}

std::size_t induced_matching_number(const Graph& g) {
  std::unordered_map<VertexMask, std::size_t> memo;
  auto rec = [&](auto&& self, VertexMask avail) -> std::size_t {
    VertexMask live = 0;
    for (std::size_t v : indices_of(avail))
      if (g.neighbors(v) & avail) live |= bit(v);
    if (live == 0) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    const std::size_t v = lowest(live);
    std::size_t best = self(self, live & ~bit(v));
    for (std::size_t u : indices_of(g.neighbors(v) & live)) {
      const VertexMask blocked = bit(v) | bit(u) | g.neighbors(v) | g.neighbors(u);
      best = std::max(best, 1 + self(self, live & ~blocked));
    }
    memo.emplace(live, best);
    return best;
  };
  return rec(rec, g.all());
}

std::size_t independence_number(const Graph& g) {
  std::unordered_map<VertexMask, std::size_t> memo;
  auto rec = [&](auto&& self, VertexMask avail) -> std::size_t {
    if (avail == 0) return 0;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    std::size_t v = lowest(avail);
    std::size_t best_deg = 0;
    for (std::size_t u : indices_of(avail)) {
      const std::size_t d = popcount(g.neighbors(u) & avail);
      if (d >= best_deg + (u == v ? 0 : 1)) {
        best_deg = d;
        v = u;
      }
    }
    std::size_t result;
    if (best_deg == 0) {
      result = popcount(avail);
    } else {
      result = std::max(self(self, avail & ~bit(v)),
                        1 + self(self, avail & ~bit(v) & ~g.neighbors(v)));
    }
    memo.emplace(avail, result);
    return result;
  };
  return rec(rec, g.all());
}

Graph suspension(const Graph& core, std::string_view leaf_suffix) {
  std::vector<std::string> names = core.vertices();
  const std::size_t n = core.num_vertices();
  for (std::size_t i = 0; i < n; ++i) names.push_back(core.name(i) + std::string(leaf_suffix));
  std::vector<Edge> edges = core.edges();
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n + i});
  return Graph(std::move(names), edges);
}

std::optional<Graph> suspension_decompose(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n % 2 != 0) return std::nullopt;
  VertexMask leaves = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) return std::nullopt;
    if (d != 1) continue;
    const std::size_t w = lowest(g.neighbors(v));
    if (g.degree(w) >= 2 || w < v) leaves |= bit(v);
  }
  const VertexMask core = g.all() & ~leaves;
  if (popcount(core) != popcount(leaves)) return std::nullopt;
  for (std::size_t c : indices_of(core))
    if (popcount(g.neighbors(c) & leaves) != 1) return std::nullopt;
  return induced_subgraph(g, core);
}

std::size_t largest_complete_bipartite(const Graph& g) {
  if (!g.is_bipartite()) throw InvalidInput("largest_complete_bipartite requires a bipartite graph");
  VertexMask side = g.bipartition()->left;
  if (popcount(g.bipartition()->right) < popcount(side)) side = g.bipartition()->right;
  const auto members = indices_of(side);
  if (members.size() > 30) throw CapExceeded("largest_complete_bipartite: side too large");
  std::size_t best = 0;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << members.size()); ++sub) {
    VertexMask common = ~VertexMask{0};
    for (std::size_t k = 0; k < members.size(); ++k)
      if (sub & (std::uint64_t{1} << k)) common &= g.neighbors(members[k]);
    if (common == 0) continue;
    best = std::max(best, popcount(sub) + popcount(common));
  }
  return best;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.all();
  while (left != 0) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (std::size_t v : indices_of(frontier)) next |= g.neighbors(v);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.num_edges() + connected_components(g).size() == g.num_vertices();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Map vertices of `a` in decreasing-degree order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return da[x] > da[y]; });
  std::vector<std::size_t> image(n, 0);
  auto rec = [&](auto&& self, std::size_t k, VertexMask used) -> bool {
    if (k == n) return true;
    const std::size_t v = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if ((used & bit(w)) || db[w] != da[v]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        const std::size_t u = order[t];
        ok = a.adjacent(u, v) == b.adjacent(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      if (self(self, k + 1, used | bit(w))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

Graph path_graph(std::size_t vertices, std::string_view prefix) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i + 1));
    if (i > 0) edges.push_back({i - 1, i});
  }
  return Graph(std::move(names), edges);
}

Graph cycle_graph(std::size_t vertices, std::string_view prefix) {
  if (vertices < 3) throw InvalidInput("a cycle needs at least three vertices");
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i + 1));
    edges.push_back({i, (i + 1) % vertices});
  }
  return Graph(std::move(names), edges);
}

Graph disjoint_edges(std::size_t count) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back("y" + std::to_string(i + 1));
    edges.push_back({i, count + i});
  }
  Bipartition b{low_bits(count), low_bits(2 * count) & ~low_bits(count)};
  return Graph(std::move(names), edges, b);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::string> names{"c"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < leaves; ++i) {
    names.push_back("l" + std::to_string(i + 1));
    edges.push_back({0, i + 1});
  }
  return Graph(std::move(names), edges);
}

}  // namespace edgeideal
