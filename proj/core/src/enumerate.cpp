#include "edgeideal/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace edgeideal {

namespace {

// A biadjacency matrix: one byte per row, bit j set when the row vertex is
// adjacent to column j. At most 8 columns.
using Rows = std::string;

std::size_t bits(unsigned v) { return static_cast<std::size_t>(std::popcount(v)); }

// Smallest sorted row list over the column permutations that respect a
// weight-based refinement of the columns.
Rows canonical_rows(const Rows& rows, std::size_t width) {
  std::vector<std::size_t> colour(width);
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<std::size_t> sig;
    for (unsigned char r : rows)
      if (r & (1u << j)) sig.push_back(bits(r));
    std::sort(sig.begin(), sig.end());
    // weight first, then the multiset of row weights meeting the column
    std::size_t h = sig.size();
    for (std::size_t s : sig) h = h * 131 + s + 1;
    colour[j] = h;
  }
  std::vector<std::size_t> order(width);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in order
  for (std::size_t k = 0; k < width;) {
    std::size_t e = k + 1;
    while (e < width && colour[order[e]] == colour[order[k]]) ++e;
    blocks.emplace_back(k, e);
    k = e;
  }
  for (auto [b, e] : blocks) std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));

  Rows best;
  Rows candidate(rows.size(), '\0');
  auto evaluate = [&] {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const unsigned r = static_cast<unsigned char>(rows[i]);
      unsigned mapped = 0;
      for (std::size_t pos = 0; pos < width; ++pos)
        if (r & (1u << order[pos])) mapped |= 1u << pos;
      candidate[i] = static_cast<char>(mapped);
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  };
  auto rec = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<long>(blocks[block].first);
    auto last = order.begin() + static_cast<long>(blocks[block].second);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

Rows transpose(const Rows& rows, std::size_t width) {
  Rows t(width, '\0');
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (static_cast<unsigned char>(rows[i]) & (1u << j)) t[j] = static_cast<char>(t[j] | (1u << i));
  return t;
}

bool hall_holds(const Rows& rows) {
  const std::size_t k = rows.size();
  for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
    unsigned nb = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sub & (1u << i)) nb |= static_cast<unsigned char>(rows[i]);
    if (bits(nb) < bits(sub)) return false;
  }
  return true;
}

Graph graph_from_rows(const Rows& rows, std::size_t width) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < width; ++j) names.push_back("x" + std::to_string(j + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) names.push_back("y" + std::to_string(i + 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (static_cast<unsigned char>(rows[i]) & (1u << j)) edges.push_back({j, width + i});
  Bipartition b{low_bits(width), low_bits(width + rows.size()) & ~low_bits(width)};
  return Graph(std::move(names), edges, b);
}

Rows rows_of(const Graph& g, VertexMask cols, VertexMask rows) {
  const auto cs = indices_of(cols);
  Rows out;
  for (std::size_t r : indices_of(rows)) {
    unsigned v = 0;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (g.adjacent(r, cs[j])) v |= 1u << j;
    out.push_back(static_cast<char>(v));
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_bipartite(std::size_t a, std::size_t b, const BipartiteFilter& filter) {
  if (a == 0 || a > b) throw InvalidInput("enumerate_bipartite needs 1 <= a <= b");
  if (a > 8 || b > 24) throw CapExceeded("enumerate_bipartite: sides too large");
  if (filter.perfect_matching && a != b) return {};
  const unsigned full = (1u << a) - 1;

  // Level k holds the canonical forms of k-row matrices.
  std::vector<Rows> level{Rows{}};
  for (std::size_t k = 0; k < b; ++k) {
    std::unordered_set<Rows> seen;
    std::vector<Rows> next;
    for (const Rows& base : level) {
      for (unsigned v = 1; v <= full; ++v) {
        Rows grown = base;
        grown.push_back(static_cast<char>(v));
        if (filter.perfect_matching && !hall_holds(grown)) continue;
        Rows canon = canonical_rows(grown, a);
        if (seen.insert(canon).second) next.push_back(std::move(canon));
      }
    }
    level = std::move(next);
  }

  std::unordered_set<Rows> final_seen;
  std::vector<Rows> kept;
  for (const Rows& rows : level) {
    unsigned covered = 0;
    for (unsigned char r : rows) covered |= r;
    if (covered != full) continue;
    Rows code = rows;
    if (a == b) code = std::min(code, canonical_rows(transpose(rows, a), a));
    if (final_seen.insert(code).second) kept.push_back(code);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Graph> out;
  for (const Rows& rows : kept) {
    Graph g = graph_from_rows(rows, a);
    if (filter.connected && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_bipartite_up_to(std::size_t max_vertices, const BipartiteFilter& filter) {
  std::vector<Graph> out;
  for (std::size_t total = 2; total <= max_vertices; ++total)
    for (std::size_t a = 1; 2 * a <= total; ++a) {
      auto part = enumerate_bipartite(a, total - a, filter);
      for (auto& g : part) out.push_back(std::move(g));
    }
  return out;
}

std::vector<Graph> enumerate_perfectly_matched(std::size_t max_c, bool connected_only) {
  std::vector<Graph> out;
  for (std::size_t c = 1; c <= max_c; ++c) {
    auto part = enumerate_bipartite(c, c, {true, connected_only});
    for (auto& g : part) out.push_back(std::move(g));
  }
  return out;
}

std::string canonical_code(const Graph& g) {
  if (!g.is_bipartite()) throw InvalidInput("canonical_code needs a bipartite graph");
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) throw InvalidInput("canonical_code needs a graph without isolated vertices");
  VertexMask small = g.bipartition()->left;
  VertexMask large = g.bipartition()->right;
  if (popcount(small) > popcount(large)) std::swap(small, large);
  if (popcount(small) > 8) throw CapExceeded("canonical_code: sides too large");
  Rows code = canonical_rows(rows_of(g, small, large), popcount(small));
  if (popcount(small) == popcount(large))
    code = std::min(code, canonical_rows(rows_of(g, large, small), popcount(large)));
  return std::to_string(popcount(small)) + ":" + code;
}

void for_each_natural_poset(std::size_t c, const std::function<void(const std::vector<VertexMask>&)>& fn) {
  if (c > 16) throw CapExceeded("poset enumeration is capped at 16 elements");
  std::vector<VertexMask> down(c, 0);
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == c) {
      fn(down);
      return;
    }
    // Every down-closed subset of [k] becomes the strict down-set of k.
    auto ideals = [&](auto&& again, std::size_t v, VertexMask chosen) -> void {
      if (v == k) {
        down[k] = chosen;
        self(self, k + 1);
        return;
      }
      // v can join only if everything below it is already in.
      again(again, v + 1, chosen);
      if ((down[v] & ~chosen) == 0) again(again, v + 1, chosen | bit(v));
    };
    ideals(ideals, 0, 0);
  };
  extend(extend, 0);
}

std::vector<MonomialIdeal> random_square_free_ideals(std::size_t count, std::size_t max_n, std::size_t max_m,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
    std::vector<Exponents> gens;
    for (std::size_t g = 0; g < m; ++g) {
      // Mostly low degrees, so the ideals have interesting resolutions.
      const std::size_t deg = std::min<std::size_t>(n, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
      std::vector<std::size_t> pick(n);
      std::iota(pick.begin(), pick.end(), 0);
      std::shuffle(pick.begin(), pick.end(), rng);
      Exponents e(n, 0);
      for (std::size_t i = 0; i < deg; ++i) e[pick[i]] = 1;
      gens.push_back(std::move(e));
    }
    out.emplace_back(std::move(names), std::move(gens));
  }
  return out;
}

}  // namespace edgeideal
