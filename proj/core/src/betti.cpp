#include "edgeideal/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "edgeideal/linalg.hpp"
#include "edgeideal/parallel.hpp"
#include "edgeideal/simplicial.hpp"

namespace edgeideal {

std::size_t BettiTable::beta(std::size_t l, std::size_t j) const {
  auto it = graded.find({l, j});
  return it == graded.end() ? 0 : it->second;
}

std::size_t BettiTable::beta_at(std::size_t l, VertexMask sigma) const {
  if (!has_multigraded) throw InvalidInput("table has no multigraded entries");
  auto it = multigraded.find({l, sigma});
  return it == multigraded.end() ? 0 : it->second;
}

std::size_t BettiTable::projdim() const {
  std::size_t p = 0;
  for (const auto& [key, v] : graded) p = std::max(p, key.first);
  return p;
}

std::optional<std::size_t> BettiTable::M(std::size_t l) const {
  std::optional<std::size_t> best;
  for (const auto& [key, v] : graded)
    if (key.first == l) best = std::max(best.value_or(0), key.second);
  return best;
}

std::optional<std::size_t> BettiTable::m(std::size_t l) const {
  for (const auto& [key, v] : graded)
    if (key.first == l) return key.second;  // map order: smallest j first
  return std::nullopt;
}

std::vector<std::size_t> BettiTable::M_list() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= projdim(); ++l) out.push_back(M(l).value_or(0));
  return out;
}

std::vector<std::size_t> BettiTable::m_list() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= projdim(); ++l) out.push_back(m(l).value_or(0));
  return out;
}

std::size_t BettiTable::reg() const {
  std::size_t r = 0;
  for (const auto& [key, v] : graded) r = std::max(r, key.second - key.first);
  return r;
}

bool same_betti_numbers(const BettiTable& a, const BettiTable& b) {
  if (a.graded != b.graded) return false;
  if (a.has_multigraded && b.has_multigraded) return a.multigraded == b.multigraded;
  return true;
}

namespace {

// Edge ideals only: when N(v) is inside N(w) within sigma for some v != w,
// deleting w keeps the homotopy type of the independence complex. Returns
// nullopt when the reduced set has an isolated vertex (a cone).
std::optional<VertexMask> fold(const std::vector<VertexMask>& adj, VertexMask sigma) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v : indices_of(sigma)) {
      const VertexMask nv = adj[v] & sigma;
      if (nv == 0) return std::nullopt;
      for (std::size_t w : indices_of(sigma & ~bit(v))) {
        if ((nv & ~adj[w]) == 0) {
          sigma &= ~bit(w);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return sigma;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  require_characteristic(options.characteristic);
  if (!ideal.is_square_free())
    throw InvalidInput("betti_table needs a square-free ideal; polarize first");
  const std::size_t n = ideal.num_variables();
  if (n > options.cap_n)
    throw CapExceeded("betti_table: " + std::to_string(n) + " variables exceeds the cap of " +
                      std::to_string(options.cap_n));
  BettiTable t;
  t.characteristic = options.characteristic;
  t.variables = ideal.variables();
  t.has_multigraded = true;
  if (ideal.is_unit()) return t;

  const auto& supports = ideal.supports();
  // Degree at most two: a graph plus variables that are never faces.
  const bool folding = options.prune && ideal.max_degree() <= 2;
  std::vector<VertexMask> adj(n, 0);
  VertexMask linear = 0;
  if (folding)
    for (VertexMask s : supports) {
      const auto ends = indices_of(s);
      if (ends.size() == 1) {
        linear |= s;
        continue;
      }
      adj[ends[0]] |= bit(ends[1]);
      adj[ends[1]] |= bit(ends[0]);
    }

  // Each surviving multidegree points at the vertex set whose complex is
  // actually computed; folded sets are shared.
  std::vector<VertexMask> candidates;
  std::vector<std::size_t> slot_of;
  std::vector<VertexMask> computed;
  std::unordered_map<VertexMask, std::size_t> slots;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t sigma = 0; sigma < total; ++sigma) {
    VertexMask target = sigma;
    if (options.prune) {
      VertexMask covered = 0;
      for (VertexMask s : supports)
        if ((s & ~sigma) == 0) covered |= s;
      if (covered != sigma) continue;
      if (folding) {
        const auto folded = fold(adj, sigma & ~linear);
        if (!folded) continue;
        target = *folded;
      }
    }
    auto [it, fresh] = slots.try_emplace(target, computed.size());
    if (fresh) computed.push_back(target);
    candidates.push_back(sigma);
    slot_of.push_back(it->second);
  }

  std::vector<std::vector<std::size_t>> ranks(computed.size());
  parallel_for(computed.size(), options.jobs, [&](std::size_t i) {
    ranks[i] = reduced_homology_from_faces(independence_faces(supports, computed[i]), options.characteristic);
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t size = popcount(candidates[i]);
    const auto& r = ranks[slot_of[i]];
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] == 0) continue;
      // Index k is dimension k - 1 = |sigma| - l - 1.
      const std::size_t l = size - k;
      t.multigraded[{l, candidates[i]}] = r[k];
      t.graded[{l, size}] += r[k];
    }
  }
  return t;
}

BettiTable taylor_oracle_betti(const MonomialIdeal& ideal, std::uint32_t characteristic,
                               std::size_t cap_m) {
  require_characteristic(characteristic);
  const std::size_t m = ideal.num_generators();
  if (m > cap_m)
    throw CapExceeded("Taylor oracle: " + std::to_string(m) + " generators exceeds the cap of " +
                      std::to_string(cap_m));
  BettiTable t;
  t.characteristic = characteristic;
  t.variables = ideal.variables();
  t.has_multigraded = ideal.is_square_free();
  if (ideal.is_unit()) return t;

  const std::size_t n = ideal.num_variables();
  const std::uint64_t subsets = std::uint64_t{1} << m;
  // Group the subsets by lcm: group[s] indexes (degree, support).
  std::vector<std::uint32_t> group(subsets);
  std::vector<std::pair<std::size_t, VertexMask>> group_info;
  if (ideal.is_square_free()) {
    const auto& supports = ideal.supports();
    std::vector<VertexMask> lcm(subsets, 0);
    for (std::uint64_t s = 1; s < subsets; ++s) lcm[s] = lcm[s & (s - 1)] | supports[lowest(s)];
    std::unordered_map<VertexMask, std::uint32_t> ids;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      auto [it, fresh] = ids.try_emplace(lcm[s], static_cast<std::uint32_t>(group_info.size()));
      if (fresh) group_info.emplace_back(popcount(lcm[s]), lcm[s]);
      group[s] = it->second;
    }
  } else {
    const auto& gens = ideal.generators();
    std::vector<Exponents> lcm(subsets, Exponents(n, 0));
    for (std::uint64_t s = 1; s < subsets; ++s) {
      const std::size_t k = lowest(s);
      const Exponents& rest = lcm[s & (s - 1)];
      for (std::size_t i = 0; i < n; ++i) lcm[s][i] = std::max(rest[i], gens[k][i]);
    }
    std::map<Exponents, std::uint32_t> ids;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      auto [it, fresh] = ids.try_emplace(lcm[s], static_cast<std::uint32_t>(group_info.size()));
      if (fresh) {
        std::size_t degree = 0;
        VertexMask sigma = 0;
        for (std::size_t i = 0; i < n; ++i) {
          degree += lcm[s][i];
          if (lcm[s][i] != 0) sigma |= bit(i);
        }
        group_info.emplace_back(degree, sigma);
      }
      group[s] = it->second;
    }
  }
  std::vector<std::vector<std::uint64_t>> members(group_info.size());
  for (std::uint64_t s = 0; s < subsets; ++s) members[group[s]].push_back(s);

  for (std::size_t gi = 0; gi < members.size(); ++gi) {
    std::size_t top = 0;
    for (auto s : members[gi]) top = std::max(top, popcount(s));
    // Within one size the subsets stay in increasing order.
    std::vector<std::vector<std::uint64_t>> by_size(top + 1);
    for (auto s : members[gi]) by_size[popcount(s)].push_back(s);
    // rank of d_k : C_k -> C_{k-1}
    std::vector<std::size_t> rank(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
      if (by_size[k].empty() || by_size[k - 1].empty()) continue;
      const auto& lower = by_size[k - 1];
      std::vector<SparseRow> mat(by_size[k].size());
      for (std::size_t r = 0; r < by_size[k].size(); ++r) {
        const std::uint64_t s = by_size[k][r];
        std::size_t sign = 0;
        for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
          const std::uint64_t face = s & ~(rest & (~rest + 1));
          auto it = std::lower_bound(lower.begin(), lower.end(), face);
          if (it != lower.end() && *it == face)
            mat[r].emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign % 2 == 0 ? 1 : -1);
          ++sign;
        }
        std::sort(mat[r].begin(), mat[r].end());
      }
      rank[k] = sparse_rank(std::move(mat), characteristic);
    }
    const auto [degree, sigma] = group_info[gi];
    for (std::size_t k = 0; k <= top; ++k) {
      const std::size_t h = by_size[k].size() - rank[k] - rank[k + 1];
      if (h == 0) continue;
      t.graded[{k, degree}] += h;
      if (t.has_multigraded) t.multigraded[{k, sigma}] = h;
    }
  }
  return t;
}

bool is_pure(const BettiTable& t) {
  for (std::size_t l = 1; l <= t.projdim(); ++l)
    if (t.M(l) != t.m(l)) return false;
  return true;
}

bool is_quasi_pure(const BettiTable& t) {
  const std::size_t p = t.projdim();
  for (std::size_t l = 1; l + 1 <= p; ++l)
    if (t.m(l + 1).value_or(0) < t.M(l).value_or(0)) return false;
  return true;
}

bool is_cohen_macaulay(const BettiTable& t, const MonomialIdeal& ideal) {
  return !t.empty() && t.projdim() == height(ideal);
}

bool complete_multipartite_strand(const MonomialIdeal& ideal, VertexMask sigma) {
  if (!ideal.is_square_free_quadratic() && !ideal.is_zero())
    throw InvalidInput("complete_multipartite_strand needs an edge ideal");
  if (popcount(sigma) < 2) return false;
  const std::size_t n = ideal.num_variables();
  std::vector<VertexMask> adj(n, 0);
  for (VertexMask s : ideal.supports()) {
    const auto ends = indices_of(s);
    adj[ends[0]] |= bit(ends[1]);
    adj[ends[1]] |= bit(ends[0]);
  }
  // Flood the complement graph inside sigma from its least vertex.
  VertexMask seen = bit(lowest(sigma));
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (std::size_t v : indices_of(frontier)) next |= sigma & ~adj[v] & ~bit(v);
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen != sigma;
}

nlohmann::json to_json(const BettiTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t l = 0; l <= t.projdim() && !t.empty(); ++l) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, v] : t.graded)
      if (key.first == l) entries.push_back({{"j", key.second}, {"beta", v}});
    rows.push_back({{"l", l}, {"entries", std::move(entries)}, {"M", t.M(l).value_or(0)},
                    {"m", t.m(l).value_or(0)}});
  }
  return {{"char", t.characteristic},
          {"rows", std::move(rows)},
          {"reg", t.reg()},
          {"projdim", t.projdim()}};
}

std::string render_betti_triangle(const BettiTable& t) {
  std::ostringstream out;
  if (t.empty()) {
    out << "zero module\n";
    return out.str();
  }
  const std::size_t p = t.projdim();
  const std::size_t r = t.reg();
  std::vector<std::vector<std::string>> cells(r + 2, std::vector<std::string>(p + 1));
  std::vector<std::size_t> totals(p + 1, 0);
  for (const auto& [key, v] : t.graded) totals[key.first] += v;
  for (std::size_t l = 0; l <= p; ++l) {
    cells[0][l] = std::to_string(totals[l]);
    for (std::size_t row = 0; row <= r; ++row) {
      const std::size_t v = t.beta(l, l + row);
      cells[row + 1][l] = v == 0 ? "." : std::to_string(v);
    }
  }
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  width = std::max(width, std::to_string(p).size());
  std::vector<std::string> labels{"total:"};
  for (std::size_t row = 0; row <= r; ++row) labels.push_back(std::to_string(row) + ":");
  std::size_t label_width = 0;
  for (const auto& s : labels) label_width = std::max(label_width, s.size());

  out << std::string(label_width, ' ');
  for (std::size_t l = 0; l <= p; ++l) {
    const std::string h = std::to_string(l);
    out << ' ' << std::string(width - h.size(), ' ') << h;
  }
  out << '\n';
  for (std::size_t row = 0; row < cells.size(); ++row) {
    out << std::string(label_width - labels[row].size(), ' ') << labels[row];
    for (const auto& c : cells[row]) out << ' ' << std::string(width - c.size(), ' ') << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace edgeideal
