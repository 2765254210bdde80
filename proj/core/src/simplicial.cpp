#include "edgeideal/simplicial.hpp"

#include <algorithm>
#include <set>

#include "edgeideal/linalg.hpp"

namespace edgeideal {

std::vector<VertexMask> maximal_sets(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> out;
  for (VertexMask s : sets) {
    bool covered = false;
    for (VertexMask t : out) {
      if ((s & ~t) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::vector<VertexMask>> SimplicialComplex::faces_by_size() const {
  std::set<VertexMask> all;
  for (VertexMask f : facets) {
    // Every subset of the facet, by the standard submask walk.
    VertexMask sub = f;
    while (true) {
      all.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::vector<VertexMask>> out;
  for (VertexMask face : all) {
    const std::size_t k = popcount(face);
    if (out.size() <= k) out.resize(k + 1);
    out[k].push_back(face);
  }
  return out;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw InvalidInput("stanley_reisner needs a square-free ideal");
  SimplicialComplex complex;
  complex.vertices = ideal.variables();
  if (ideal.is_unit()) return complex;
  const VertexMask all = low_bits(ideal.num_variables());
  // Minimal transversals of the supports, built one generator at a time.
  std::vector<VertexMask> transversals{0};
  for (VertexMask s : ideal.supports()) {
    std::vector<VertexMask> next;
    for (VertexMask t : transversals) {
      if (t & s) {
        next.push_back(t);
      } else {
        for (std::size_t x : indices_of(s)) next.push_back(t | bit(x));
      }
    }
    std::sort(next.begin(), next.end(), [](VertexMask a, VertexMask b) {
      return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    transversals.clear();
    for (VertexMask t : next) {
      bool redundant = false;
      for (VertexMask u : transversals) {
        if ((u & ~t) == 0) {
          redundant = true;
          break;
        }
      }
      if (!redundant) transversals.push_back(t);
    }
  }
  for (VertexMask t : transversals) complex.facets.push_back(all & ~t);
  complex.facets = maximal_sets(std::move(complex.facets));
  return complex;
}

std::vector<std::vector<VertexMask>> independence_faces(const std::vector<VertexMask>& supports,
                                                        VertexMask sigma) {
  std::vector<VertexMask> relevant;
  for (VertexMask s : supports)
    if ((s & ~sigma) == 0) relevant.push_back(s);
  const auto verts = indices_of(sigma);
  std::vector<std::vector<VertexMask>> by_vertex(kMaxMaskWidth);
  for (VertexMask s : relevant) by_vertex[63 - static_cast<std::size_t>(std::countl_zero(s))].push_back(s);

  std::vector<std::vector<VertexMask>> out(1, std::vector<VertexMask>{0});
  auto rec = [&](auto&& self, std::size_t start, VertexMask face, std::size_t size) -> void {
    for (std::size_t k = start; k < verts.size(); ++k) {
      const std::size_t v = verts[k];
      const VertexMask next = face | bit(v);
      // Only supports whose largest vertex is v can become newly contained.
      bool ok = true;
      for (VertexMask s : by_vertex[v]) {
        if ((s & ~next) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (out.size() <= size + 1) out.resize(size + 2);
      out[size + 1].push_back(next);
      self(self, k + 1, next, size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<std::size_t> reduced_homology_from_faces(const std::vector<std::vector<VertexMask>>& faces,
                                                     std::uint32_t characteristic) {
  std::vector<std::size_t> ranks;
  if (faces.empty() || faces[0].empty()) return ranks;  // void complex
  const std::size_t top = faces.size();  // sizes 0..top-1
  // boundary_rank[k] = rank of the map from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    const auto& lower = faces[k - 1];
    std::vector<SparseRow> rows;
    rows.reserve(faces[k].size());
    for (VertexMask f : faces[k]) {
      SparseRow row;
      std::size_t i = 0;
      for (std::size_t v : indices_of(f)) {
        const VertexMask g = f & ~bit(v);
        const auto pos = static_cast<std::uint32_t>(
            std::lower_bound(lower.begin(), lower.end(), g) - lower.begin());
        row.emplace_back(pos, (i % 2 == 0) ? 1 : -1);
        ++i;
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    boundary_rank[k] = sparse_rank(std::move(rows), characteristic);
  }
  ranks.resize(top, 0);
  for (std::size_t k = 0; k < top; ++k) ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return ranks;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                std::uint32_t characteristic) {
  return reduced_homology_from_faces(complex.faces_by_size(), characteristic);
}

}  // namespace edgeideal
