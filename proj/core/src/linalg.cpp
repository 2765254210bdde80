#include "edgeideal/linalg.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgeideal/common.hpp"

namespace edgeideal {

namespace {

using boost::multiprecision::cpp_int;
// products of two residues below 2^32 need more than 64 bits
__extension__ typedef __int128 wide;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((wide)result * base % p);
    base = static_cast<std::int64_t>((wide)base * base % p);
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

std::int64_t reduce_mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// row -= factor * pivot, both sorted by column; dropping zeros.
SparseRow axpy(const SparseRow& row, std::int64_t factor, const SparseRow& pivot, std::int64_t p) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
      continue;
    }
    std::int64_t v;
    const std::uint32_t col = pivot[b].first;
    const std::int64_t base = (a < row.size() && row[a].first == col) ? row[a++].second : 0;
    if (p == 0) {
      v = checked_sub(base, checked_mul(factor, pivot[b].second));
    } else {
      v = reduce_mod(base - static_cast<std::int64_t>((wide)factor * pivot[b].second % p), p);
    }
    ++b;
    if (v != 0) out.emplace_back(col, v);
  }
  return out;
}

std::int64_t entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : 0;
}

struct Echelon {
  std::vector<SparseRow> pivots;
  std::vector<std::uint32_t> pivot_col;
  std::map<std::uint32_t, std::size_t> index_of_col;
};

// Eliminates every pivot column from `row`, taking pivots in insertion order.
void reduce(SparseRow& row, const Echelon& ech, std::int64_t p) {
  while (!row.empty()) {
    std::size_t best = SIZE_MAX;
    for (const auto& [col, v] : row) {
      auto it = ech.index_of_col.find(col);
      if (it != ech.index_of_col.end()) best = std::min(best, it->second);
    }
    if (best == SIZE_MAX) return;
    const SparseRow& piv = ech.pivots[best];
    const std::int64_t pv = entry(piv, ech.pivot_col[best]);
    const std::int64_t rv = entry(row, ech.pivot_col[best]);
    // Pivots are units, so the factor is exact.
    const std::int64_t factor =
        p == 0 ? rv * pv : static_cast<std::int64_t>((wide)rv * mod_inverse(pv, p) % p);
    row = axpy(row, factor, piv, p);
  }
}

std::size_t bareiss_big(std::vector<std::vector<cpp_int>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = col + 1; k < cols; ++k)
        a[r][k] = (a[rank][col] * a[r][k] - a[r][col] * a[rank][k]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t bareiss_small(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = col + 1; k < cols; ++k)
        a[r][k] = checked_sub(checked_mul(a[rank][col], a[r][k]), checked_mul(a[r][col], a[rank][k])) /
                  prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  for (auto& row : a)
    for (auto& v : row) v = reduce_mod(v, p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const std::int64_t inv = mod_inverse(a[rank][col], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((wide)a[r][col] * inv % p);
      for (std::size_t k = col; k < cols; ++k)
        a[r][k] = reduce_mod(a[r][k] - static_cast<std::int64_t>((wide)f * a[rank][k] % p), p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::int64_t>> densify(const std::vector<SparseRow>& rows) {
  std::map<std::uint32_t, std::size_t> cols;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) cols.emplace(c, 0);
  std::size_t k = 0;
  for (auto& [c, idx] : cols) idx = k++;
  std::vector<std::vector<std::int64_t>> dense(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) dense[i][cols[c]] = v;
  return dense;
}

std::size_t dense_rank_q(const std::vector<std::vector<std::int64_t>>& rows) {
  try {
    return bareiss_small(rows);
  } catch (const Overflow&) {
    std::vector<std::vector<cpp_int>> big;
    big.reserve(rows.size());
    for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
    return bareiss_big(std::move(big));
  }
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_characteristic(std::uint32_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw InvalidInput("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
}

std::size_t sparse_rank(std::vector<SparseRow> rows, std::uint32_t characteristic) {
  require_characteristic(characteristic);
  const std::int64_t p = characteristic;
  if (p != 0) {
    for (auto& r : rows) {
      SparseRow cleaned;
      for (auto [c, v] : r)
        if (reduce_mod(v, p) != 0) cleaned.emplace_back(c, reduce_mod(v, p));
      r = std::move(cleaned);
    }
  }
  const std::vector<SparseRow> original = p == 0 ? rows : std::vector<SparseRow>{};
  try {
    Echelon ech;
    std::vector<SparseRow> hard;
    for (auto& row : rows) {
      reduce(row, ech, p);
      if (row.empty()) continue;
      std::size_t choice = SIZE_MAX;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (p != 0 || row[k].second == 1 || row[k].second == -1) {
          choice = k;
          break;
        }
      }
      if (choice == SIZE_MAX) {
        hard.push_back(std::move(row));
        continue;
      }
      ech.index_of_col.emplace(row[choice].first, ech.pivots.size());
      ech.pivot_col.push_back(row[choice].first);
      ech.pivots.push_back(std::move(row));
    }
    std::vector<SparseRow> rest;
    for (auto& row : hard) {
      reduce(row, ech, p);
      if (!row.empty()) rest.push_back(std::move(row));
    }
    return ech.pivots.size() + (rest.empty() ? 0 : dense_rank_q(densify(rest)));
  } catch (const Overflow&) {
    return dense_rank_q(densify(original));
  }
}

std::size_t dense_rank(std::vector<std::vector<std::int64_t>> rows, std::uint32_t characteristic) {
  require_characteristic(characteristic);
  if (characteristic == 0) return dense_rank_q(rows);
  return rank_mod_p(std::move(rows), characteristic);
}

}  // namespace edgeideal
