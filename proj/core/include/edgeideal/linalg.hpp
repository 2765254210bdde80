#ifndef EDGEIDEAL_LINALG_HPP
#define EDGEIDEAL_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace edgeideal {

// Nonzero entries of one matrix row, sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

bool is_prime(std::uint32_t p);

// Throws InvalidInput unless characteristic is 0 or a prime.
void require_characteristic(std::uint32_t characteristic);

/**
 * Rank over Q (characteristic 0) or over Z/p.
 *
 * Over Q the rows are eliminated with unit pivots in exact int64 arithmetic;
 * whatever cannot be handled that way (no unit entry left, or an overflow)
 * goes to fraction-free Bareiss elimination with arbitrary precision.
 */
std::size_t sparse_rank(std::vector<SparseRow> rows, std::uint32_t characteristic);

// Rank of a dense integer matrix: Bareiss over Q, Gaussian elimination mod p.
std::size_t dense_rank(std::vector<std::vector<std::int64_t>> rows, std::uint32_t characteristic);

}  // namespace edgeideal

#endif  // EDGEIDEAL_LINALG_HPP
