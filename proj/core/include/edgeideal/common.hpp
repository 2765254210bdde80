#ifndef EDGEIDEAL_COMMON_HPP
#define EDGEIDEAL_COMMON_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeideal {

// A set of vertices (or variables) as a bitmask over their indices.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskWidth = 64;

// Height of the unit ideal; no set of variables meets the empty support.
inline constexpr std::size_t kInfiniteHeight = std::numeric_limits<std::size_t>::max();

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

inline constexpr VertexMask low_bits(std::size_t n) {
  return n >= kMaxMaskWidth ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

// Strict lexicographic order on the sorted index sequences of two sets.
inline bool lex_less(VertexMask a, VertexMask b) {
  while (a != 0 && b != 0) {
    const std::size_t la = lowest(a);
    const std::size_t lb = lowest(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline std::vector<std::size_t> indices_of(VertexMask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

template <typename F>
inline void for_each_bit(VertexMask m, F&& f) {
  for (; m != 0; m &= m - 1) f(lowest(m));
}

}  // namespace edgeideal

#endif  // EDGEIDEAL_COMMON_HPP
