#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polarcut {

/// Finite ground set {0, .., n-1}. Masks fit one machine word, hence n <= 63.
class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 1 || n > 63) throw std::invalid_argument("GroundSet: n must be in [1, 63]");
  }
  int size() const { return n_; }
  std::uint64_t full_bits() const { return (std::uint64_t{1} << n_) - 1; }
  std::uint64_t subset_count() const { return std::uint64_t{1} << n_; }
  friend bool operator==(GroundSet a, GroundSet b) { return a.n_ == b.n_; }

 private:
  int n_;
};

/// Subset of a ground set as a bit mask; element i present iff bit i set.
struct SubsetMask {
  std::uint64_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}

  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }

  constexpr SubsetMask with(int i) const { return SubsetMask{bits | (std::uint64_t{1} << i)}; }
  constexpr SubsetMask without(int i) const { return SubsetMask{bits & ~(std::uint64_t{1} << i)}; }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits | b.bits}; }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits & b.bits}; }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits == b.bits; }
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) { return a.bits <=> b.bits; }
};

constexpr SubsetMask singleton(int i) { return SubsetMask{std::uint64_t{1} << i}; }

inline SubsetMask complement(SubsetMask s, const GroundSet& ground) {
  return SubsetMask{~s.bits & ground.full_bits()};
}

/// Applies f(i) to each element of s in ascending order.
template <typename F>
void for_each_element(SubsetMask s, F&& f) {
  std::uint64_t b = s.bits;
  while (b) {
    f(std::countr_zero(b));
    b &= b - 1;
  }
}

/// Compares subsets as ascending element sequences (a proper prefix is smaller).
/// This is the tie-breaking order for reported optimal sets.
inline bool lex_less(SubsetMask a, SubsetMask b) {
  std::uint64_t x = a.bits, y = b.bits;
  while (x && y) {
    int ea = std::countr_zero(x), eb = std::countr_zero(y);
    if (ea != eb) return ea < eb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

inline std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](int i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace polarcut
