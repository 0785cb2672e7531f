#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace shi {

/// Maximum number of ring variables (x_1..x_l plus z), so l <= 7.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector packed one byte per variable, first variable in the most
/// significant byte. With that layout pure lex order with x_1 > x_2 > ... > z
/// is plain unsigned comparison of the packed word, and multiplication is
/// bytewise addition.
class Monomial {
 public:
  constexpr Monomial() = default;

  Monomial(std::span<const int> exponents) {
    if (exponents.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    for (std::size_t v = 0; v < exponents.size(); ++v) set(v, exponents[v]);
  }
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t v, int power = 1) {
    Monomial m;
    m.set(v, power);
    return m;
  }

  int operator[](std::size_t v) const { return static_cast<int>((bits_ >> shift(v)) & 0xffu); }

  void set(std::size_t v, int e) {
    if (v >= kMaxVars) throw std::out_of_range("Monomial: variable index");
    if (e < 0 || e > 255) throw std::overflow_error("Monomial: exponent out of range");
    bits_ &= ~(std::uint64_t{0xff} << shift(v));
    bits_ |= std::uint64_t(e) << shift(v);
  }

  int total_degree() const {
    int d = 0;
    for (std::uint64_t b = bits_; b != 0; b >>= 8) d += static_cast<int>(b & 0xffu);
    return d;
  }

  bool is_one() const { return bits_ == 0; }

  /// True iff every exponent of `d` is <= the matching exponent here.
  bool divisible_by(Monomial d) const {
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if ((*this)[v] < d[v]) return false;
    return true;
  }

  friend Monomial operator*(Monomial a, Monomial b) {
    constexpr std::uint64_t high = 0x8080808080808080ull;
    if (((a.bits_ | b.bits_) & high) == 0) return from_bits(a.bits_ + b.bits_);
    Monomial r;
    for (std::size_t v = 0; v < kMaxVars; ++v) r.set(v, a[v] + b[v]);  // throws on overflow
    return r;
  }

  /// Requires divisible_by(d).
  friend Monomial operator/(Monomial a, Monomial d) {
    if (!a.divisible_by(d)) throw std::domain_error("Monomial: not divisible");
    return from_bits(a.bits_ - d.bits_);
  }

  friend bool operator==(Monomial, Monomial) = default;
  /// Pure lex order x_1 > x_2 > ... > x_l > z.
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) { return a.bits_ <=> b.bits_; }

  std::vector<int> exponents(std::size_t nvars) const {
    std::vector<int> e(nvars);
    for (std::size_t v = 0; v < nvars; ++v) e[v] = (*this)[v];
    return e;
  }

  /// Index of the first variable with a nonzero exponent, or nvars if constant.
  std::size_t leading_variable(std::size_t nvars) const {
    for (std::size_t v = 0; v < nvars; ++v)
      if ((*this)[v] != 0) return v;
    return nvars;
  }

  std::uint64_t bits() const { return bits_; }

 private:
  static constexpr unsigned shift(std::size_t v) { return static_cast<unsigned>(8 * (kMaxVars - 1 - v)); }
  static Monomial from_bits(std::uint64_t b) {
    Monomial m;
    m.bits_ = b;
    return m;
  }

  std::uint64_t bits_ = 0;
};

}  // namespace shi

template <>
struct std::hash<shi::Monomial> {
  std::size_t operator()(shi::Monomial m) const noexcept {
    std::uint64_t x = m.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
