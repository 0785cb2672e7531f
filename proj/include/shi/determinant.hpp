#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shi/poly.hpp"

namespace shi {

/// Row-major dense matrix of ring elements.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Drops one row and one column.
  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix m;
    m.rows_ = rows_ - 1;
    m.cols_ = cols_ - 1;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (c != col) m.data_.push_back((*this)(r, c));
    }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace det_detail {

template <class C>
bool is_zero(const BasicPoly<C>& p) { return p.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }

template <class C>
BasicPoly<C> exact_quotient(const BasicPoly<C>& a, const BasicPoly<C>& b) { return exact_div(a, b); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <class C>
BasicPoly<C> one_like(const BasicPoly<C>& p) { return BasicPoly<C>::constant(p.nvars(), C(1)); }
inline Rational one_like(const Rational&) { return Rational(1); }

template <class C>
BasicPoly<C> zero_like(const BasicPoly<C>& p) { return BasicPoly<C>(p.nvars()); }
inline Rational zero_like(const Rational&) { return Rational(0); }

inline void check_square(std::size_t rows, std::size_t cols) {
  if (rows != cols || rows == 0) throw std::invalid_argument("determinant: matrix must be square and nonempty");
}

}  // namespace det_detail

/// Fraction-free (Bareiss) elimination. Every division is exact by the
/// Sylvester identity; a remainder would throw DivisionNotExact.
/// Zero pivots are replaced by a row swap with sign tracking.
template <class T>
T bareiss_det(Matrix<T> m) {
  using namespace det_detail;
  check_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  T previous = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m(r, k))) ++r;
      if (r == n) return zero_like(m(0, 0));
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      m(i, k) = zero_like(m(0, 0));
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

/// Division-free Laplace expansion with every minor on the top rows
/// memoized by its column set. Each step multiplies a single matrix entry by
/// a minor, which keeps products lopsided when entries are small and minors
/// large. Cost grows like n 2^n products.
template <class T>
T minor_expansion_det(const Matrix<T>& m) {
  using namespace det_detail;
  check_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n > 20) throw std::invalid_argument("minor_expansion_det: matrix too large");
  std::vector<T> level(std::size_t{1} << n, zero_like(m(0, 0)));
  for (std::size_t c = 0; c < n; ++c) level[std::size_t{1} << c] = m(0, c);
  for (std::size_t row = 1; row < n; ++row) {
    std::vector<T> next(std::size_t{1} << n, zero_like(m(0, 0)));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != row + 1) continue;
      T sum = zero_like(m(0, 0));
      std::size_t position = 0;  // index of c among the columns of mask
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const T& sub = level[mask & ~(1u << c)];
        if (!is_zero(m(row, c)) && !is_zero(sub)) {
          // entry (row, position) of the square submatrix; row index is the last one
          T term = m(row, c) * sub;
          if ((row + position) % 2 == 0)
            sum = sum + term;
          else
            sum = sum - term;
        }
        ++position;
      }
      next[mask] = std::move(sum);
    }
    level = std::move(next);
  }
  return level[(std::size_t{1} << n) - 1];
}

/// Determinant of a rational polynomial matrix: clears the denominators of
/// each column, expands over the integers, and divides back.
inline Poly polynomial_det(const Matrix<Poly>& m) {
  det_detail::check_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  const std::size_t nv = m(0, 0).nvars();
  Matrix<IntPoly> integral(n, n, IntPoly(nv));
  Integer scale = 1;
  for (std::size_t c = 0; c < n; ++c) {
    Integer d = 1;
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& t : m(r, c).terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<IntPoly::Term> terms;
      for (const auto& t : m(r, c).terms()) terms.push_back({t.mono, Integer(t.coeff.get_num() * (d / t.coeff.get_den()))});
      integral(r, c) = IntPoly::from_terms(nv, std::move(terms));
    }
    scale *= d;
  }
  return to_rational_poly(minor_expansion_det(integral), scale);
}

}  // namespace shi
