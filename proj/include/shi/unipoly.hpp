#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shi/poly.hpp"
#include "shi/rational.hpp"

namespace shi {

/// Dense univariate polynomial over the rationals; coeffs[n] multiplies x^n.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }
  Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b * Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
  }

  UniPoly pow(unsigned e) const {
    UniPoly r = constant(Rational(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// P(x + shift), expanded.
  UniPoly shifted(const Rational& shift) const {
    UniPoly base({shift, Rational(1)});
    UniPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * base + constant(*it);
    return r;
  }

  /// P(-x).
  UniPoly reflected() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
    return UniPoly(std::move(c));
  }

  /// Canonical text in the single variable `name`, e.g. "1/3*x^3 + 2/3*x".
  std::string to_string(const std::string& name = "x") const {
    Poly p(1);
    std::vector<Poly::Term> terms;
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (coeffs_[n] != 0) terms.push_back({Monomial::variable(0, static_cast<int>(n)), coeffs_[n]});
    p = Poly::from_terms(1, std::move(terms));
    const std::string names[] = {name};
    return p.to_string(names);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace shi
