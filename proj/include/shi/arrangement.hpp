#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shi/poly.hpp"

namespace shi {

/// Linear form a_1 x_1 + ... + a_l x_l + a_z z, scaled so that its first
/// nonzero coefficient is +1.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    auto lead = leading_index();
    if (lead == coeffs_.size()) throw std::invalid_argument("LinearForm: zero form");
    Rational scale = coeffs_[lead];
    for (auto& c : coeffs_) c /= scale;
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t nvars() const { return coeffs_.size(); }

  /// Index of the lex-leading variable (the one solved for when reducing modulo the form).
  std::size_t leading_index() const {
    for (std::size_t v = 0; v < coeffs_.size(); ++v)
      if (coeffs_[v] != 0) return v;
    return coeffs_.size();
  }

  Poly to_poly() const {
    std::vector<Poly::Term> terms;
    for (std::size_t v = 0; v < coeffs_.size(); ++v)
      if (coeffs_[v] != 0) terms.push_back({Monomial::variable(v), coeffs_[v]});
    return Poly::from_terms(coeffs_.size(), std::move(terms));
  }

  /// The value of the leading variable on the hyperplane, as a polynomial
  /// in the remaining variables.
  Poly solved_leading() const {
    std::size_t lead = leading_index();
    Poly rest = to_poly() - Poly::variable(coeffs_.size(), lead);
    return -rest;
  }

  std::string to_string() const { return to_poly().to_string(); }

  bool proportional_to(const LinearForm& o) const { return coeffs_ == o.coeffs_; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// The cone over the Shi arrangement of type D_l in Q^{l+1}.
struct Arrangement {
  int ell = 0;
  int h = 0;  // Coxeter number 2l - 2
  std::vector<LinearForm> forms;

  std::size_t nvars() const { return static_cast<std::size_t>(ell) + 1; }
};

/// Forms in the order: z, then for s < t lexicographically, eps = +1 before
/// -1, x_s + eps x_t before x_s + eps x_t - z.
inline Arrangement shi_d_cone(int ell) {
  if (ell < 2) throw std::invalid_argument("shi_d_cone: ell must be >= 2");
  if (static_cast<std::size_t>(ell) + 1 > kMaxVars) throw std::invalid_argument("shi_d_cone: ell too large");
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  Arrangement arr;
  arr.ell = ell;
  arr.h = 2 * ell - 2;
  std::vector<Rational> zc(n);
  zc[n - 1] = 1;
  arr.forms.emplace_back(zc);
  for (std::size_t s = 0; s < n - 1; ++s) {
    for (std::size_t t = s + 1; t < n - 1; ++t) {
      for (int eps : {1, -1}) {
        for (int shift : {0, -1}) {
          std::vector<Rational> c(n);
          c[s] = 1;
          c[t] = eps;
          c[n - 1] = shift;
          arr.forms.emplace_back(std::move(c));
        }
      }
    }
  }
  return arr;
}

/// Product of all forms.
inline Poly defining_poly(const Arrangement& arr) {
  Poly q = Poly::constant(arr.nvars(), Rational(1));
  for (const auto& f : arr.forms) q *= f.to_poly();
  return q;
}

/// Product of every form except z.
inline Poly defining_poly_without_z(const Arrangement& arr) {
  Poly q = Poly::constant(arr.nvars(), Rational(1));
  for (const auto& f : arr.forms)
    if (f.leading_index() != arr.nvars() - 1) q *= f.to_poly();
  return q;
}

}  // namespace shi
