#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "shi/poly.hpp"
#include "shi/unipoly.hpp"

namespace shi {

/// The odd solution B_{p,q} of
///   B(x+1) - B(x) = [(x+1)^p - (-x)^p] / [(x+1) - (-x)] * (x+1)^q (-x)^q,
/// together with its homogenization z^{p+2q} B(x/z) in the two variables
/// (x, z). For (p,q) = (-1,0) the solution is the rational function -1/x;
/// it is flagged and never stored as a polynomial.
struct BernoulliRelative {
  int p = 0;
  int q = 0;
  bool is_negative_one_zero = false;
  std::optional<UniPoly> univariate;
  std::optional<Poly> homogenized;  // variables (x, z)

  int degree() const { return p + 2 * q; }
};

namespace bernoulli_detail {

inline void check_indices(int p, int q) {
  if (p < -1 || q < 0) throw std::invalid_argument("Bernoulli relative needs p >= -1 and q >= 0");
}

}  // namespace bernoulli_detail

/// Right-hand side of the functional equation, as a polynomial.
inline UniPoly rhs_poly(int p, int q) {
  bernoulli_detail::check_indices(p, q);
  if (p == -1 && q == 0) throw std::domain_error("rhs_poly: (p,q) = (-1,0) has a pole at 0 and -1");
  const UniPoly x_plus_1({Rational(1), Rational(1)});
  const UniPoly minus_x({Rational(0), Rational(-1)});
  if (p == 0) return {};
  if (p == -1) {
    // 1/(x(x+1)) * (x+1)^q (-x)^q; the pole cancels for q >= 1
    Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
    return (UniPoly::x() * x_plus_1).pow(static_cast<unsigned>(q - 1)) * sign;
  }
  // (a^p - b^p)/(a - b) = sum_{i<p} a^i b^{p-1-i}
  UniPoly quotient;
  for (int i = 0; i < p; ++i)
    quotient = quotient + x_plus_1.pow(static_cast<unsigned>(i)) * minus_x.pow(static_cast<unsigned>(p - 1 - i));
  return quotient * (x_plus_1 * minus_x).pow(static_cast<unsigned>(q));
}

/// P with P(x+1) - P(x) = r(x) and P(0) = 0, via the Newton forward
/// difference expansion r = sum_n (Delta^n r)(0) C(x,n) and
/// sum_x C(x,n) = C(x,n+1).
inline UniPoly discrete_antiderivative(const UniPoly& r) {
  if (r.is_zero()) return {};
  const int d = r.degree();
  std::vector<Rational> diffs;
  for (int n = 0; n <= d; ++n) diffs.push_back(r.evaluate(Rational(n)));
  std::vector<Rational> newton;  // Delta^n r (0)
  for (int n = 0; n <= d; ++n) {
    newton.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  UniPoly result;
  UniPoly falling = UniPoly::constant(Rational(1));  // x(x-1)...(x-m+1)
  Integer factorial = 1;
  for (int m = 1; m <= d + 1; ++m) {
    falling = falling * UniPoly({Rational(-(m - 1)), Rational(1)});
    factorial *= m;
    result = result + falling * (newton[static_cast<std::size_t>(m - 1)] / Rational(factorial));
  }
  return result;
}

/// Subtracts F(0)/2 where F(x) = P(x) + P(-x), which must be constant.
/// Throws std::logic_error when F is not constant (bad right-hand side).
inline UniPoly antisymmetrize(const UniPoly& p) {
  UniPoly f = p + p.reflected();
  if (f.degree() > 0) throw std::logic_error("antisymmetrize: P(x) + P(-x) is not constant");
  return p - UniPoly::constant(f.coeff(0) / 2);
}

/// z^degree * b(x/z) in the variables (x, z).
inline Poly homogenize(const UniPoly& b, int degree) {
  if (b.degree() > degree) throw std::logic_error("homogenize: polynomial degree exceeds target degree");
  std::vector<Poly::Term> terms;
  for (int n = 0; n <= b.degree(); ++n) {
    const Rational& c = b.coeffs()[static_cast<std::size_t>(n)];
    if (c != 0) terms.push_back({Monomial{n, degree - n}, c});
  }
  return Poly::from_terms(2, std::move(terms));
}

/// Builds B_{p,q} and its homogenization without caching.
inline BernoulliRelative make_bernoulli(int p, int q) {
  bernoulli_detail::check_indices(p, q);
  BernoulliRelative b;
  b.p = p;
  b.q = q;
  if (p == -1 && q == 0) {
    b.is_negative_one_zero = true;
    return b;
  }
  UniPoly poly = antisymmetrize(discrete_antiderivative(rhs_poly(p, q)));
  if (poly.degree() > b.degree()) throw std::logic_error("make_bernoulli: degree exceeds p+2q");
  b.homogenized = homogenize(poly, b.degree());
  b.univariate = std::move(poly);
  return b;
}

/// Memoized make_bernoulli. References stay valid for the program's lifetime.
inline const BernoulliRelative& bernoulli(int p, int q) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, BernoulliRelative> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, q});
  if (it == cache.end()) it = cache.emplace(std::pair{p, q}, make_bernoulli(p, q)).first;
  return it->second;
}

}  // namespace shi
