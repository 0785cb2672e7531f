#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shi/bernoulli.hpp"
#include "shi/derivation.hpp"
#include "shi/poly.hpp"

namespace shi {

/// An ordered pair of disjoint subsets (K1, K2) of a variable set.
struct SubsetPair {
  std::vector<std::size_t> k1;
  std::vector<std::size_t> k2;
  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// All 3^|J| pairs of disjoint subsets of J, ordered by a ternary counter
/// whose least significant digit is the first variable of J
/// (digit 0: in neither, 1: in K1, 2: in K2).
inline std::vector<SubsetPair> enumerate_k1_k2(const std::vector<std::size_t>& j_set) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < j_set.size(); ++i) total *= 3;
  std::vector<SubsetPair> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    SubsetPair pair;
    std::size_t c = code;
    for (std::size_t var : j_set) {
      if (c % 3 == 1) pair.k1.push_back(var);
      if (c % 3 == 2) pair.k2.push_back(var);
      c /= 3;
    }
    out.push_back(std::move(pair));
  }
  return out;
}

namespace basis_detail {

inline void check_ell(int ell) {
  if (ell < 2) throw std::invalid_argument("the Shi arrangement of type D needs ell >= 2");
  if (static_cast<std::size_t>(ell) + 1 > kMaxVars) throw std::invalid_argument("ell too large for the monomial encoding");
}

inline std::vector<std::size_t> range(int first, int last) {  // [first, last)
  std::vector<std::size_t> r;
  for (int v = first; v < last; ++v) r.push_back(static_cast<std::size_t>(v));
  return r;
}

/// x_i * Bbar_{k,k0}(x_i, z) in the ring with z at index nvars-1. For
/// (k,k0) = (-1,0) this is the constant -1.
inline Poly xi_times_bbar(int k, int k0, std::size_t i, std::size_t nvars) {
  const BernoulliRelative& b = bernoulli(k, k0);
  if (b.is_negative_one_zero) return Poly::constant(nvars, Rational(-1));
  const std::size_t target[] = {i, nvars - 1};
  return b.homogenized->relabel(nvars, target) * Poly::variable(nvars, i);
}

/// (prod K1)(prod K2)^2 (-z)^{|K1|}.
inline Poly subset_weight(const SubsetPair& pair, std::size_t nvars) {
  Monomial m;
  for (auto v : pair.k1) m = m * Monomial::variable(v);
  for (auto v : pair.k2) m = m * Monomial::variable(v, 2);
  m = m * Monomial::variable(nvars - 1, static_cast<int>(pair.k1.size()));
  Rational sign = pair.k1.size() % 2 == 0 ? Rational(1) : Rational(-1);
  return Poly::monomial(nvars, m, sign);
}

inline Derivation zero_derivation(int ell, std::string name) {
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  return Derivation{ell, std::move(name), std::vector<Poly>(static_cast<std::size_t>(ell), Poly(n)), Poly(n)};
}

}  // namespace basis_detail

/// phi_j for 1 <= j <= ell-1 (1-based j, as in the construction):
///   (x_j - x_{j+1} - z) sum_{K1,K2} (prod K1)(prod K2)^2 (-z)^{|K1|}
///     sum_{n1,n2} (-1)^{n1+n2} sigma_{n1}(J1) tau_{2 n2}(J2) Bbar_{k,k0}(x_i, z)
/// with J = {x_1..x_{j-1}}, J1 = {x_j, x_{j+1}}, J2 = {x_{j+2}..x_l},
/// k0 = |J \ (K1 u K2)|, k = (|J1| - n1) + 2(|J2| - n2) - 1.
/// The -1/x_i from Bbar_{-1,0} is handled by summing x_i times every term and
/// dividing by x_i at the end; that division must be exact.
inline Derivation build_phi(int j, int ell) {
  basis_detail::check_ell(ell);
  if (j < 1 || j > ell - 1) throw std::invalid_argument("build_phi: j must be in 1..ell-1");
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  const std::size_t z = n - 1;
  const auto J = basis_detail::range(0, j - 1);
  const auto J1 = basis_detail::range(j - 1, j + 1);
  const auto J2 = basis_detail::range(j + 1, ell);
  const auto pairs = enumerate_k1_k2(J);

  struct InnerTerm {
    Poly symmetric;  // (-1)^{n1+n2} sigma tau
    int k;
  };
  std::vector<InnerTerm> inner;
  for (int n1 = 0; n1 <= static_cast<int>(J1.size()); ++n1) {
    for (int n2 = 0; n2 <= static_cast<int>(J2.size()); ++n2) {
      Poly s = elementary_symmetric(n, J1, n1) * elementary_symmetric(n, J2, n2, 2);
      if ((n1 + n2) % 2 != 0) s = -s;
      int k = (static_cast<int>(J1.size()) - n1) + 2 * (static_cast<int>(J2.size()) - n2) - 1;
      inner.push_back({std::move(s), k});
    }
  }

  Poly linear = Poly::variable(n, J1[0]) - Poly::variable(n, J1[1]) - Poly::variable(n, z);
  Derivation phi = basis_detail::zero_derivation(ell, "phi_" + std::to_string(j));
  for (std::size_t i = 0; i < static_cast<std::size_t>(ell); ++i) {
    std::map<int, Poly> inner_by_k0;  // x_i * inner sum, depends on (K1,K2) only through k0
    Poly acc(n);
    for (const auto& pair : pairs) {
      int k0 = static_cast<int>(J.size() - pair.k1.size() - pair.k2.size());
      auto it = inner_by_k0.find(k0);
      if (it == inner_by_k0.end()) {
        Poly s(n);
        for (const auto& t : inner) s += t.symmetric * basis_detail::xi_times_bbar(t.k, k0, i, n);
        it = inner_by_k0.emplace(k0, std::move(s)).first;
      }
      acc += basis_detail::subset_weight(pair, n) * it->second;
    }
    phi.coeff_x[i] = linear * exact_div(acc, Poly::variable(n, i));
  }
  return phi;
}

/// phi_l = sum_{K1,K2 subset J} (prod K1)(prod K2)^2 (-z)^{|K1|} (-x_l) Bbar_{-1,k0}(x_i, z)
/// with J = {x_1..x_{l-1}}.
inline Derivation build_phi_ell(int ell) {
  basis_detail::check_ell(ell);
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  const auto J = basis_detail::range(0, ell - 1);
  const auto pairs = enumerate_k1_k2(J);
  const Poly minus_xl = -Poly::variable(n, static_cast<std::size_t>(ell - 1));
  Derivation phi = basis_detail::zero_derivation(ell, "phi_" + std::to_string(ell));
  for (std::size_t i = 0; i < static_cast<std::size_t>(ell); ++i) {
    Poly acc(n);
    for (const auto& pair : pairs) {
      int k0 = static_cast<int>(J.size() - pair.k1.size() - pair.k2.size());
      acc += basis_detail::subset_weight(pair, n) * minus_xl * basis_detail::xi_times_bbar(-1, k0, i, n);
    }
    phi.coeff_x[i] = exact_div(acc, Poly::variable(n, i));
  }
  return phi;
}

/// theta_E = sum x_i d/dx_i + z d/dz.
inline Derivation build_euler(int ell) {
  basis_detail::check_ell(ell);
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  Derivation e = basis_detail::zero_derivation(ell, "euler");
  for (std::size_t i = 0; i < static_cast<std::size_t>(ell); ++i) e.coeff_x[i] = Poly::variable(n, i);
  e.coeff_z = Poly::variable(n, n - 1);
  return e;
}

/// [theta_E, phi_1, ..., phi_l].
inline std::vector<Derivation> basis(int ell) {
  basis_detail::check_ell(ell);
  std::vector<Derivation> out{build_euler(ell)};
  for (int j = 1; j < ell; ++j) out.push_back(build_phi(j, ell));
  out.push_back(build_phi_ell(ell));
  return out;
}

}  // namespace shi
