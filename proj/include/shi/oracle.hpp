#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shi/arrangement.hpp"
#include "shi/derivation.hpp"
#include "shi/poly.hpp"

// Brute-force checks that know nothing about the explicit basis: graded
// dimensions of D(A) by exact linear algebra, and point counts of the
// complement over prime fields.

namespace shi::oracle {

/// All monomials of total degree d in n variables, descending lex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(n, 0);
  // recursive fill, highest power of the first variable first
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == n) {
      e[v] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Exact rank by Gaussian elimination over the rationals. Consumes its input.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (rows[r][k] != 0) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// The homogeneous linear system whose solutions are the degree-d
/// derivations in D(cS(D_l)). Unknown (v, m) is the coefficient of the
/// monomial m in theta(variable v). For each form alpha, theta(alpha) is
/// reduced modulo alpha by eliminating alpha's leading variable and every
/// remaining coefficient must vanish.
struct DerivationSystem {
  int ell = 0;
  int degree = 0;
  std::vector<Monomial> monomials;             // degree-d monomials
  std::vector<std::vector<Rational>> equations;  // rows over unknowns

  std::size_t unknowns() const { return (static_cast<std::size_t>(ell) + 1) * monomials.size(); }
  std::size_t unknown_index(std::size_t v, std::size_t m) const { return v * monomials.size() + m; }

  /// Coefficient vector of a derivation whose coefficients are homogeneous of this degree.
  std::vector<Rational> vectorize(const Derivation& theta) const {
    std::vector<Rational> out(unknowns());
    for (std::size_t v = 0; v <= static_cast<std::size_t>(ell); ++v) {
      const Poly& c = theta.coeff(v);
      if (!c.is_homogeneous(degree)) throw std::invalid_argument("vectorize: coefficient is not of the system degree");
      for (std::size_t m = 0; m < monomials.size(); ++m) out[unknown_index(v, m)] = c.coefficient(monomials[m]);
    }
    return out;
  }

  bool annihilates(const std::vector<Rational>& x) const {
    for (const auto& row : equations) {
      Rational s = 0;
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0 && x[k] != 0) s += row[k] * x[k];
      if (s != 0) return false;
    }
    return true;
  }
};

inline DerivationSystem derivation_system(int ell, int d) {
  if (ell < 2) throw std::invalid_argument("derivation_system: ell must be >= 2");
  if (d < 0) throw std::invalid_argument("derivation_system: degree must be >= 0");
  const Arrangement arr = shi_d_cone(ell);
  const std::size_t n = arr.nvars();
  DerivationSystem sys;
  sys.ell = ell;
  sys.degree = d;
  sys.monomials = monomials_of_degree(n, d);
  for (const auto& form : arr.forms) {
    const std::size_t lead = form.leading_index();
    const Poly solved = form.solved_leading();
    // rows of this form, keyed by monomial of the reduced theta(alpha)
    std::map<Monomial, std::vector<Rational>, std::greater<>> rows;
    for (std::size_t m = 0; m < sys.monomials.size(); ++m) {
      Poly reduced = Poly::monomial(n, sys.monomials[m]).substitute(lead, solved);
      for (std::size_t v = 0; v < n; ++v) {
        const Rational& a = form.coeffs()[v];
        if (a == 0) continue;
        for (const auto& t : reduced.terms()) {
          auto [it, inserted] = rows.try_emplace(t.mono);
          if (inserted) it->second.assign(sys.unknowns(), Rational(0));
          it->second[sys.unknown_index(v, m)] += a * t.coeff;
        }
      }
    }
    for (auto& [mono, row] : rows) sys.equations.push_back(std::move(row));
  }
  return sys;
}

/// dim_Q of the degree-d part of D(cS(D_l)).
inline std::size_t derivation_dim(int ell, int d) {
  DerivationSystem sys = derivation_system(ell, d);
  return sys.unknowns() - rank(std::move(sys.equations));
}

/// Graded dimension of a free module with exponents (1, h, ..., h):
/// sum over exponents e <= d of C(d - e + l, l).
inline Integer expected_dim(int ell, int d) {
  if (ell < 2) throw std::invalid_argument("expected_dim: ell must be >= 2");
  const int h = 2 * ell - 2;
  Integer total = 0;
  if (d >= 1) total += binomial(d - 1 + ell, ell);
  if (d >= h) total += binomial(d - h + ell, ell) * ell;
  return total;
}

struct SpanReport {
  std::size_t kernel_dim = 0;
  std::size_t span_rank = 0;
  bool all_in_kernel = false;
};

/// Ranks {m * theta : theta in the basis, deg(m * theta) = d} inside the
/// degree-d solution space. The basis generates that graded piece iff the
/// vectors lie in the kernel and span_rank == kernel_dim.
inline SpanReport span_check(const std::vector<Derivation>& generators, int d) {
  if (generators.empty()) throw std::invalid_argument("span_check: no generators");
  const int ell = generators.front().ell;
  DerivationSystem sys = derivation_system(ell, d);
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  std::vector<std::vector<Rational>> vectors;
  for (const auto& g : generators) {
    int gd = -1;
    for (std::size_t v = 0; v < g.nvars(); ++v)
      if (!g.coeff(v).is_zero()) gd = std::max(gd, g.coeff(v).total_degree());
    if (gd < 0 || gd > d) continue;
    for (const auto& m : monomials_of_degree(n, d - gd)) {
      Derivation shifted = g;
      for (auto& c : shifted.coeff_x) c = c.times_term(m, Rational(1));
      shifted.coeff_z = shifted.coeff_z.times_term(m, Rational(1));
      vectors.push_back(sys.vectorize(shifted));
    }
  }
  SpanReport r;
  r.all_in_kernel = true;
  for (const auto& v : vectors) r.all_in_kernel = r.all_in_kernel && sys.annihilates(v);
  r.span_rank = rank(std::move(vectors));
  r.kernel_dim = sys.unknowns() - rank(std::move(sys.equations));
  return r;
}

inline bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Largest enumeration the point count accepts.
inline constexpr std::uint64_t kMaxPoints = 10'000'000;

/// Number of points of F_q^{l+1} off every hyperplane of cS(D_l), by
/// exhaustive enumeration. Requires q an odd prime with q > h + 1 = 2l - 1.
inline std::uint64_t charpoly_count(int ell, long q) {
  if (ell < 2) throw std::invalid_argument("charpoly_count: ell must be >= 2");
  if (q == 2 || !is_prime(q)) throw std::invalid_argument("charpoly_count: q must be an odd prime");
  const long h = 2L * ell - 2;
  if (q <= h + 1) throw std::invalid_argument("charpoly_count: q must exceed h + 1 = 2*ell - 1");
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    total *= static_cast<std::uint64_t>(q);
    if (total > kMaxPoints) throw std::invalid_argument("charpoly_count: q^(ell+1) exceeds the enumeration cap");
  }
  const Arrangement arr = shi_d_cone(ell);
  std::vector<std::vector<long>> forms;
  for (const auto& f : arr.forms) {
    std::vector<long> c;
    for (const auto& a : f.coeffs()) c.push_back(((a.get_num().get_si() % q) + q) % q);  // integral forms
    forms.push_back(std::move(c));
  }
  std::vector<long> point(n, 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t v = 0; v < n; ++v) {
      point[v] = static_cast<long>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    bool off_all = true;
    for (const auto& f : forms) {
      long s = 0;
      for (std::size_t v = 0; v < n; ++v) s += f[v] * point[v];
      if (s % q == 0) {
        off_all = false;
        break;
      }
    }
    if (off_all) ++count;
  }
  return count;
}

/// (q - 1)(q - h)^l.
inline Integer expected_charpoly_count(int ell, long q) {
  Integer base = q - (2L * ell - 2);
  Integer r = q - 1;
  for (int i = 0; i < ell; ++i) r *= base;
  return r;
}

}  // namespace shi::oracle
