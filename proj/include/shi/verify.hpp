#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shi/arrangement.hpp"
#include "shi/determinant.hpp"
#include "shi/shi_basis.hpp"

namespace shi {

/// membership[f] = theta(alpha_f) is divisible by alpha_f.
inline std::vector<bool> check_membership(const Derivation& theta, const Arrangement& arr) {
  if (theta.nvars() != arr.nvars()) throw std::invalid_argument("check_membership: ell mismatch");
  std::vector<bool> out;
  out.reserve(arr.forms.size());
  for (const auto& form : arr.forms) {
    Poly alpha = form.to_poly();
    out.push_back(divides(alpha, apply(theta, alpha)));
  }
  return out;
}

/// Entry (r, c) is the coefficient of d/d(variable r) in derivation c;
/// rows x_1..x_l, z.
inline Matrix<Poly> coefficient_matrix(const std::vector<Derivation>& derivations) {
  if (derivations.empty()) throw std::invalid_argument("coefficient_matrix: no derivations");
  const std::size_t n = derivations.front().nvars();
  if (derivations.size() != n) throw std::invalid_argument("coefficient_matrix: need ell+1 derivations");
  Matrix<Poly> m(n, n, Poly(n));
  for (std::size_t c = 0; c < n; ++c) {
    if (derivations[c].nvars() != n) throw std::invalid_argument("coefficient_matrix: ell mismatch");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = derivations[c].coeff(r);
  }
  return m;
}

/// The l x l block [phi_j(x_i)]: rows x_1..x_l, columns phi_1..phi_l.
inline Matrix<Poly> phi_matrix(const std::vector<Derivation>& derivations) {
  Matrix<Poly> full = coefficient_matrix(derivations);
  return full.minor(full.rows() - 1, 0);
}

/// x_1^2 ... x_{i-1}^2 x_i^{2l-2i} (1-based i).
inline Monomial expected_initial(int ell, int i) {
  Monomial m;
  for (int p = 1; p < i; ++p) m.set(static_cast<std::size_t>(p - 1), 2);
  m.set(static_cast<std::size_t>(i - 1), 2 * ell - 2 * i);
  return m;
}

/// prod_{i<l} x_i^{4(l-i)}.
inline Monomial expected_det_initial(int ell) {
  Monomial m;
  for (int i = 1; i < ell; ++i) m.set(static_cast<std::size_t>(i - 1), 4 * (ell - i));
  return m;
}

/// 1/(2l-3)!!.
inline Rational expected_det_constant(int ell) { return Rational(Integer(1), double_factorial(2 * ell - 3)); }

struct VerifyOptions {
  /// Largest l whose l x l determinant is expanded symbolically. Above it the
  /// identity is established by the divisibility certificate.
  int max_expanded_ell = 5;
  /// Extra exact point evaluations of det - c * Q/z, on top of the certificate.
  int sample_points = 4;
  /// Largest l whose full (l+1) x (l+1) matrix is also run through Bareiss.
  int max_bareiss_full_ell = 3;
};

struct PhaseTiming {
  std::string phase;
  double seconds = 0;
};

struct VerificationReport {
  int ell = 0;
  std::vector<std::string> forms;
  std::vector<std::string> derivations;
  std::vector<std::vector<bool>> membership;  // [derivation][form]
  bool membership_ok = false;
  bool degrees_ok = false;
  bool initials_ok = false;
  std::string det_method;  // "expanded" or "certified"
  std::optional<Poly> det_phi;
  Rational det_constant;
  std::optional<Monomial> det_initial;
  Rational det_leading_coefficient;
  bool det_identity_ok = false;
  bool full_det_ok = false;
  bool saito_ok = false;
  std::vector<PhaseTiming> timing;
};

namespace verify_detail {

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<PhaseTiming>& sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  void lap(std::string name) {
    auto now = std::chrono::steady_clock::now();
    sink_.push_back({std::move(name), std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<PhaseTiming>& sink_;
  std::chrono::steady_clock::time_point start_;
};

/// Lemma: the degree of every nonzero phi_j(x_i) is 2(l-1), homogeneous, and phi_j(z) = 0.
inline bool degrees_hold(const std::vector<Derivation>& b, int ell) {
  for (std::size_t c = 1; c < b.size(); ++c) {
    if (!b[c].coeff_z.is_zero()) return false;
    for (const auto& p : b[c].coeff_x)
      if (!p.is_zero() && (!p.is_homogeneous(2 * ell - 2) || p.total_degree() != 2 * ell - 2)) return false;
  }
  for (std::size_t i = 0; i < b[0].coeff_x.size(); ++i)
    if (b[0].coeff_x[i] != Poly::variable(b[0].nvars(), i)) return false;
  return b[0].coeff_z == Poly::variable(b[0].nvars(), b[0].nvars() - 1);
}

inline bool initials_hold(const std::vector<Derivation>& b, int ell) {
  for (int i = 1; i <= ell; ++i) {
    const Monomial bound = expected_initial(ell, i);
    for (int j = 1; j <= ell; ++j) {
      const Poly& entry = b[static_cast<std::size_t>(j)].coeff_x[static_cast<std::size_t>(i - 1)];
      if (i == j) {
        if (entry.is_zero() || entry.initial_monomial() != bound) return false;
        Rational lead = i < ell ? Rational(1, 2 * ell - 2 * i - 1) : Rational(1);
        if (entry.leading_coefficient() != lead) return false;
        continue;
      }
      if (entry.is_zero()) continue;
      if (entry.initial_monomial() > bound) return false;
      if (i < j && !(entry.initial_monomial() < bound)) return false;
    }
  }
  return true;
}

inline std::vector<Rational> sample_point(std::size_t nvars, int seed) {
  std::vector<Rational> pt(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    long a = 7 + 13 * static_cast<long>(v) * static_cast<long>(v) + 31 * seed + static_cast<long>(v) * seed * seed;
    pt[v] = Rational(a, 3 + static_cast<long>(v) + seed);
    pt[v].canonicalize();
  }
  return pt;
}

inline Rational product_of_forms_at(const Arrangement& arr, const std::vector<Rational>& pt, bool include_z) {
  Rational value = 1;
  for (const auto& f : arr.forms) {
    if (!include_z && f.leading_index() == arr.nvars() - 1) continue;
    Rational s = 0;
    for (std::size_t v = 0; v < pt.size(); ++v) s += f.coeffs()[v] * pt[v];
    value *= s;
  }
  return value;
}

inline Matrix<Rational> evaluate_matrix(const Matrix<Poly>& m, const std::vector<Rational>& pt) {
  Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate<Rational>(pt);
  return out;
}

}  // namespace verify_detail

/// Exact determinant identity without expanding the determinant:
///  1. each non-z form alpha with coefficient vector a gives
///     sum_i a_i phi_j(x_i) = phi_j(alpha) (since phi_j(z) = 0), which is
///     divisible by alpha for every j; replacing the row of alpha's leading
///     variable (coefficient 1) by that combination shows alpha | det;
///  2. the forms are pairwise non-proportional, hence coprime, so their
///     product P divides det;
///  3. column j is homogeneous of degree d_j and sum d_j = deg P, so
///     det = c P for a constant c;
///  4. c = det(M(pt)) / P(pt) at a point with P(pt) != 0.
/// Returns c, or nullopt when a hypothesis fails.
inline std::optional<Rational> certify_det_constant(const std::vector<Derivation>& b, const Arrangement& arr,
                                                    const std::vector<std::vector<bool>>& membership) {
  const std::size_t z = arr.nvars() - 1;
  std::size_t nonz_forms = 0;
  for (std::size_t f = 0; f < arr.forms.size(); ++f) {
    if (arr.forms[f].leading_index() == z) continue;
    ++nonz_forms;
    if (arr.forms[f].coeffs()[arr.forms[f].leading_index()] != 1) return std::nullopt;
    for (std::size_t c = 1; c < b.size(); ++c)
      if (!membership[c][f]) return std::nullopt;
  }
  for (std::size_t a = 0; a < arr.forms.size(); ++a)
    for (std::size_t c = a + 1; c < arr.forms.size(); ++c)
      if (arr.forms[a].proportional_to(arr.forms[c])) return std::nullopt;
  long degree_sum = 0;
  for (std::size_t c = 1; c < b.size(); ++c) {
    if (!b[c].coeff_z.is_zero()) return std::nullopt;
    int d = -1;
    for (const auto& p : b[c].coeff_x) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return std::nullopt;
      int pd = p.total_degree();
      if (d != -1 && pd != d) return std::nullopt;
      d = pd;
    }
    if (d < 0) return std::nullopt;  // zero column
    degree_sum += d;
  }
  if (degree_sum != static_cast<long>(nonz_forms)) return std::nullopt;

  const Matrix<Poly> m = phi_matrix(b);
  for (int seed = 1;; ++seed) {
    auto pt = verify_detail::sample_point(arr.nvars(), seed);
    Rational p = verify_detail::product_of_forms_at(arr, pt, false);
    if (p == 0) continue;
    return bareiss_det(verify_detail::evaluate_matrix(m, pt)) / p;
  }
}

/// Checks membership, degrees, initial monomials, and the determinant
/// identity for a given candidate basis [theta_E, phi_1..phi_l].
inline VerificationReport saito_verify(const std::vector<Derivation>& b, const VerifyOptions& options = {}) {
  if (b.empty()) throw std::invalid_argument("saito_verify: empty basis");
  const int ell = b.front().ell;
  if (ell < 2) throw std::invalid_argument("saito_verify: ell must be >= 2");
  if (b.size() != static_cast<std::size_t>(ell) + 1) throw std::invalid_argument("saito_verify: need ell+1 derivations");
  VerificationReport report;
  report.ell = ell;
  verify_detail::PhaseClock clock(report.timing);

  const Arrangement arr = shi_d_cone(ell);
  for (const auto& f : arr.forms) report.forms.push_back(f.to_string());
  for (const auto& d : b) report.derivations.push_back(d.name);

  report.membership_ok = true;
  for (const auto& d : b) {
    report.membership.push_back(check_membership(d, arr));
    for (bool ok : report.membership.back()) report.membership_ok = report.membership_ok && ok;
  }
  clock.lap("membership");

  report.degrees_ok = verify_detail::degrees_hold(b, ell);
  report.initials_ok = verify_detail::initials_hold(b, ell);
  clock.lap("degrees_and_initials");

  const Rational expected_c = expected_det_constant(ell);
  const Matrix<Poly> phi = phi_matrix(b);
  if (ell <= options.max_expanded_ell) {
    report.det_method = "expanded";
    const Poly rhs_product = defining_poly_without_z(arr);
    Poly det = polynomial_det(phi);
    clock.lap("determinant");
    Poly diff = det - rhs_product * expected_c;
    report.det_identity_ok = diff.is_zero();
    if (!det.is_zero()) {
      report.det_initial = det.initial_monomial();
      report.det_leading_coefficient = det.leading_coefficient();
      // det = c * P with P monic in lex; read c off the leading term
      report.det_constant = det.leading_coefficient() / rhs_product.leading_coefficient();
    }
    report.det_phi = std::move(det);
  } else {
    report.det_method = "certified";
    auto c = certify_det_constant(b, arr, report.membership);
    clock.lap("determinant");
    if (c) {
      report.det_constant = *c;
      Monomial initial;
      for (const auto& f : arr.forms)
        if (f.leading_index() != arr.nvars() - 1) initial = initial * Monomial::variable(f.leading_index());
      report.det_initial = initial;
      report.det_leading_coefficient = *c;  // every form has leading coefficient 1
      report.det_identity_ok = (*c == expected_c);
    }
  }
  // independent spot checks at further points
  for (int s = 0; s < options.sample_points && report.det_identity_ok; ++s) {
    auto pt = verify_detail::sample_point(arr.nvars(), 100 + s);
    Rational lhs = bareiss_det(verify_detail::evaluate_matrix(phi, pt));
    Rational rhs = expected_c * verify_detail::product_of_forms_at(arr, pt, false);
    report.det_identity_ok = (lhs == rhs);
  }
  if (report.det_initial && *report.det_initial != expected_det_initial(ell)) report.det_identity_ok = false;
  if (report.det_leading_coefficient != expected_c) report.det_identity_ok = false;
  clock.lap("identity_checks");

  // The z row is (z, 0, ..., 0), so det(full) = (-1)^l z det(phi) = (-1)^l c Q.
  const Matrix<Poly> full = coefficient_matrix(b);
  const std::size_t zr = full.rows() - 1;
  bool z_row_ok = full(zr, 0) == Poly::variable(arr.nvars(), zr);
  for (std::size_t c = 1; c < full.cols(); ++c) z_row_ok = z_row_ok && full(zr, c).is_zero();
  report.full_det_ok = z_row_ok && report.det_identity_ok && report.det_constant != 0;
  if (report.full_det_ok && ell <= options.max_bareiss_full_ell) {
    Rational sign = ell % 2 == 0 ? Rational(1) : Rational(-1);
    report.full_det_ok = bareiss_det(full) == defining_poly(arr) * (expected_c * sign);
  }
  clock.lap("full_determinant");

  report.saito_ok = report.membership_ok && report.degrees_ok && report.initials_ok && report.det_identity_ok &&
                    report.full_det_ok;
  return report;
}

inline VerificationReport saito_verify(int ell, const VerifyOptions& options = {}) {
  if (ell < 2) throw std::invalid_argument("saito_verify: ell must be >= 2");
  auto started = std::chrono::steady_clock::now();
  auto b = basis(ell);
  auto built = std::chrono::steady_clock::now();
  VerificationReport r = saito_verify(b, options);
  r.timing.insert(r.timing.begin(), PhaseTiming{"basis", std::chrono::duration<double>(built - started).count()});
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial identities behind the membership argument.

struct IdentityCheck {
  std::string identity;
  std::string parameters;
  bool ok = false;
};

struct LemmaReport {
  int ell = 0;
  std::vector<IdentityCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
};

/// (k, k0) pairs whose Bbar_{k,k0} enters some phi_j at this l.
inline std::set<std::pair<int, int>> arising_bernoulli_indices(int ell) {
  std::set<std::pair<int, int>> out;
  for (int j = 1; j < ell; ++j) {
    int j2 = ell - j - 1;
    for (int k0 = 0; k0 <= j - 1; ++k0)
      for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= j2; ++n2) out.insert({(2 - n1) + 2 * (j2 - n2) - 1, k0});
  }
  for (int k0 = 0; k0 <= ell - 1; ++k0) out.insert({-1, k0});
  return out;
}

namespace lemma_detail {

inline std::string tuple_text(std::initializer_list<std::pair<const char*, int>> items) {
  std::string s;
  for (const auto& [k, v] : items) s += (s.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
  return s;
}

}  // namespace lemma_detail

inline LemmaReport lemma_identity_checks(int ell) {
  basis_detail::check_ell(ell);
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  const std::size_t z = n - 1;
  auto x = [n](std::size_t v) { return Poly::variable(n, v); };
  auto c = [n](long v) { return Poly::constant(n, Rational(v)); };
  LemmaReport report;
  report.ell = ell;

  // (a) prod_{x_i in J} (x_i - x_s)(x_i - eps x_t) as a sum over disjoint (K1, K2)
  for (int j = 1; j <= ell; ++j) {
    auto J = basis_detail::range(0, std::min(j - 1, ell - 1));
    auto pairs = enumerate_k1_k2(J);
    for (std::size_t s = 0; s < static_cast<std::size_t>(ell); ++s) {
      for (std::size_t t = s + 1; t < static_cast<std::size_t>(ell); ++t) {
        for (int eps : {1, -1}) {
          Poly lhs = c(1);
          for (auto i : J) lhs *= (x(i) - x(s)) * (x(i) - c(eps) * x(t));
          Poly rhs(n);
          Poly shifted = -(x(s) + c(eps) * x(t));
          Poly product = c(eps) * x(s) * x(t);
          for (const auto& pr : pairs) {
            Poly term = c(1);
            for (auto v : pr.k1) term *= x(v) * shifted;
            for (auto v : pr.k2) term *= x(v) * x(v);
            term *= product.pow(static_cast<unsigned>(J.size() - pr.k1.size() - pr.k2.size()));
            rhs += term;
          }
          report.checks.push_back({"subset_expansion",
                                   lemma_detail::tuple_text({{"j", j}, {"s", int(s) + 1}, {"t", int(t) + 1}, {"eps", eps}}),
                                   lhs == rhs});
        }
      }
    }
  }

  // (b) sum (-1)^{|J1|+|J2|-n1-n2} sigma_{n1}(J1) tau_{2n2}(J2) (eps x_s)^{k+1}
  //     = prod_{J1} (x_i - eps x_s) prod_{J2} (x_i^2 - x_s^2)
  for (int j = 1; j < ell; ++j) {
    auto J1 = basis_detail::range(j - 1, j + 1);
    auto J2 = basis_detail::range(j + 1, ell);
    for (std::size_t s = 0; s < static_cast<std::size_t>(ell); ++s) {
      for (int eps : {1, -1}) {
        Poly lhs(n);
        for (int n1 = 0; n1 <= 2; ++n1) {
          for (int n2 = 0; n2 <= static_cast<int>(J2.size()); ++n2) {
            int k = (2 - n1) + 2 * (static_cast<int>(J2.size()) - n2) - 1;
            int sign = ((2 + static_cast<int>(J2.size()) - n1 - n2) % 2 == 0) ? 1 : -1;
            lhs += c(sign) * elementary_symmetric(n, J1, n1) * elementary_symmetric(n, J2, n2, 2) *
                   (c(eps) * x(s)).pow(static_cast<unsigned>(k + 1));
          }
        }
        Poly rhs = c(1);
        for (auto i : J1) rhs *= x(i) - c(eps) * x(s);
        for (auto i : J2) rhs *= x(i) * x(i) - x(s) * x(s);
        report.checks.push_back({"symmetric_expansion",
                                 lemma_detail::tuple_text({{"j", j}, {"s", int(s) + 1}, {"eps", eps}}), lhs == rhs});
      }
    }
  }

  // (c) x_s Bbar(x_s) - x_t Bbar(x_t) is divisible by x_s^2 - x_t^2
  // (d) (x_s - eps x_t) eps x_s x_t [Bbar(x_s) + eps Bbar(x_t)]
  //       - (x_s + eps x_t)(eps x_s x_t)^{k0} [eps x_t x_s^{k+1} - x_s (eps x_t)^{k+1}]
  //     is divisible by x_s + eps x_t - z
  for (auto [k, k0] : arising_bernoulli_indices(ell)) {
    for (std::size_t s = 0; s < static_cast<std::size_t>(ell); ++s) {
      for (std::size_t t = s + 1; t < static_cast<std::size_t>(ell); ++t) {
        Poly xb_s = basis_detail::xi_times_bbar(k, k0, s, n);
        Poly xb_t = basis_detail::xi_times_bbar(k, k0, t, n);
        std::string params = lemma_detail::tuple_text({{"k", k}, {"k0", k0}, {"s", int(s) + 1}, {"t", int(t) + 1}});
        report.checks.push_back({"odd_difference_divisibility", params, divides(x(s) * x(s) - x(t) * x(t), xb_s - xb_t)});
        for (int eps : {1, -1}) {
          Poly e = c(eps) * x(s) * x(t);
          // eps x_s x_t [Bbar(x_s) + eps Bbar(x_t)] = eps x_t (x_s Bbar(x_s)) + x_s (x_t Bbar(x_t))
          Poly bracket = c(eps) * x(t) * xb_s + x(s) * xb_t;
          Poly combo = (x(s) - c(eps) * x(t)) * bracket -
                       (x(s) + c(eps) * x(t)) * e.pow(static_cast<unsigned>(k0)) *
                           (c(eps) * x(t) * x(s).pow(static_cast<unsigned>(k + 1)) -
                            x(s) * (c(eps) * x(t)).pow(static_cast<unsigned>(k + 1)));
          report.checks.push_back({"shifted_divisibility", params + ",eps=" + std::to_string(eps),
                                   divides(x(s) + c(eps) * x(t) - x(z), combo)});
        }
      }
    }
  }
  return report;
}

}  // namespace shi
