#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shi/monomial.hpp"
#include "shi/rational.hpp"

namespace shi {

/// Thrown when a division that is supposed to be exact leaves a remainder.
class DivisionNotExact : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline void fma_accumulate(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void fma_accumulate(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Rational coeff_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Integer coeff_quotient(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw DivisionNotExact("integer coefficient division is not exact");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::string coeff_string(const Rational& c) { return to_string(c); }
inline std::string coeff_string(const Integer& c) { return c.get_str(); }

}  // namespace detail

/// Sparse multivariate polynomial over `Coeff` in `nvars` variables.
/// Terms are kept sorted by pure lex, greatest first, with no zero
/// coefficients, so equality is a term-by-term scan and the initial
/// monomial is the first term.
template <class Coeff>
class BasicPoly {
 public:
  struct Term {
    Monomial mono;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit BasicPoly(std::size_t nvars = 0) : nvars_(nvars) { check_nvars(nvars); }

  static BasicPoly constant(std::size_t nvars, const Coeff& c) {
    BasicPoly p(nvars);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static BasicPoly variable(std::size_t nvars, std::size_t v, int power = 1) {
    if (v >= nvars) throw std::out_of_range("BasicPoly::variable: index out of range");
    BasicPoly p(nvars);
    p.terms_.push_back({Monomial::variable(v, power), Coeff(1)});
    return p;
  }
  static BasicPoly monomial(std::size_t nvars, Monomial m, const Coeff& c = Coeff(1)) {
    BasicPoly p(nvars);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Canonicalizes arbitrary terms: sorts, merges equal monomials, drops zeros.
  static BasicPoly from_terms(std::size_t nvars, std::vector<Term> terms) {
    BasicPoly p(nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Monomial& initial_monomial() const {
    if (terms_.empty()) throw std::domain_error("initial_monomial: zero polynomial");
    return terms_.front().mono;
  }
  const Coeff& leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading_coefficient: zero polynomial");
    return terms_.front().coeff;
  }

  Coeff coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Coeff(0);
  }

  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }
  int degree_in(std::size_t v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
  }
  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const Term& t) { return t.mono.total_degree() == degree; });
  }
  bool is_homogeneous() const { return terms_.empty() || is_homogeneous(terms_.front().mono.total_degree()); }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) { return merge(a, b, false); }
  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return merge(a, b, true); }
  BasicPoly& operator+=(const BasicPoly& b) { return *this = *this + b; }
  BasicPoly& operator-=(const BasicPoly& b) { return *this = *this - b; }

  friend BasicPoly operator*(const BasicPoly& a, const Coeff& c) {
    BasicPoly r(a.nvars_);
    if (c == 0) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }
  friend BasicPoly operator*(const Coeff& c, const BasicPoly& a) { return a * c; }
  BasicPoly& operator*=(const Coeff& c) { return *this = *this * c; }

  /// Multiplication by a single term. Lex order is multiplicative, so the
  /// result stays sorted.
  BasicPoly times_term(Monomial m, const Coeff& c) const {
    BasicPoly r(nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    check_same(a, b);
    if (a.terms_.size() > b.terms_.size()) return b * a;
    BasicPoly r(a.nvars_);
    if (a.is_zero()) return r;
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
    r.terms_ = heap_product(a.terms_, b.terms_);
    return r;
  }
  BasicPoly& operator*=(const BasicPoly& b) { return *this = *this * b; }

  BasicPoly pow(unsigned e) const {
    BasicPoly r = constant(nvars_, Coeff(1));
    BasicPoly base = *this;
    while (e != 0) {
      if (e & 1u) r *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return r;
  }

  /// Formal partial derivative with respect to variable `v`.
  BasicPoly derivative(std::size_t v) const {
    if (v >= nvars_) throw std::out_of_range("partial_derivative: index out of range");
    BasicPoly r(nvars_);
    for (const auto& t : terms_) {
      int e = t.mono[v];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(v, e - 1);
      r.terms_.push_back({m, t.coeff * Coeff(e)});
    }
    return r;  // dividing every kept monomial by x_v preserves their order
  }

  /// Replace variable `v` by `g` and expand.
  BasicPoly substitute(std::size_t v, const BasicPoly& g) const {
    if (v >= nvars_) throw std::out_of_range("substitute: index out of range");
    check_same(*this, g);
    std::vector<BasicPoly> powers{constant(nvars_, Coeff(1))};
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      int e = t.mono[v];
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * g);
      Monomial rest = t.mono;
      rest.set(v, 0);
      for (const auto& gt : powers[static_cast<std::size_t>(e)].terms_)
        acc.push_back({rest * gt.mono, t.coeff * gt.coeff});
    }
    return from_terms(nvars_, std::move(acc));
  }

  /// Exact evaluation at a point with one value per variable.
  template <class Value>
  Value evaluate(std::span<const Value> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
    std::vector<std::vector<Value>> pw(nvars_);
    Value sum = 0;
    for (const auto& t : terms_) {
      Value term = Value(t.coeff);
      for (std::size_t v = 0; v < nvars_; ++v) {
        auto e = static_cast<std::size_t>(t.mono[v]);
        if (e == 0) continue;
        auto& table = pw[v];
        if (table.empty()) table.push_back(Value(1));
        while (table.size() <= e) table.push_back(table.back() * point[v]);
        term *= table[e];
      }
      sum += term;
    }
    return sum;
  }

  /// Embeds into a ring with `nvars` variables, sending variable v to `target[v]`.
  BasicPoly relabel(std::size_t nvars, std::span<const std::size_t> target) const {
    if (target.size() != nvars_) throw std::invalid_argument("relabel: target size mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t v = 0; v < nvars_; ++v) {
        int e = t.mono[v];
        if (e == 0) continue;
        if (target[v] >= nvars) throw std::out_of_range("relabel: target index out of range");
        m.set(target[v], m[target[v]] + e);
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(nvars, std::move(out));
  }

  /// Canonical text: descending lex, "1/3*x1^3 + 2/3*x1", "0" for zero.
  std::string to_string(std::span<const std::string> names) const {
    if (names.size() < nvars_) throw std::invalid_argument("to_string: not enough variable names");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = t.coeff < 0;
      Coeff mag = negative ? Coeff(-t.coeff) : t.coeff;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t v = 0; v < nvars_; ++v) {
        int e = t.mono[v];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[v];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty())
        out += detail::coeff_string(mag);
      else if (mag == 1)
        out += mono;
      else
        out += detail::coeff_string(mag) + "*" + mono;
    }
    return out;
  }
  /// Uses x1..x{n-1}, z.
  std::string to_string() const { return to_string(default_names(nvars_)); }

  static std::vector<std::string> default_names(std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v + 1 < nvars; ++v) names.push_back("x" + std::to_string(v + 1));
    if (nvars > 0) names.push_back("z");
    return names;
  }

 private:
  static void check_nvars(std::size_t nvars) {
    if (nvars > kMaxVars) throw std::invalid_argument("BasicPoly: too many variables");
  }
  static void check_same(const BasicPoly& a, const BasicPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("BasicPoly: mismatched number of variables");
  }

  static BasicPoly merge(const BasicPoly& a, const BasicPoly& b, bool subtract) {
    check_same(a, b);
    BasicPoly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].mono > a.terms_[i].mono) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? Coeff(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        Coeff c = subtract ? Coeff(a.terms_[i].coeff - b.terms_[j].coeff) : Coeff(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Johnson's heap multiplication: one stream per term of the shorter factor,
  // each stream already sorted because lex order is multiplicative.
  static std::vector<Term> heap_product(const std::vector<Term>& a, const std::vector<Term>& b) {
    struct Entry {
      Monomial key;
      std::size_t i;
      std::size_t j;
      bool operator<(const Entry& o) const { return key < o.key; }
    };
    std::priority_queue<Entry> heap;
    for (std::size_t i = 0; i < a.size(); ++i) heap.push({a[i].mono * b[0].mono, i, 0});
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    Coeff acc;
    while (!heap.empty()) {
      Monomial current = heap.top().key;
      acc = 0;
      while (!heap.empty() && heap.top().key == current) {
        Entry e = heap.top();
        heap.pop();
        detail::fma_accumulate(acc, a[e.i].coeff, b[e.j].coeff);
        if (e.j + 1 < b.size()) heap.push({a[e.i].mono * b[e.j + 1].mono, e.i, e.j + 1});
      }
      if (acc != 0) out.push_back({current, acc});
    }
    return out;
  }

  std::size_t nvars_;
  std::vector<Term> terms_;
};

using Poly = BasicPoly<Rational>;
using IntPoly = BasicPoly<Integer>;

template <class Coeff>
struct DivisionResult {
  BasicPoly<Coeff> quotient;
  BasicPoly<Coeff> remainder;
};

/// Single-divisor multivariate division with remainder under pure lex.
/// When b divides a the remainder is zero.
template <class Coeff>
DivisionResult<Coeff> divide(const BasicPoly<Coeff>& a, const BasicPoly<Coeff>& b) {
  using P = BasicPoly<Coeff>;
  using Term = typename P::Term;
  if (b.is_zero()) throw std::domain_error("divide: division by zero polynomial");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("divide: mismatched number of variables");
  const std::size_t n = a.nvars();
  const Monomial lead = b.initial_monomial();
  const Coeff& lead_coeff = b.leading_coefficient();

  std::map<Monomial, Coeff, std::greater<>> work;
  for (const auto& t : a.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> quotient, remainder;
  while (!work.empty()) {
    auto top = work.begin();
    Monomial m = top->first;
    Coeff c = std::move(top->second);
    work.erase(top);
    if (!m.divisible_by(lead)) {
      remainder.push_back({m, std::move(c)});
      continue;
    }
    Monomial qm = m / lead;
    Coeff qc = detail::coeff_quotient(c, lead_coeff);
    // the leading term cancels exactly; subtract the rest of qm*qc*b
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const auto& bt = b.terms()[k];
      Monomial pm = qm * bt.mono;
      Coeff delta = qc * bt.coeff;
      auto [it, inserted] = work.try_emplace(pm, Coeff(0));
      it->second -= delta;
      if (it->second == 0) work.erase(it);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  // both sequences were produced in descending order
  DivisionResult<Coeff> result{P(n), P(n)};
  result.quotient = P::from_terms(n, std::move(quotient));
  result.remainder = P::from_terms(n, std::move(remainder));
  return result;
}

/// Returns q with q*b = a, or throws DivisionNotExact.
template <class Coeff>
BasicPoly<Coeff> exact_div(const BasicPoly<Coeff>& a, const BasicPoly<Coeff>& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw DivisionNotExact("exact_div: nonzero remainder " + r.to_string());
  return q;
}

/// True iff b divides a. divides(b, 0) is true; b = 0 is an error.
template <class Coeff>
bool divides(const BasicPoly<Coeff>& b, const BasicPoly<Coeff>& a) {
  if (b.is_zero()) throw std::domain_error("divides: zero divisor");
  if (a.is_zero()) return true;
  return divide(a, b).remainder.is_zero();
}

template <class Coeff>
BasicPoly<Coeff> partial_derivative(const BasicPoly<Coeff>& f, std::size_t v) {
  return f.derivative(v);
}

template <class Coeff>
BasicPoly<Coeff> substitute(const BasicPoly<Coeff>& f, std::size_t v, const BasicPoly<Coeff>& g) {
  return f.substitute(v, g);
}

/// Elementary symmetric polynomial sigma_n of the given variables, each
/// raised to `power` (power 2 gives tau_{2n}). Zero when n is out of range.
inline Poly elementary_symmetric(std::size_t nvars, std::span<const std::size_t> vars, int n, int power = 1) {
  if (n < 0 || n > static_cast<int>(vars.size())) return Poly(nvars);
  // e_k of the first m variables, built by the usual recurrence
  std::vector<Poly> e(static_cast<std::size_t>(n) + 1, Poly(nvars));
  e[0] = Poly::constant(nvars, Rational(1));
  for (std::size_t m = 0; m < vars.size(); ++m) {
    Poly y = Poly::variable(nvars, vars[m], power);
    for (std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(n), m + 1); k >= 1; --k) e[k] += y * e[k - 1];
  }
  return e[static_cast<std::size_t>(n)];
}

/// Clears denominators: returns (g, d) with g = d * f, g integral, d > 0 minimal.
inline std::pair<IntPoly, Integer> to_integer_poly(const Poly& f) {
  Integer d = 1;
  for (const auto& t : f.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<IntPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono, Integer(t.coeff.get_num() * (d / t.coeff.get_den()))});
  IntPoly g(f.nvars());
  g = IntPoly::from_terms(f.nvars(), std::move(terms));
  return {std::move(g), d};
}

inline Poly to_rational_poly(const IntPoly& g, const Integer& denominator = 1) {
  std::vector<Poly::Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) {
    Rational c(t.coeff, denominator);
    c.canonicalize();
    terms.push_back({t.mono, std::move(c)});
  }
  return Poly::from_terms(g.nvars(), std::move(terms));
}

}  // namespace shi
