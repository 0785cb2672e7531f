#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "shi/arrangement.hpp"
#include "shi/bernoulli.hpp"
#include "shi/derivation.hpp"
#include "shi/oracle.hpp"
#include "shi/verify.hpp"

// JSON encodings. Field order is fixed (ordered_json) and big integers are
// decimal strings, so output is byte-identical for identical inputs.

namespace shi::json {

using Json = nlohmann::ordered_json;

/// [[exponents...], "num", "den"] per term, descending lex.
inline Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms())
    terms.push_back(Json::array({t.mono.exponents(p.nvars()), t.coeff.get_num().get_str(), t.coeff.get_den().get_str()}));
  return terms;
}

inline Poly poly_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
  std::vector<Poly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("poly_from_json: malformed term");
    auto exps = t[0].get<std::vector<int>>();
    if (exps.size() != nvars) throw std::invalid_argument("poly_from_json: exponent vector has wrong length");
    Rational c(Integer(t[1].get<std::string>()), Integer(t[2].get<std::string>()));
    if (c.get_den() == 0) throw std::invalid_argument("poly_from_json: zero denominator");
    c.canonicalize();
    terms.push_back({Monomial(std::span<const int>(exps)), std::move(c)});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

inline Json monomial_to_json(const Monomial& m, std::size_t nvars) { return m.exponents(nvars); }

inline std::string rational_text(const Rational& r) { return shi::to_string(r); }

/// {"ell": L, "name": ..., "coeffs": {"x1": [...], ..., "z": [...]}}
inline Json derivation_to_json(const Derivation& d) {
  Json coeffs = Json::object();
  const auto names = Poly::default_names(d.nvars());
  for (std::size_t v = 0; v < d.nvars(); ++v) coeffs[names[v]] = poly_to_json(d.coeff(v));
  return Json{{"ell", d.ell}, {"name", d.name}, {"coeffs", std::move(coeffs)}};
}

inline Derivation derivation_from_json(const Json& j) {
  Derivation d;
  d.ell = j.at("ell").get<int>();
  if (d.ell < 2 || static_cast<std::size_t>(d.ell) + 1 > kMaxVars) throw std::invalid_argument("derivation_from_json: bad ell");
  d.name = j.at("name").get<std::string>();
  const auto names = Poly::default_names(d.nvars());
  const Json& coeffs = j.at("coeffs");
  for (std::size_t v = 0; v + 1 < d.nvars(); ++v) d.coeff_x.push_back(poly_from_json(coeffs.at(names[v]), d.nvars()));
  d.coeff_z = poly_from_json(coeffs.at("z"), d.nvars());
  return d;
}

inline Json basis_to_json(const std::vector<Derivation>& b) {
  Json out = Json::array();
  for (const auto& d : b) out.push_back(derivation_to_json(d));
  return out;
}

inline std::vector<Derivation> basis_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("basis_from_json: expected an array");
  std::vector<Derivation> out;
  for (const auto& d : j) out.push_back(derivation_from_json(d));
  return out;
}

inline Json arrangement_to_json(const Arrangement& arr) {
  Json forms = Json::array();
  for (const auto& f : arr.forms) {
    Json row = Json::array();
    for (const auto& c : f.coeffs()) row.push_back(rational_text(c));
    forms.push_back(std::move(row));
  }
  return Json{{"ell", arr.ell}, {"h", arr.h}, {"forms", std::move(forms)}};
}

inline Json bernoulli_to_json(const BernoulliRelative& b) {
  Json j{{"p", b.p}, {"q", b.q}, {"is_negative_one_zero", b.is_negative_one_zero}};
  if (b.is_negative_one_zero) {
    j["univariate"] = nullptr;
    j["homogenized"] = nullptr;
    j["value"] = "-1/x";
    return j;
  }
  Json uni = Json::array();
  for (const auto& c : b.univariate->coeffs()) uni.push_back(rational_text(c));
  j["univariate"] = std::move(uni);
  j["homogenized"] = poly_to_json(*b.homogenized);
  return j;
}

/// Timing is wall-clock and breaks byte-for-byte reproducibility, so it is opt-in.
inline Json report_to_json(const VerificationReport& r, bool include_timing = false) {
  Json membership = Json::array();
  for (std::size_t d = 0; d < r.membership.size(); ++d) {
    Json row = Json::array();
    for (bool b : r.membership[d]) row.push_back(b);
    membership.push_back(Json{{"derivation", r.derivations[d]}, {"forms", std::move(row)}});
  }
  Json j{{"ell", r.ell},
         {"forms", r.forms},
         {"membership", std::move(membership)},
         {"membership_ok", r.membership_ok},
         {"degrees_ok", r.degrees_ok},
         {"initials_ok", r.initials_ok},
         {"det_method", r.det_method},
         {"det_phi", r.det_phi ? poly_to_json(*r.det_phi) : Json(nullptr)},
         {"det_constant", rational_text(r.det_constant)},
         {"det_initial_monomial", r.det_initial ? monomial_to_json(*r.det_initial, static_cast<std::size_t>(r.ell) + 1) : Json(nullptr)},
         {"det_leading_coefficient", rational_text(r.det_leading_coefficient)},
         {"det_identity_ok", r.det_identity_ok},
         {"full_det_ok", r.full_det_ok},
         {"saito_ok", r.saito_ok}};
  if (include_timing) {
    Json timing = Json::object();
    for (const auto& t : r.timing) timing[t.phase] = t.seconds;
    j["timing"] = std::move(timing);
  }
  return j;
}

inline Json lemma_report_to_json(const LemmaReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"identity", c.identity}, {"parameters", c.parameters}, {"ok", c.ok}});
  return Json{{"ell", r.ell}, {"all_ok", r.all_ok()}, {"checks", std::move(checks)}};
}

/// Compact single-line encoding followed by a newline.
inline std::string emit(const Json& j) { return j.dump() + "\n"; }

}  // namespace shi::json
