#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shi/json_io.hpp"

namespace shi::cli {

enum ExitStatus : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

enum class Format { text, json };

struct RunConfig {
  std::string command;
  int ell = 0;
  int p = 0;
  int q = 0;
  int max_degree = 0;
  long prime = 0;
  Format format = Format::text;
  std::optional<std::string> out;
  std::optional<std::string> basis_file;
  int expand_up_to = VerifyOptions{}.max_expanded_ell;
  bool timing = false;
};

namespace detail {

inline const char* yes(bool ok) { return ok ? "ok" : "FAILED"; }

inline std::string basis_text(const std::vector<Derivation>& b) {
  std::ostringstream os;
  const auto names = Poly::default_names(b.front().nvars());
  for (const auto& d : b) {
    os << d.name << " (ell=" << d.ell << ")\n";
    for (std::size_t v = 0; v < d.nvars(); ++v) os << "  d/d" << names[v] << ": " << d.coeff(v).to_string() << "\n";
  }
  return os.str();
}

inline std::string report_text(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  std::size_t total = 0, good = 0;
  for (const auto& row : r.membership)
    for (bool b : row) {
      ++total;
      good += b ? 1 : 0;
    }
  os << "ell = " << r.ell << ", hyperplanes = " << r.forms.size() << "\n";
  os << "membership: " << good << "/" << total << " " << yes(r.membership_ok) << "\n";
  os << "degrees: " << yes(r.degrees_ok) << "\n";
  os << "initial monomials: " << yes(r.initials_ok) << "\n";
  os << "det[phi_j(x_i)] (" << r.det_method << "): constant " << to_string(r.det_constant);
  if (r.det_phi) os << ", " << r.det_phi->size() << " terms";
  os << ", matches 1/(2l-3)!! * prod(x_s + e x_t - z)(x_s + e x_t): " << yes(r.det_identity_ok) << "\n";
  if (r.det_initial)
    os << "in(det) = " << Poly::monomial(static_cast<std::size_t>(r.ell) + 1, *r.det_initial).to_string() << "\n";
  os << "full determinant = nonzero constant * Q: " << yes(r.full_det_ok) << "\n";
  os << "saito: " << yes(r.saito_ok) << "\n";
  if (timing)
    for (const auto& t : r.timing) os << "time " << t.phase << ": " << t.seconds << " s\n";
  return os.str();
}

inline std::string lemma_text(const LemmaReport& r) {
  std::ostringstream os;
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& c : r.checks) {
    if (!tally.count(c.identity)) order.push_back(c.identity);
    auto& [good, total] = tally[c.identity];
    ++total;
    good += c.ok ? 1 : 0;
  }
  os << "ell = " << r.ell << "\n";
  for (const auto& name : order)
    os << name << ": " << tally[name].first << "/" << tally[name].second << " " << yes(tally[name].first == tally[name].second) << "\n";
  for (const auto& c : r.checks)
    if (!c.ok) os << "  failed " << c.identity << " [" << c.parameters << "]\n";
  return os.str();
}

}  // namespace detail

/// Executes a parsed configuration; writes the report to `out`.
inline int execute(const RunConfig& cfg, std::ostream& out) {
  const bool as_json = cfg.format == Format::json;
  if (cfg.command == "basis") {
    auto b = basis(cfg.ell);
    out << (as_json ? json::emit(json::basis_to_json(b)) : detail::basis_text(b));
    return kOk;
  }
  if (cfg.command == "bernoulli") {
    const BernoulliRelative& b = bernoulli(cfg.p, cfg.q);
    if (as_json) {
      out << json::emit(json::bernoulli_to_json(b));
    } else if (b.is_negative_one_zero) {
      out << "B(x) = -1/x\nBbar(x,z) = -1/x\n";
    } else {
      const std::string names[] = {"x", "z"};
      out << "B(x) = " << b.univariate->to_string("x") << "\n";
      out << "Bbar(x,z) = " << b.homogenized->to_string(names) << "\n";
    }
    return kOk;
  }
  if (cfg.command == "verify") {
    VerifyOptions options;
    options.max_expanded_ell = cfg.expand_up_to;
    VerificationReport r;
    if (cfg.basis_file) {
      std::ifstream in(*cfg.basis_file);
      if (!in) throw std::invalid_argument("cannot open basis file " + *cfg.basis_file);
      auto b = json::basis_from_json(json::Json::parse(in));
      if (b.empty() || b.front().ell != cfg.ell) throw std::invalid_argument("basis file does not match --ell");
      r = saito_verify(b, options);
    } else {
      r = saito_verify(cfg.ell, options);
    }
    out << (as_json ? json::emit(json::report_to_json(r, cfg.timing)) : detail::report_text(r, cfg.timing));
    return r.saito_ok ? kOk : kCheckFailed;
  }
  if (cfg.command == "det") {
    auto b = basis(cfg.ell);
    Poly det = polynomial_det(phi_matrix(b));
    bool ok = det == defining_poly_without_z(shi_d_cone(cfg.ell)) * expected_det_constant(cfg.ell);
    if (as_json)
      out << json::emit(json::Json{{"ell", cfg.ell}, {"det_phi", json::poly_to_json(det)},
                                   {"expected_constant", to_string(expected_det_constant(cfg.ell))}, {"matches", ok}});
    else
      out << det.to_string() << "\n";
    return ok ? kOk : kCheckFailed;
  }
  if (cfg.command == "oracle-dims") {
    const int h = 2 * cfg.ell - 2;
    json::Json rows = json::Json::array();
    std::ostringstream text;
    bool all = true;
    for (int d = 0; d <= cfg.max_degree; ++d) {
      std::size_t computed = oracle::derivation_dim(cfg.ell, d);
      Integer expected = oracle::expected_dim(cfg.ell, d);
      bool ok = Integer(static_cast<unsigned long>(computed)) == expected;
      all = all && ok;
      rows.push_back(json::Json{{"degree", d}, {"computed_dim", computed}, {"expected_dim", expected.get_str()}, {"ok", ok}});
      text << "d=" << d << " computed=" << computed << " expected=" << expected.get_str() << " " << detail::yes(ok) << "\n";
    }
    if (as_json)
      out << json::emit(json::Json{{"ell", cfg.ell}, {"h", h}, {"dims", std::move(rows)}, {"all_ok", all}});
    else
      out << "ell = " << cfg.ell << ", h = " << h << "\n" << text.str();
    return all ? kOk : kCheckFailed;
  }
  if (cfg.command == "oracle-charpoly") {
    auto count = oracle::charpoly_count(cfg.ell, cfg.prime);
    Integer expected = oracle::expected_charpoly_count(cfg.ell, cfg.prime);
    bool ok = Integer(static_cast<unsigned long>(count)) == expected;
    if (as_json)
      out << json::emit(json::Json{{"ell", cfg.ell}, {"q", cfg.prime}, {"count", std::to_string(count)},
                                   {"expected", expected.get_str()}, {"ok", ok}});
    else
      out << "ell = " << cfg.ell << ", q = " << cfg.prime << ": count=" << count << " expected=(q-1)(q-h)^l="
          << expected.get_str() << " " << detail::yes(ok) << "\n";
    return ok ? kOk : kCheckFailed;
  }
  if (cfg.command == "lemmas") {
    auto r = lemma_identity_checks(cfg.ell);
    out << (as_json ? json::emit(json::lemma_report_to_json(r)) : detail::lemma_text(r));
    return r.all_ok() ? kOk : kCheckFailed;
  }
  throw std::invalid_argument("unknown command " + cfg.command);
}

/// Parses argv, runs, and maps outcomes to exit codes
/// (0 pass, 1 check failure, 2 usage error).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivation-module basis for the cone over the Shi arrangement of type D"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  const auto ell_range = CLI::Range(2, static_cast<int>(kMaxVars) - 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };

  auto* basis_cmd = app.add_subcommand("basis", "Print theta_E, phi_1..phi_l");
  basis_cmd->add_option("--ell", cfg.ell, "Rank l")->required()->check(ell_range);
  add_common(basis_cmd);

  auto* bern = app.add_subcommand("bernoulli", "Print B_{p,q} and its homogenization");
  bern->add_option("--p", cfg.p, "p >= -1")->required()->check(CLI::Range(-1, 200));
  bern->add_option("--q", cfg.q, "q >= 0")->required()->check(CLI::Range(0, 100));
  add_common(bern);

  auto* verify_cmd = app.add_subcommand("verify", "Check the basis against Saito's criterion");
  verify_cmd->add_option("--ell", cfg.ell, "Rank l")->required()->check(ell_range);
  verify_cmd->add_option("--basis", cfg.basis_file, "Verify a basis read from JSON (as written by `basis --format json`)");
  verify_cmd->add_option("--expand-up-to", cfg.expand_up_to, "Largest l whose determinant is expanded symbolically")
      ->check(CLI::Range(1, static_cast<int>(kMaxVars) - 1));
  verify_cmd->add_flag("--timing", cfg.timing, "Report per-phase wall-clock times");
  add_common(verify_cmd);

  auto* det_cmd = app.add_subcommand("det", "Expand det[phi_j(x_i)]");
  det_cmd->add_option("--ell", cfg.ell, "Rank l")->required()->check(ell_range);
  add_common(det_cmd);

  auto* lemmas = app.add_subcommand("lemmas", "Check the auxiliary divisibility and expansion identities");
  lemmas->add_option("--ell", cfg.ell, "Rank l")->required()->check(ell_range);
  add_common(lemmas);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle_cmd->require_subcommand(1);
  auto* dims = oracle_cmd->add_subcommand("dims", "Graded dimensions of D(A) by linear algebra");
  dims->add_option("--ell", cfg.ell, "Rank l")->required()->check(ell_range);
  dims->add_option("--max-degree", cfg.max_degree, "Largest degree")->required()->check(CLI::Range(0, 64));
  add_common(dims);
  auto* charpoly = oracle_cmd->add_subcommand("charpoly", "Point count of the complement over F_q");
  charpoly->add_option("--ell", cfg.ell, "Rank l")->required()->check(ell_range);
  charpoly->add_option("--q", cfg.prime, "Odd prime q > 2l - 1")->required();
  add_common(charpoly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto* sub : {basis_cmd, bern, verify_cmd, det_cmd, lemmas})
    if (sub->parsed()) cfg.command = sub->get_name();
  if (dims->parsed()) cfg.command = "oracle-dims";
  if (charpoly->parsed()) cfg.command = "oracle-charpoly";
  cfg.format = format == "json" ? Format::json : Format::text;

  try {
    if (cfg.out) {
      std::ostringstream buffer;
      int status = execute(cfg, buffer);
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open output file " + *cfg.out);
      file << buffer.str();
      return status;
    }
    return execute(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace shi::cli
