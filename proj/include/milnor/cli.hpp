#pragma once

// Command-line front end: mu, eu, strata, oracle-curve.
//
// Exit codes: 0 success, 1 malformed input, 2 non-isolated / non-ICIS,
// 3 genericity failure, 4 cross-check mismatch.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "milnor/error.hpp"
#include "milnor/invariants.hpp"
#include "milnor/morsify.hpp"
#include "milnor/parser.hpp"
#include "milnor/report.hpp"
#include "milnor/strata.hpp"

namespace milnor::cli {

enum ExitCode : int { ok = 0, malformed = 1, non_isolated = 2, genericity = 3, mismatch = 4 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::non_isolated:
    case ErrorKind::non_icis: return non_isolated;
    case ErrorKind::genericity: return genericity;
    case ErrorKind::consistency: return mismatch;
    default: return malformed;
  }
}

struct Options {
  std::string f;
  std::string vars = "x,y";
  std::string input;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<int> bound;
  int p = 0;
  int q = 0;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// Keeps the reason field on one line and free of the closing quote.
inline std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '"') c = '\'';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

inline Sampling sampling_from(const Options& o, Sampling base = {}) {
  if (o.seed) base.seed = *o.seed;
  if (o.samples) base.samples = *o.samples;
  if (o.bound) base.bound = *o.bound;
  return base;
}

inline int cmd_mu(const Options& o, std::ostream& out) {
  const VarTable vars = VarTable::from_list(o.vars);
  const Polynomial f = parse(o.f, vars);
  Context ctx;
  const std::size_t mu = milnor_hypersurface(f, vars.size(), ctx);
  if (o.json) {
    emit(out, Json{{"command", "mu"},
                   {"status", "ok"},
                   {"input", {{"f", o.f}, {"vars", vars.names()}}},
                   {"mu", mu},
                   {"colengths", colength_log_json(ctx, vars)}});
  } else {
    out << "mu = " << mu << '\n';
  }
  return ok;
}

inline int cmd_eu(const Options& o, std::ostream& out, std::ostream& err) {
  GermInput in = parse_germ_document(read_file(o.input));
  in.sampling = sampling_from(o, in.sampling);
  Context ctx(in.sampling);
  InvariantReport report;
  try {
    report = euler_obstruction(in.germ, ctx);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::non_icis)
      throw Error(e.kind(), std::string(e.what()) +
                                "; hint: for non-ICIS germs evaluate the stratified formula with `strata`");
    throw;
  }
  const int code = report.all_passed() ? ok : mismatch;
  if (o.json) {
    Json doc{{"command", "eu"}, {"status", code == ok ? "ok" : "check-failed"}, {"input", to_json(in)}};
    doc["report"] = to_json(report, in.vars);
    doc["colengths"] = colength_log_json(ctx, in.vars);
    emit(out, doc);
  } else {
    render_text(out, in, report);
  }
  if (code != ok) err << "error kind=consistency exit=4 reason=\"identity check failed\"\n";
  return code;
}

inline int cmd_strata(const Options& o, std::ostream& out, std::ostream& err) {
  const StrataInput in = parse_strata_document(read_file(o.input));
  const std::int64_t eu = stratified_euler_obstruction(in.table);
  bool pass = true;
  Json checks = Json::array();
  if (in.expected_eu) {
    const bool p = eu == *in.expected_eu;
    checks.push_back(Json{{"name", "expected_eu"}, {"pass", p}, {"expected", *in.expected_eu}});
    pass = pass && p;
  }
  if (in.alpha_q) {
    const bool p = cross_check_alpha(in.table, *in.alpha_q);
    checks.push_back(Json{{"name", "alpha_q"}, {"pass", p}, {"alpha_q", *in.alpha_q}});
    pass = pass && p;
  }
  if (o.json) {
    Json strata = Json::array();
    for (const auto& s : in.table.strata)
      strata.push_back(Json{{"name", s.name}, {"chi_l", s.chi_l}, {"chi_f", s.chi_f}, {"eu_X", s.eu_X},
                            {"contribution", (s.chi_l - s.chi_f) * s.eu_X}});
    emit(out, Json{{"command", "strata"},
                   {"status", pass ? "ok" : "check-failed"},
                   {"dimX", in.table.dimX},
                   {"strata", strata},
                   {"eu_f", eu},
                   {"checks", checks}});
  } else {
    for (const auto& s : in.table.strata)
      out << "stratum " << s.name << ": (" << s.chi_l << " - " << s.chi_f << ") * " << s.eu_X << " = "
          << (s.chi_l - s.chi_f) * s.eu_X << '\n';
    out << "Eu_f = " << eu << '\n';
    for (const auto& c : checks) out << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] " << c["name"].get<std::string>() << '\n';
  }
  if (!pass) {
    err << "error kind=consistency exit=4 reason=\"stratified value does not match the expected value\"\n";
    return mismatch;
  }
  return ok;
}

inline int cmd_oracle_curve(const Options& o, std::ostream& out, std::ostream& err) {
  const MonomialCurve curve{o.p, o.q};
  curve.check();
  const VarTable vars{"x", "y"};
  const Polynomial f = parse(o.f, vars);
  Context ctx(sampling_from(o));
  const MorseCheck r = verify_morse_count(curve, f, ctx);
  const int code = !r.draws_agree ? genericity : (r.pass ? ok : mismatch);
  if (o.json) {
    Json counts = Json::array();
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      counts.push_back(Json{{"perturbation", to_json(r.perturbations[i], vars)},
                            {"count", r.counts[i].count},
                            {"order_at_zero", r.counts[i].order_at_zero},
                            {"order_generic", r.counts[i].order_generic},
                            {"simple", r.counts[i].simple}});
    Json doc{{"command", "oracle-curve"},
             {"status", code == ok ? "ok" : "check-failed"},
             {"input", {{"p", o.p}, {"q", o.q}, {"f", o.f}, {"seed", ctx.sampling().seed}}},
             {"defining", format(curve.defining_equation(), vars)},
             {"draws", counts},
             {"morse_count", r.morse_points},
             {"draws_agree", r.draws_agree},
             {"all_simple", r.all_simple},
             {"eu_f", r.invariants.euF},
             {"pass", r.pass}};
    doc["report"] = to_json(r.invariants, vars);
    emit(out, doc);
  } else {
    out << "curve        " << format(curve.defining_equation(), vars) << " = 0, t -> (t^" << o.q << ", t^" << o.p
        << ")\n";
    out << "f            " << format(f, vars) << '\n';
    out << "morse_count  " << r.morse_points << (r.draws_agree ? "" : " (draws disagree)")
        << (r.all_simple ? "" : " (non-simple small roots)") << '\n';
    out << "Eu_f         " << r.invariants.euF << '\n';
    out << "verdict      " << (r.pass ? "pass" : "fail") << '\n';
  }
  if (code == genericity) err << "error kind=genericity exit=3 reason=\"perturbation draws disagree\"\n";
  if (code == mismatch) err << "error kind=consistency exit=4 reason=\"Morse count differs from -Eu_f\"\n";
  return code;
}

}  // namespace detail

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor numbers, GSV indices and Euler obstructions of ICIS germs"};
  app.require_subcommand(1);
  Options o;

  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed for generic linear forms");
    sub->add_option("--samples", o.samples, "number of sampled linear forms")->check(CLI::PositiveNumber);
    sub->add_option("--bound", o.bound, "coefficient bound for sampled forms")->check(CLI::PositiveNumber);
  };

  auto* mu = app.add_subcommand("mu", "Milnor number of a hypersurface germ");
  mu->add_option("--f", o.f, "polynomial expression")->required();
  mu->add_option("--vars", o.vars, "comma-separated variable names")->required();
  mu->add_flag("--json", o.json, "structured output");

  auto* eu = app.add_subcommand("eu", "invariant tower and Euler obstruction of a germ file");
  eu->add_option("--input", o.input, "germ file")->required();
  eu->add_flag("--json", o.json, "structured output");
  add_sampling(eu);

  auto* strata = app.add_subcommand("strata", "stratified Euler obstruction from a strata file");
  strata->add_option("--input", o.input, "strata file")->required();
  strata->add_flag("--json", o.json, "structured output");

  auto* oracle = app.add_subcommand("oracle-curve", "Morse point count on x^p = y^q against Eu_f");
  oracle->add_option("--p", o.p, "smaller exponent")->required();
  oracle->add_option("--q", o.q, "larger exponent")->required();
  oracle->add_option("--f", o.f, "function in x, y")->required();
  oracle->add_flag("--json", o.json, "structured output");
  add_sampling(oracle);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error kind=usage exit=1 reason=\"" << detail::one_line(e.what()) << "\"\n";
    return malformed;
  }

  try {
    if (*mu) return detail::cmd_mu(o, out);
    if (*eu) return detail::cmd_eu(o, out, err);
    if (*strata) return detail::cmd_strata(o, out, err);
    return detail::cmd_oracle_curve(o, out, err);
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (o.json)
      detail::emit(out, Json{{"status", "error"}, {"kind", to_string(e.kind())}, {"exit_code", code}, {"reason", e.what()}});
    err << "error kind=" << to_string(e.kind()) << " exit=" << code << " reason=\"" << detail::one_line(e.what()) << "\"\n";
    return code;
  }
}

}  // namespace milnor::cli
