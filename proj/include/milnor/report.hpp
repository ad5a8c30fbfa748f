#pragma once

// Germ and strata file formats (JSON) and report rendering.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "milnor/error.hpp"
#include "milnor/invariants.hpp"
#include "milnor/morsify.hpp"
#include "milnor/parser.hpp"
#include "milnor/strata.hpp"

namespace milnor {

using Json = nlohmann::ordered_json;

struct GermInput {
  VarTable vars;
  std::vector<std::string> defining_src;
  std::string function_src;
  GermSpec germ;
  Sampling sampling;
};

struct StrataInput {
  StrataTable table;
  std::optional<std::int64_t> expected_eu;
  std::optional<std::int64_t> alpha_q;
};

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) {
  throw Error(ErrorKind::parse, "malformed file: " + what);
}

inline Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
}

inline std::int64_t get_int(const Json& obj, const char* key) {
  if (!obj.contains(key)) malformed(std::string("missing key '") + key + "'");
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) malformed(std::string("key '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

inline std::string get_string(const Json& obj, const char* key) {
  if (!obj.contains(key)) malformed(std::string("missing key '") + key + "'");
  const Json& v = obj.at(key);
  if (!v.is_string()) malformed(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

/// {"vars": ["x","y"] | "x,y", "defining": [...], "function": "...",
///  "seed": 0, "samples": 3, "bound": 7}
inline GermInput parse_germ_document(const std::string& text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object()) detail::malformed("germ document must be an object");
  GermInput in;
  if (!doc.contains("vars")) detail::malformed("missing key 'vars'");
  const Json& vars = doc.at("vars");
  if (vars.is_string()) {
    in.vars = VarTable::from_list(vars.get<std::string>());
  } else if (vars.is_array()) {
    std::vector<std::string> names;
    for (const auto& v : vars) {
      if (!v.is_string()) detail::malformed("'vars' entries must be strings");
      names.push_back(v.get<std::string>());
    }
    in.vars = VarTable(std::move(names));
  } else {
    detail::malformed("'vars' must be a list of names");
  }
  if (doc.contains("defining")) {
    if (!doc.at("defining").is_array()) detail::malformed("'defining' must be a list of expressions");
    for (const auto& e : doc.at("defining")) {
      if (!e.is_string()) detail::malformed("'defining' entries must be strings");
      in.defining_src.push_back(e.get<std::string>());
    }
  }
  in.function_src = detail::get_string(doc, "function");
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) detail::malformed("'seed' must be a nonnegative integer");
    in.sampling.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("samples")) in.sampling.samples = static_cast<int>(detail::get_int(doc, "samples"));
  if (doc.contains("bound")) in.sampling.bound = static_cast<int>(detail::get_int(doc, "bound"));

  in.germ.nvars = in.vars.size();
  for (const auto& s : in.defining_src) in.germ.defining.push_back(parse(s, in.vars));
  in.germ.function = parse(in.function_src, in.vars);
  return in;
}

/// {"dimX": 2, "strata": [{"name", "chi_l", "chi_f", "eu_X", "regular"?}],
///  "expected_eu"?, "alpha_q"?}
inline StrataInput parse_strata_document(const std::string& text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object()) detail::malformed("strata document must be an object");
  StrataInput in;
  in.table.dimX = static_cast<int>(detail::get_int(doc, "dimX"));
  if (in.table.dimX < 0) detail::malformed("'dimX' must be nonnegative");
  if (!doc.contains("strata") || !doc.at("strata").is_array()) detail::malformed("'strata' must be a list");
  for (const auto& s : doc.at("strata")) {
    if (!s.is_object()) detail::malformed("each stratum must be an object");
    StratumDatum d;
    d.name = detail::get_string(s, "name");
    d.chi_l = detail::get_int(s, "chi_l");
    d.chi_f = detail::get_int(s, "chi_f");
    d.eu_X = detail::get_int(s, "eu_X");
    if (s.contains("regular")) {
      if (!s.at("regular").is_boolean()) detail::malformed("'regular' must be a boolean");
      d.regular = s.at("regular").get<bool>();
    }
    in.table.strata.push_back(std::move(d));
  }
  if (in.table.strata.empty()) detail::malformed("'strata' must contain at least one stratum");
  try {
    in.table.check();
  } catch (const Error& e) {
    detail::malformed(e.what());
  }
  if (doc.contains("expected_eu")) in.expected_eu = detail::get_int(doc, "expected_eu");
  if (doc.contains("alpha_q")) {
    in.alpha_q = detail::get_int(doc, "alpha_q");
    if (*in.alpha_q < 0) detail::malformed("'alpha_q' must be nonnegative");
  }
  return in;
}

inline Json to_json(const LinearForm& l, const VarTable& vars) {
  return Json{{"coefficients", l.coefficients}, {"expr", format(l.polynomial(), vars)}};
}

inline Json colength_log_json(const Context& ctx, const VarTable& vars) {
  Json out = Json::array();
  for (const auto& rec : ctx.log()) {
    Json gens = Json::array();
    for (const auto& g : rec.ideal.generators()) gens.push_back(format(g, vars));
    Json value = rec.value.is_finite() ? Json(rec.value.value()) : Json("infinite");
    out.push_back(Json{{"label", rec.label}, {"generators", gens}, {"colength", value}});
  }
  return out;
}

inline Json to_json(const InvariantReport& r, const VarTable& vars) {
  Json samples = Json::array();
  for (const auto& s : r.genericity.samples) {
    Json entry = to_json(s.form, vars);
    entry["mu"] = s.mu ? Json(*s.mu) : Json("infinite");
    samples.push_back(entry);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  return Json{
      {"dimX", r.dimX},
      {"invariants",
       {{"mu_X", r.muX},
        {"mu_f", r.muF},
        {"mu_l", r.muL},
        {"mu_G_f", r.muG_f.path_a},
        {"mu_G_l", r.muG_l.path_a},
        {"eu_f", r.euF},
        {"eu_f_via_mu_G", r.euF_via_muG},
        {"alpha_q", r.alphaQ}}},
      {"mu_G_paths",
       {{"f", {{"path_a", r.muG_f.path_a}, {"path_b", r.muG_f.path_b}}},
        {"l", {{"path_a", r.muG_l.path_a}, {"path_b", r.muG_l.path_b}}}}},
      {"genericity",
       {{"samples", samples},
        {"witness", r.genericity.witness},
        {"generic_form", format(r.genericity.form().polynomial(), vars)},
        {"agree", r.genericity.agree}}},
      {"checks", checks},
      {"all_checks_pass", r.all_passed()},
  };
}

inline Json to_json(const GermInput& in) {
  return Json{{"vars", in.vars.names()},
              {"defining", in.defining_src},
              {"function", in.function_src},
              {"seed", in.sampling.seed},
              {"samples", in.sampling.samples},
              {"bound", in.sampling.bound}};
}

inline void render_text(std::ostream& out, const GermInput& in, const InvariantReport& r) {
  std::string X = "C^" + std::to_string(in.vars.size());
  if (!in.defining_src.empty()) {
    X = "{";
    for (std::size_t i = 0; i < in.germ.defining.size(); ++i)
      X += (i ? ", " : "") + format(in.germ.defining[i], in.vars) + " = 0";
    X += "}";
  }
  out << "germ              X = " << X << ", f = " << format(in.germ.function, in.vars) << '\n';
  out << "seed              " << in.sampling.seed << " (samples " << in.sampling.samples << ", bound "
      << in.sampling.bound << ")\n";
  out << "dim X             " << r.dimX << '\n';
  out << "mu(X)             " << r.muX << '\n';
  out << "mu(f)             " << r.muF << '\n';
  out << "mu(l)             " << r.muL << "   l = " << format(r.genericity.form().polynomial(), in.vars)
      << (r.genericity.agree ? "" : "   (samples disagree; minimum used)") << '\n';
  out << "mu_G(f)           " << r.muG_f.path_a << "   paths " << r.muG_f.path_a << " / " << r.muG_f.path_b << '\n';
  out << "mu_G(l)           " << r.muG_l.path_a << "   paths " << r.muG_l.path_a << " / " << r.muG_l.path_b << '\n';
  out << "Eu_f              " << r.euF << '\n';
  out << "Eu_f via mu_G     " << r.euF_via_muG << '\n';
  out << "alpha_q           " << r.alphaQ << '\n';
  out << "checks\n";
  for (const auto& c : r.checks)
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.details << '\n';
}

}  // namespace milnor
