#pragma once

// Milnor numbers of ICIS germs and of functions on them, the GSV index
// (virtual multiplicity), and the local Euler obstruction of a function.
//
// Milnor numbers of ICIS are computed by iterated Le-Greuel slicing:
//   mu(X) + mu(X cap {l = 0}) = colength <g, maximal minors of Jac(g, l)>,
// ending at a zero-dimensional complete intersection, whose Milnor number
// is its colength minus one.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/parser.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/standard_basis.hpp"

namespace milnor {

/// Embedded germ (X, 0) = {g_1 = ... = g_p = 0} in C^N with a function f.
/// An empty defining list means X = C^N.
struct GermSpec {
  std::size_t nvars = 0;
  std::vector<Polynomial> defining;
  Polynomial function;

  std::size_t codim() const { return defining.size(); }
  int dim() const { return static_cast<int>(nvars) - static_cast<int>(defining.size()); }

  GermSpec with_function(Polynomial f) const {
    GermSpec g = *this;
    g.function = std::move(f);
    return g;
  }

  void check() const {
    if (nvars == 0) throw Error(ErrorKind::invalid_input, "germ needs at least one ambient variable");
    if (defining.size() >= nvars)
      throw Error(ErrorKind::non_icis, "germ has " + std::to_string(defining.size()) +
                                           " equations in " + std::to_string(nvars) + " variables");
    for (const auto& g : defining) {
      if (g.nvars() != nvars) throw Error(ErrorKind::dimension, "defining equation has the wrong variable count");
      if (g.constant_term() != 0)
        throw Error(ErrorKind::invalid_input, "defining equation does not vanish at the origin");
    }
    if (function.nvars() != nvars) throw Error(ErrorKind::dimension, "function has the wrong variable count");
    if (function.constant_term() != 0)
      throw Error(ErrorKind::invalid_input, "function does not vanish at the origin");
  }
};

struct LinearForm {
  std::vector<std::int64_t> coefficients;

  bool is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](auto c) { return c == 0; });
  }
  Polynomial polynomial() const {
    const std::size_t n = coefficients.size();
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coefficients[i] != 0) p += Rational(coefficients[i]) * Polynomial::variable(n, i);
    return p;
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Seeded sampling parameters for generic linear forms.
struct Sampling {
  std::uint64_t seed = 0;
  int samples = 3;
  int bound = 7;
};

struct ColengthRecord {
  std::string label;
  IdealSpec ideal;
  Colength value;
};

/// Random source, colength memo and audit log for one computation.
class Context {
 public:
  explicit Context(Sampling s = {}) : sampling_(s), rng_(s.seed) {
    if (s.samples < 1) throw Error(ErrorKind::invalid_input, "samples must be at least 1");
    if (s.bound < 1) throw Error(ErrorKind::invalid_input, "bound must be at least 1");
  }

  const Sampling& sampling() const { return sampling_; }
  StdBasisLimits limits;

  /// Integer coefficients uniform in [-bound, bound], not all zero.
  LinearForm draw_form(std::size_t nvars) {
    LinearForm l{std::vector<std::int64_t>(nvars)};
    do {
      for (auto& c : l.coefficients) c = draw_coefficient();
    } while (l.is_zero());
    return l;
  }

  /// Integer coefficients in [-bound, bound] \ {0}.
  LinearForm draw_full_support_form(std::size_t nvars) {
    LinearForm l{std::vector<std::int64_t>(nvars)};
    for (auto& c : l.coefficients) {
      do c = draw_coefficient();
      while (c == 0);
    }
    return l;
  }

  /// Colength with memoization; the first computation of each generator
  /// list is appended to the log under the given label.
  Colength colength(const std::string& label, const IdealSpec& ideal) {
    std::string key = std::to_string(ideal.nvars());
    for (const auto& g : ideal.generators()) key += ';' + format(primitive(g), VarTable{});
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Colength c = milnor::colength(ideal, limits);
    memo_.emplace(std::move(key), c);
    log_.push_back({label, ideal, c});
    return c;
  }

  const std::vector<ColengthRecord>& log() const { return log_; }

 private:
  std::int64_t draw_coefficient() {
    const auto width = static_cast<std::uint64_t>(2 * sampling_.bound + 1);
    return static_cast<std::int64_t>(rng_() % width) - sampling_.bound;
  }

  Sampling sampling_;
  std::mt19937_64 rng_;
  std::map<std::string, Colength> memo_;
  std::vector<ColengthRecord> log_;
};

namespace detail {

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Polynomial det(m[0][0].nvars());
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(sub);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline std::vector<Polynomial> concat(std::vector<Polynomial> a, const Polynomial& b) {
  a.push_back(b);
  return a;
}

inline std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

/// All k x k minors of the Jacobian matrix of k polynomials in nvars
/// variables, columns chosen in lexicographic order.
inline std::vector<Polynomial> maximal_minors(const std::vector<Polynomial>& rows, std::size_t nvars) {
  const std::size_t k = rows.size();
  if (k == 0 || k > nvars) throw Error(ErrorKind::dimension, "maximal minors need 1 <= rows <= variables");
  std::vector<std::vector<Polynomial>> jac(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < nvars; ++c) jac[r].push_back(partial(rows[r], c));

  std::vector<Polynomial> minors;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  for (;;) {
    std::vector<std::vector<Polynomial>> sub(k);
    for (std::size_t r = 0; r < k; ++r)
      for (auto c : cols) sub[r].push_back(jac[r][c]);
    minors.push_back(detail::determinant(sub));
    std::size_t i = k;
    while (i-- > 0 && cols[i] == nvars - k + i) {}
    if (i == static_cast<std::size_t>(-1)) break;
    ++cols[i];
    for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return minors;
}

/// Milnor number of an isolated hypersurface singularity: the colength of
/// its Jacobian ideal. Returns 0 at smooth points.
inline std::size_t milnor_hypersurface(const Polynomial& h, std::size_t nvars, Context& ctx) {
  if (h.nvars() != nvars) throw Error(ErrorKind::dimension, "polynomial has the wrong variable count");
  if (h.is_zero()) throw Error(ErrorKind::empty_input, "Milnor number of the zero polynomial");
  if (h.constant_term() != 0) throw Error(ErrorKind::invalid_input, "polynomial does not vanish at the origin");
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < nvars; ++i) jac.push_back(partial(h, i));
  const Colength c = ctx.colength("jacobian ideal", IdealSpec(nvars, jac));
  if (!c.is_finite()) throw Error(ErrorKind::non_isolated, "non-isolated singularity: Jacobian ideal has infinite colength");
  return c.value();
}

inline std::size_t milnor_hypersurface(const Polynomial& h, std::size_t nvars) {
  Context ctx;
  return milnor_hypersurface(h, nvars, ctx);
}

/// One step of the slicing recursion.
struct SliceLevel {
  LinearForm form;
  std::size_t colength = 0;  // colength <current equations, maximal minors of Jac(current, form)>
};

/// Full slicing data behind milnor_icis().
struct IcisChain {
  std::vector<SliceLevel> levels;
  std::size_t base_colength = 0;  // colength of the final zero-dimensional complete intersection
  std::size_t mu = 0;
};

namespace detail {

inline std::size_t slice_tries(const Context& ctx) {
  return static_cast<std::size_t>(std::max(8, ctx.sampling().samples));
}

inline IcisChain icis_chain(const std::vector<Polynomial>& g, std::size_t nvars, Context& ctx) {
  const std::size_t p = g.size();
  if (p > nvars) throw Error(ErrorKind::non_icis, "more defining equations than variables");
  for (const auto& gi : g) {
    if (gi.nvars() != nvars) throw Error(ErrorKind::dimension, "defining equation has the wrong variable count");
    if (gi.constant_term() != 0)
      throw Error(ErrorKind::invalid_input, "defining equation does not vanish at the origin");
  }
  if (p >= 1 && p < nvars) {
    const Colength sing = ctx.colength("singular locus", IdealSpec(nvars, concat(g, maximal_minors(g, nvars))));
    if (!sing.is_finite())
      throw Error(ErrorKind::non_icis, "not an ICIS: non-isolated singular locus (slice level 0)");
  }

  IcisChain chain;
  std::vector<Polynomial> current = g;
  while (current.size() < nvars) {
    const std::size_t level = chain.levels.size();
    bool found = false;
    for (std::size_t t = 0; t < slice_tries(ctx) && !found; ++t) {
      LinearForm l = ctx.draw_form(nvars);
      const auto rows = concat(current, l.polynomial());
      const Colength c = ctx.colength("slice level " + std::to_string(level),
                                      IdealSpec(nvars, concat(current, maximal_minors(rows, nvars))));
      if (c.is_finite()) {
        chain.levels.push_back({std::move(l), c.value()});
        current.push_back(chain.levels.back().form.polynomial());
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorKind::genericity, "no linear form gave a finite colength at slice level " +
                                             std::to_string(level) + " after " +
                                             std::to_string(slice_tries(ctx)) + " samples");
  }

  const Colength base = ctx.colength("zero-dimensional slice", IdealSpec(nvars, current));
  if (!base.is_finite() || base.value() == 0)
    throw Error(ErrorKind::non_icis, "not an ICIS: zero-dimensional slice is not an isolated point (slice level " +
                                         std::to_string(chain.levels.size()) + ")");
  chain.base_colength = base.value();
  std::size_t mu = base.value() - 1;
  for (auto it = chain.levels.rbegin(); it != chain.levels.rend(); ++it) {
    if (it->colength < mu)
      throw Error(ErrorKind::consistency, "negative Milnor number in slicing recursion");
    mu = it->colength - mu;
  }
  chain.mu = mu;
  return chain;
}

}  // namespace detail

/// Throws non_icis (naming the failing slice level) unless g defines an ICIS
/// of positive dimension in C^N.
inline void validate_icis(const std::vector<Polynomial>& g, std::size_t nvars, Context& ctx) {
  if (g.size() >= nvars)
    throw Error(ErrorKind::non_icis, "not an ICIS of positive dimension: p >= N");
  detail::icis_chain(g, nvars, ctx);
}

/// Milnor number of the ICIS {g = 0}; zero-dimensional complete
/// intersections (p = N) are allowed and give colength - 1.
inline std::size_t milnor_icis(const std::vector<Polynomial>& g, std::size_t nvars, Context& ctx) {
  return detail::icis_chain(g, nvars, ctx).mu;
}

inline IcisChain milnor_icis_chain(const std::vector<Polynomial>& g, std::size_t nvars, Context& ctx) {
  return detail::icis_chain(g, nvars, ctx);
}

/// Colength of <g, (p+1)-minors of Jac(g, f)>; for p = 0 the Jacobian ideal of f.
inline Colength critical_colength(const GermSpec& G, Context& ctx, const std::string& label) {
  const auto rows = detail::concat(G.defining, G.function);
  return ctx.colength(label, IdealSpec(G.nvars, detail::concat(G.defining, maximal_minors(rows, G.nvars))));
}

/// Milnor number of f on X: the ICIS Milnor number of X cap {f = 0}.
inline std::size_t milnor_of_function(const GermSpec& G, Context& ctx) {
  G.check();
  if (G.function.is_zero()) throw Error(ErrorKind::non_isolated, "function vanishes identically");
  if (G.defining.empty()) return milnor_hypersurface(G.function, G.nvars, ctx);
  if (!critical_colength(G, ctx, "critical locus of f on X").is_finite())
    throw Error(ErrorKind::non_isolated, "f has a non-isolated singularity on X");
  try {
    return milnor_icis(detail::concat(G.defining, G.function), G.nvars, ctx);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::non_icis)
      throw Error(ErrorKind::non_isolated, std::string("f has a non-isolated singularity on X: ") + e.what());
    throw;
  }
}

struct GenericSample {
  LinearForm form;
  std::optional<std::size_t> mu;  // empty when the slice was not isolated
};

struct GenericChoice {
  std::vector<GenericSample> samples;
  std::size_t witness = 0;
  std::size_t mu = 0;
  /// All finite sampled values coincide.
  bool agree = true;

  const LinearForm& form() const { return samples.at(witness).form; }
};

/// Draws `samples` linear forms and keeps one attaining the minimal mu(l).
/// By upper semicontinuity the minimum is the generic value.
inline GenericChoice pick_generic(const GermSpec& G, Context& ctx) {
  GenericChoice out;
  for (int s = 0; s < ctx.sampling().samples; ++s) out.samples.push_back({ctx.draw_form(G.nvars), std::nullopt});
  bool found = false;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    auto& sample = out.samples[i];
    try {
      sample.mu = milnor_of_function(G.with_function(sample.form.polynomial()), ctx);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::non_isolated && e.kind() != ErrorKind::non_icis &&
          e.kind() != ErrorKind::genericity)
        throw;
      continue;
    }
    if (!found || *sample.mu < out.mu) {
      if (found) out.agree = false;
      out.mu = *sample.mu;
      out.witness = i;
      found = true;
    } else if (*sample.mu != out.mu) {
      out.agree = false;
    }
  }
  if (!found)
    throw Error(ErrorKind::genericity, "all " + std::to_string(out.samples.size()) +
                                           " sampled linear forms have non-isolated singularities on X");
  return out;
}

struct MuGPaths {
  std::size_t path_a = 0;  // mu(f) + mu(X)
  std::size_t path_b = 0;  // colength <g, (p+1)-minors of Jac(g, f)>
  bool agree() const { return path_a == path_b; }
};

/// Both routes to the GSV index, given mu(f) and mu(X) already computed.
inline MuGPaths mu_G_paths(const GermSpec& G, std::size_t mu_f, std::size_t mu_X, Context& ctx) {
  const Colength b = critical_colength(G, ctx, "critical locus of f on X");
  if (!b.is_finite()) throw Error(ErrorKind::non_isolated, "f has a non-isolated singularity on X");
  return {mu_f + mu_X, b.value()};
}

inline MuGPaths mu_G_paths(const GermSpec& G, Context& ctx) {
  G.check();
  const std::size_t mu_X = G.defining.empty() ? 0 : milnor_icis(G.defining, G.nvars, ctx);
  const std::size_t mu_f = milnor_of_function(G, ctx);
  return mu_G_paths(G, mu_f, mu_X, ctx);
}

/// GSV index of the gradient of f on X (virtual multiplicity). Throws
/// consistency when the two routes disagree.
inline std::size_t mu_G(const GermSpec& G, Context& ctx) {
  const MuGPaths paths = mu_G_paths(G, ctx);
  if (!paths.agree())
    throw Error(ErrorKind::consistency, "mu_G paths disagree: mu(f)+mu(X) = " + std::to_string(paths.path_a) +
                                            ", critical colength = " + std::to_string(paths.path_b));
  return paths.path_a;
}

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

struct InvariantReport {
  int dimX = 0;
  std::size_t muX = 0;
  std::size_t muF = 0;
  std::size_t muL = 0;
  MuGPaths muG_f;
  MuGPaths muG_l;
  std::int64_t euF = 0;           // (-1)^dim X (mu(f) - mu(l))
  std::int64_t euF_via_muG = 0;   // (-1)^dim X (mu_G(f) - mu_G(l)), critical-colength route
  std::int64_t alphaQ = 0;        // Morse points on X_reg: (-1)^dim X Eu_f
  GenericChoice genericity;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
};

/// Local Euler obstruction of f on an ICIS of positive dimension, with the
/// full tower of Milnor numbers and every identity relating them checked.
inline InvariantReport euler_obstruction(const GermSpec& G, Context& ctx) {
  G.check();
  if (G.dim() < 1) throw Error(ErrorKind::invalid_input, "Euler obstruction needs dim X >= 1");

  InvariantReport r;
  r.dimX = G.dim();
  r.muX = G.defining.empty() ? 0 : milnor_icis(G.defining, G.nvars, ctx);
  r.muF = milnor_of_function(G, ctx);
  r.genericity = pick_generic(G, ctx);
  r.muL = r.genericity.mu;
  r.muG_f = mu_G_paths(G, r.muF, r.muX, ctx);
  r.muG_l = mu_G_paths(G.with_function(r.genericity.form().polynomial()), r.muL, r.muX, ctx);

  const std::int64_t sign = (r.dimX % 2 == 0) ? 1 : -1;
  const auto s = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  r.euF = sign * (s(r.muF) - s(r.muL));
  r.euF_via_muG = sign * (s(r.muG_f.path_b) - s(r.muG_l.path_b));
  r.alphaQ = sign * r.euF;

  auto add = [&](std::string name, bool pass, std::string details) {
    r.checks.push_back({std::move(name), pass, std::move(details)});
  };
  add("mu_G(f) paths agree", r.muG_f.agree(),
      "mu(f)+mu(X) = " + std::to_string(r.muG_f.path_a) + ", critical colength = " + std::to_string(r.muG_f.path_b));
  add("mu_G(l) paths agree", r.muG_l.agree(),
      "mu(l)+mu(X) = " + std::to_string(r.muG_l.path_a) + ", critical colength = " + std::to_string(r.muG_l.path_b));
  add("Eu_f via mu equals Eu_f via mu_G", r.euF == r.euF_via_muG,
      std::to_string(r.euF) + " vs " + std::to_string(r.euF_via_muG));
  add("mu(f) >= (-1)^dim X * Eu_f", s(r.muF) >= sign * r.euF,
      std::to_string(r.muF) + " >= " + std::to_string(sign * r.euF));
  if (r.muX > 0) {
    add("strict inequality on singular X", s(r.muF) > sign * r.euF,
        std::to_string(r.muF) + " > " + std::to_string(sign * r.euF));
    add("mu(l) > 0 on singular X", r.muL > 0, "mu(l) = " + std::to_string(r.muL));
  } else {
    add("strict inequality on singular X", true, "not applicable: mu(X) = 0");
    add("mu(l) > 0 on singular X", true, "not applicable: mu(X) = 0");
  }
  add("alpha_q >= 0", r.alphaQ >= 0, "alpha_q = " + std::to_string(r.alphaQ));
  return r;
}

}  // namespace milnor
