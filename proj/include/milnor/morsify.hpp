#pragma once

// Morse point counting on plane monomial curves x^p = y^q, parametrized by
// t -> (t^q, t^p). A perturbation f + lambda*l is pulled back to the
// t-line; critical points on X_reg that tend to the origin as lambda -> 0
// are counted by comparing t-adic orders of the derivative at lambda = 0
// and at generic lambda.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/invariants.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

struct MonomialCurve {
  int p = 2;
  int q = 3;

  void check() const {
    if (p < 2 || q <= p) throw Error(ErrorKind::invalid_input, "monomial curve needs 2 <= p < q");
    if (std::gcd(p, q) != 1) throw Error(ErrorKind::invalid_input, "monomial curve needs gcd(p, q) = 1");
  }

  /// x^p - y^q in variables (x, y).
  Polynomial defining_equation() const {
    check();
    return pow(Polynomial::variable(2, 0), p) - pow(Polynomial::variable(2, 1), q);
  }
};

/// f(t^q, t^p) as a polynomial in the single variable t.
inline Polynomial pullback(const MonomialCurve& C, const Polynomial& f) {
  C.check();
  if (f.nvars() != 2) throw Error(ErrorKind::dimension, "curve functions live in the variables (x, y)");
  const Polynomial t = Polynomial::variable(1, 0);
  return substitute(f, {pow(t, C.q), pow(t, C.p)});
}

struct MorseCount {
  std::size_t count = 0;
  std::uint64_t order_at_zero = 0;  // ord_t of d/dt F at lambda = 0
  std::uint64_t order_generic = 0;  // ord_t of d/dt F_lambda over Q(lambda)
  bool simple = true;               // deflated derivative is squarefree over Q(lambda)
};

namespace detail {

using Dense = std::vector<Rational>;  // coefficient of t^i at index i

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense derivative(const Dense& a) {
  Dense d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<int>(i));
  trim(d);
  return d;
}

inline Dense remainder(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

inline std::size_t gcd_degree(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

/// Squarefreeness over Q(lambda) of a polynomial in (t, lambda). Its
/// discriminant has lambda-degree at most (2n - 2) * d, so a specialization
/// with full t-degree that is squarefree certifies the generic case, and
/// failure at more than (2n - 1) * d + 1 points certifies the opposite.
inline bool squarefree_over_lambda(const Polynomial& D) {
  std::uint64_t n = 0, d = 0;
  for (const auto& [m, c] : D.terms()) {
    n = std::max<std::uint64_t>(n, m[0]);
    d = std::max<std::uint64_t>(d, m[1]);
  }
  if (n <= 1) return true;
  const std::uint64_t trials = (2 * n - 1) * d + 2;
  for (std::uint64_t v = 1; v <= trials; ++v) {
    Dense spec(n + 1);
    for (const auto& [m, c] : D.terms()) {
      Rational val = c;
      for (std::uint32_t k = 0; k < m[1]; ++k) val *= v;
      spec[m[0]] += val;
    }
    if (spec[n] == 0) continue;
    if (gcd_degree(spec, derivative(spec)) == 0) return true;
  }
  return false;
}

}  // namespace detail

/// F_lambda(t) = pullback(f) + lambda * pullback(l) in the variables (t, lambda).
inline Polynomial perturbed_pullback(const MonomialCurve& C, const Polynomial& f, const LinearForm& perturbation) {
  if (perturbation.coefficients.size() != 2)
    throw Error(ErrorKind::dimension, "curve perturbations are linear forms in (x, y)");
  const Polynomial F = pullback(C, f);
  const Polynomial L = pullback(C, perturbation.polynomial());
  if (L.is_zero()) throw Error(ErrorKind::invalid_input, "perturbation has zero pullback");
  const Polynomial t = Polynomial::variable(2, 0);
  const Polynomial lambda = Polynomial::variable(2, 1);
  return substitute(F, {t}) + lambda * substitute(L, {t});
}

/// Number of critical points of f + lambda*l on X_reg converging to the
/// origin, with multiplicity.
inline MorseCount morse_count(const MonomialCurve& C, const Polynomial& f, const LinearForm& perturbation) {
  if (f.constant_term() != 0) throw Error(ErrorKind::invalid_input, "function does not vanish at the origin");
  const Polynomial D = partial(perturbed_pullback(C, f, perturbation), 0);
  if (D.is_zero()) throw Error(ErrorKind::invalid_input, "perturbed derivative is identically zero");

  MorseCount out;
  bool seen_zero = false;
  out.order_generic = UINT64_MAX;
  for (const auto& [m, c] : D.terms()) {
    out.order_generic = std::min<std::uint64_t>(out.order_generic, m[0]);
    if (m[1] == 0) {
      out.order_at_zero = seen_zero ? std::min<std::uint64_t>(out.order_at_zero, m[0]) : m[0];
      seen_zero = true;
    }
  }
  if (!seen_zero)
    throw Error(ErrorKind::non_isolated, "derivative of the unperturbed pullback is identically zero");
  out.count = static_cast<std::size_t>(out.order_at_zero - out.order_generic);

  std::vector<Polynomial::Term> shifted;
  for (const auto& [m, c] : D.terms()) {
    Monomial s = m;
    s[0] -= static_cast<std::uint32_t>(out.order_generic);
    shifted.emplace_back(std::move(s), c);
  }
  out.simple = detail::squarefree_over_lambda(Polynomial(2, std::move(shifted)));
  return out;
}

struct MorseCheck {
  MonomialCurve curve;
  std::vector<LinearForm> perturbations;
  std::vector<MorseCount> counts;
  bool draws_agree = true;
  bool all_simple = true;
  std::size_t morse_points = 0;  // the common count when draws agree
  InvariantReport invariants;
  bool pass = false;
};

/// Compares the Morse point count over several perturbation draws with
/// (-1)^dim X * Eu_f from the Milnor-number route, dim X = 1.
inline MorseCheck verify_morse_count(const MonomialCurve& C, const Polynomial& f, Context& ctx, int draws = 5) {
  C.check();
  MorseCheck r;
  r.curve = C;
  if (draws < 1) throw Error(ErrorKind::invalid_input, "at least one perturbation draw is required");
  for (int i = 0; i < draws; ++i) r.perturbations.push_back(ctx.draw_full_support_form(2));
  for (const auto& l : r.perturbations) r.counts.push_back(morse_count(C, f, l));
  r.morse_points = r.counts.front().count;
  for (const auto& c : r.counts) {
    if (c.count != r.morse_points) r.draws_agree = false;
    if (!c.simple) r.all_simple = false;
  }
  GermSpec germ{2, {C.defining_equation()}, f};
  r.invariants = euler_obstruction(germ, ctx);
  r.pass = r.draws_agree && static_cast<std::int64_t>(r.morse_points) == -r.invariants.euF;
  return r;
}

}  // namespace milnor
