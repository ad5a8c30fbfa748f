#pragma once

// Mora standard bases in the local ring at the origin and colengths of
// zero-dimensional ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

/// Ideal of the local ring given by polynomial generators.
class IdealSpec {
 public:
  IdealSpec() = default;
  IdealSpec(std::size_t nvars, std::vector<Polynomial> generators)
      : nvars_(nvars), generators_(std::move(generators)) {
    if (generators_.empty()) throw Error(ErrorKind::empty_input, "ideal needs at least one generator");
    for (const auto& g : generators_)
      if (g.nvars() != nvars_)
        throw Error(ErrorKind::dimension, "ideal generator has the wrong variable count");
  }
  explicit IdealSpec(std::vector<Polynomial> generators)
      : IdealSpec(generators.empty() ? 0 : generators.front().nvars(), std::move(generators)) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// True when some generator is a unit of the local ring.
  bool has_unit_generator() const {
    for (const auto& g : generators_)
      if (g.constant_term() != 0) return true;
    return false;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Polynomial> generators_;
};

/// A natural number or infinity.
class Colength {
 public:
  constexpr Colength() = default;
  constexpr explicit Colength(std::size_t v) : value_(v) {}
  static constexpr Colength infinite() { return Colength(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw Error(ErrorKind::non_isolated, "colength is infinite");
    return *value_;
  }
  std::string str() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend constexpr bool operator==(const Colength&, const Colength&) = default;

 private:
  std::optional<std::size_t> value_;
};

struct StandardBasis {
  std::vector<Polynomial> basis;
  /// Minimal generators of the leading ideal, in decreasing local order.
  std::vector<Monomial> staircase;
  bool zero_dimensional = false;
  bool unit = false;
};

struct StdBasisLimits {
  std::size_t max_pairs = 100000;
  std::size_t max_standard_monomials = 1000000;
};

namespace detail {

/// c_g * h - c_h * (lm(h)/lm(g)) * g, made primitive. Requires lm(g) | lm(h).
inline Polynomial reduce_step(const Polynomial& h, const Polynomial& g) {
  const Monomial shift = h.leading_monomial() / g.leading_monomial();
  Polynomial r = g.leading_coefficient() * h - h.leading_coefficient() * (shift * g);
  return primitive(r);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial r = g.leading_coefficient() * ((l / f.leading_monomial()) * f) -
                 f.leading_coefficient() * ((l / g.leading_monomial()) * g);
  return primitive(r);
}

inline void check_ring(std::size_t nvars, std::span<const Polynomial> polys) {
  for (const auto& g : polys)
    if (g.nvars() != nvars) throw Error(ErrorKind::dimension, "normal form: variable count mismatch");
}

}  // namespace detail

/// Mora weak normal form of p with respect to G.
///
/// The result r satisfies u*p - r in <G> for a unit u of the local ring,
/// and either r = 0 or its leading monomial is divisible by no leading
/// monomial of G. Reducers are chosen with minimal ecart (earliest wins on
/// ties); the intermediate remainder is appended to the reducer set when it
/// has smaller ecart than the chosen reducer.
inline Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, LocalOrder = {}) {
  if (G.empty()) throw Error(ErrorKind::empty_input, "normal form needs a nonempty reducer list");
  detail::check_ring(p.nvars(), G);

  struct Reducer {
    Polynomial poly;
    std::uint64_t ecart;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(G.size() + 8);
  for (const auto& g : G)
    if (!g.is_zero()) reducers.push_back({g, g.ecart()});

  Polynomial h = primitive(p);
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    std::size_t best = reducers.size();
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!reducers[i].poly.leading_monomial().divides(lm)) continue;
      if (best == reducers.size() || reducers[i].ecart < reducers[best].ecart) best = i;
    }
    if (best == reducers.size()) break;
    const std::uint64_t eh = h.ecart();
    Polynomial g = reducers[best].poly;
    if (reducers[best].ecart > eh) reducers.push_back({h, eh});
    h = detail::reduce_step(h, g);
  }
  return h;
}

/// Counts monomials divisible by no element of the staircase, or infinity if
/// some variable has no pure power in it.
inline Colength count_standard_monomials(const std::vector<Monomial>& staircase, std::size_t nvars,
                                         std::size_t limit = StdBasisLimits{}.max_standard_monomials) {
  std::vector<bool> bounded(nvars, false);
  for (const auto& m : staircase) {
    if (m.is_one()) return Colength(0);
    const std::size_t v = m.pure_power_variable();
    if (v < nvars) bounded[v] = true;
  }
  for (bool b : bounded)
    if (!b) return Colength::infinite();

  std::size_t count = 0;
  Monomial cur(nvars);
  auto under = [&](const Monomial& m) {
    for (const auto& s : staircase)
      if (s.divides(m)) return false;
    return true;
  };
  // Each monomial is reached once by multiplying variables in nondecreasing
  // index order; a multiple of a leading monomial is never standard.
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (!under(cur)) return;
    if (++count > limit)
      throw Error(ErrorKind::resource_limit,
                  "standard monomial count exceeds " + std::to_string(limit));
    for (std::size_t v = from; v < nvars; ++v) {
      cur[v] += 1;
      self(self, v);
      cur[v] -= 1;
    }
  };
  visit(visit, 0);
  return Colength(count);
}

/// Mora's standard basis algorithm: pairs are processed by increasing degree
/// of the lcm of their leading monomials, each S-polynomial reduced with
/// normal_form().
inline StandardBasis standard_basis(const IdealSpec& ideal, LocalOrder ord = {},
                                    const StdBasisLimits& limits = {}) {
  const std::size_t n = ideal.nvars();
  StandardBasis out;
  auto unit_result = [&] {
    out.basis = {Polynomial::constant(n, 1)};
    out.staircase = {Monomial(n)};
    out.zero_dimensional = true;
    out.unit = true;
    return out;
  };

  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    if (g.constant_term() != 0) return unit_result();
    basis.push_back(primitive(g));
  }

  using Pair = std::tuple<std::uint64_t, std::size_t, std::size_t, std::size_t>;  // deg, seq, i, j
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  std::size_t seq = 0;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto d = lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
      pairs.emplace(d, seq++, i, j);
      if (seq > limits.max_pairs)
        throw Error(ErrorKind::resource_limit,
                    "standard basis: pair queue exceeds " + std::to_string(limits.max_pairs));
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  while (!pairs.empty()) {
    const auto [deg, s, i, j] = pairs.top();
    pairs.pop();
    Polynomial h = normal_form(detail::s_polynomial(basis[i], basis[j]), basis, ord);
    if (h.is_zero()) continue;
    if (h.constant_term() != 0) return unit_result();
    basis.push_back(std::move(h));
    push_pairs_with(basis.size() - 1);
  }

  // Keep only elements whose leading monomials are minimal; they still form
  // a standard basis of the same ideal.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) {
      out.basis.push_back(basis[i]);
      out.staircase.push_back(mi);
    }
  }
  std::vector<std::size_t> idx(out.basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ord.greater(out.staircase[a], out.staircase[b]);
  });
  std::vector<Polynomial> sorted_basis;
  std::vector<Monomial> sorted_stairs;
  for (auto k : idx) {
    sorted_basis.push_back(std::move(out.basis[k]));
    sorted_stairs.push_back(std::move(out.staircase[k]));
  }
  out.basis = std::move(sorted_basis);
  out.staircase = std::move(sorted_stairs);

  std::vector<bool> has_power(n, false);
  for (const auto& m : out.staircase) {
    const std::size_t v = m.pure_power_variable();
    if (v < n) has_power[v] = true;
  }
  out.zero_dimensional = std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
  return out;
}

/// Vector-space dimension of the local ring modulo the ideal.
inline Colength colength(const IdealSpec& ideal, const StdBasisLimits& limits = {}) {
  if (ideal.has_unit_generator()) return Colength(0);
  const StandardBasis sb = standard_basis(ideal, LocalOrder{}, limits);
  if (sb.unit) return Colength(0);
  if (!sb.zero_dimensional) return Colength::infinite();
  return count_standard_monomials(sb.staircase, ideal.nvars(), limits.max_standard_monomials);
}

}  // namespace milnor
