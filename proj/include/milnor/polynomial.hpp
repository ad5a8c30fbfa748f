#pragma once

// Exact sparse multivariate polynomials over Q with a fixed local
// (negative-degree) monomial ordering.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "milnor/error.hpp"

namespace milnor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_.at(i) = power;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Index of the only variable with positive exponent, or nvars() otherwise.
  std::size_t pure_power_variable() const {
    std::size_t found = exps_.size();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (found != exps_.size()) return exps_.size();
      found = i;
    }
    return found;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Negative-degree ordering: lower total degree is greater, so 1 is the
/// largest monomial. Equal degrees are compared lexicographically starting
/// from the last variable (larger exponent wins).
struct LocalOrder {
  /// -1, 0, 1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool operator()(const Monomial& a, const Monomial& b) const { return greater(a, b); }
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
    std::map<Monomial, Rational, LocalOrder> acc;
    for (auto& [m, c] : terms) {
      if (m.nvars() != nvars)
        throw Error(ErrorKind::dimension, "monomial length does not match variable count");
      acc[std::move(m)] += c;
    }
    assign(acc);
  }

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw Error(ErrorKind::index_range, "variable index out of range");
    Polynomial p(nvars);
    p.terms_.emplace_back(Monomial::variable(nvars, i), Rational(1));
    return p;
  }
  static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Terms in decreasing local order; the leading term comes first.
  const std::vector<Term>& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return 0;
  }
  Rational constant_term() const {
    if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
    return 0;
  }

  /// Highest total degree of a term; 0 for the zero polynomial.
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  /// Lowest total degree of a term (the order at the origin).
  std::uint64_t order() const {
    return terms_.empty() ? 0 : terms_.front().first.degree();
  }

  const Monomial& leading_monomial() const { return lead().first; }
  const Rational& leading_coefficient() const { return lead().second; }

  /// Difference between the total degree and the degree of the leading monomial.
  std::uint64_t ecart() const { return total_degree() - leading_monomial().degree(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    check_same(p, q);
    Polynomial r(p.nvars_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    LocalOrder ord;
    auto a = p.terms_.begin(), b = q.terms_.begin();
    while (a != p.terms_.end() || b != q.terms_.end()) {
      int cmp;
      if (a == p.terms_.end()) cmp = -1;
      else if (b == q.terms_.end()) cmp = 1;
      else cmp = ord.compare(a->first, b->first);
      if (cmp > 0) {
        r.terms_.push_back(*a++);
      } else if (cmp < 0) {
        r.terms_.push_back(*b++);
      } else {
        Rational c = a->second + b->second;
        if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    return r;
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_same(p, q);
    std::map<Monomial, Rational, LocalOrder> acc;
    for (const auto& [ma, ca] : p.terms_)
      for (const auto& [mb, cb] : q.terms_) acc[ma * mb] += ca * cb;
    Polynomial r(p.nvars_);
    r.assign(acc);
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.nvars_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  /// Multiplication by a monomial keeps the term order.
  friend Polynomial operator*(const Monomial& m, const Polynomial& p) {
    Polynomial r = p;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
  }

 private:
  const Term& lead() const {
    if (terms_.empty()) throw Error(ErrorKind::empty_input, "zero polynomial has no leading term");
    return terms_.front();
  }

  static void check_same(const Polynomial& p, const Polynomial& q) {
    if (p.nvars_ != q.nvars_)
      throw Error(ErrorKind::dimension, "polynomials live in rings with different variable counts");
  }

  void assign(std::map<Monomial, Rational, LocalOrder>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms_.emplace_back(m, std::move(c));
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial pow(const Polynomial& p, std::uint32_t e) {
  Polynomial r = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

/// Formal partial derivative with respect to variable i.
inline Polynomial partial(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw Error(ErrorKind::index_range, "partial: variable index out of range");
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    out.emplace_back(std::move(d), c * m[i]);
  }
  return Polynomial(p.nvars(), std::move(out));
}

inline std::pair<Monomial, Rational> leading_term(const Polynomial& p, LocalOrder = {}) {
  return {p.leading_monomial(), p.leading_coefficient()};
}

/// Replaces variable i by images[i]; all images share one target ring.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.nvars())
    throw Error(ErrorKind::dimension, "substitute: one image per variable required");
  if (images.empty()) return p;
  const std::size_t target = images.front().nvars();
  Polynomial r(target);
  std::vector<std::map<std::uint32_t, Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, pow(images[i], e)).first;
    return it->second;
  };
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] != 0) t *= power_of(i, m[i]);
    r += t;
  }
  return r;
}

/// Scales p to integer coefficients with content 1 and a positive leading
/// coefficient. Generates the same ideal as p.
inline Polynomial primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(t.second));
    num = boost::multiprecision::gcd(num, boost::multiprecision::numerator(t.second));
  }
  Rational scale(den, num);
  if (p.leading_coefficient() < 0) scale = -scale;
  return scale * p;
}

}  // namespace milnor
