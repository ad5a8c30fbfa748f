#pragma once

// Colength by truncated linear algebra. Shares nothing with the standard
// basis code beyond polynomial multiplication, so it serves as an
// independent check of colength().

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/standard_basis.hpp"

namespace milnor {

namespace detail {

inline void monomials_below(std::size_t nvars, std::uint32_t max_degree, std::vector<Monomial>& out) {
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t budget) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
      cur[var] = e;
      self(self, var + 1, budget - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, max_degree);
}

}  // namespace detail

/// dim_Q of Q[x]/(I + m^K), i.e. polynomials of degree < K modulo the
/// truncated multiples of the generators. Exact Gaussian elimination.
inline std::size_t truncated_colength(const IdealSpec& ideal, std::uint32_t K) {
  if (K == 0) return 0;
  const std::size_t n = ideal.nvars();
  std::vector<Monomial> basis;
  detail::monomials_below(n, K - 1, basis);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  using Row = std::map<std::size_t, Rational>;
  std::map<std::size_t, Row> pivots;  // pivot column -> row with leading entry 1

  auto insert = [&](Row row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto pv = pivots.find(lead->first);
      if (pv == pivots.end()) {
        const Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead->first, std::move(row));
        return;
      }
      const Rational factor = lead->second;
      for (const auto& [c, v] : pv->second) {
        auto& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
    }
  };

  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    const auto ord = g.order();
    if (ord >= K) continue;
    for (const auto& m : basis) {
      if (m.degree() + ord >= K) continue;
      Row row;
      for (const auto& [gm, c] : g.terms()) {
        const Monomial prod = gm * m;
        if (prod.degree() >= K) continue;
        row[column.at(prod)] += c;
      }
      for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
      insert(std::move(row));
    }
  }
  return basis.size() - pivots.size();
}

/// Increases the truncation degree from K until two consecutive values
/// agree. Equal values at K and K+1 force m^K into the ideal (Nakayama), so
/// the stabilized value is the colength.
inline std::size_t colength_oracle(const IdealSpec& ideal, std::uint32_t K, std::uint32_t K_max = 40) {
  if (K == 0) K = 1;
  std::size_t prev = truncated_colength(ideal, K);
  for (std::uint32_t k = K + 1; k <= K_max; ++k) {
    const std::size_t cur = truncated_colength(ideal, k);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw Error(ErrorKind::inconclusive,
              "colength oracle did not stabilize up to degree " + std::to_string(K_max));
}

}  // namespace milnor
