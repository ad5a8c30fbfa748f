#pragma once

// Euler obstruction of a function from stratification data: the weighted
// sum over strata W_i of [chi(M(l) cap W_i) - chi(M(f) cap W_i)] * Eu_X(W_i).

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "milnor/error.hpp"

namespace milnor {

struct StratumDatum {
  std::string name;
  std::int64_t chi_l = 0;  // Euler characteristic of the generic-form Milnor fiber on the stratum
  std::int64_t chi_f = 0;  // Euler characteristic of the Milnor fiber of f on the stratum
  std::int64_t eu_X = 0;   // Euler obstruction of X along the stratum
  bool regular = false;    // top stratum X_reg
};

struct StrataTable {
  std::vector<StratumDatum> strata;
  int dimX = 0;

  void check() const {
    if (strata.empty()) throw Error(ErrorKind::invalid_input, "strata table needs at least one stratum");
    if (dimX < 0) throw Error(ErrorKind::invalid_input, "dimX must be nonnegative");
    std::set<std::string> names;
    for (const auto& s : strata) {
      if (!names.insert(s.name).second)
        throw Error(ErrorKind::invalid_input, "duplicate stratum name '" + s.name + "'");
      if (s.regular && s.eu_X != 1)
        throw Error(ErrorKind::invalid_input, "regular stratum '" + s.name + "' must have eu_X = 1");
    }
  }
};

inline std::int64_t stratified_euler_obstruction(const StrataTable& T) {
  T.check();
  std::int64_t sum = 0;
  for (const auto& s : T.strata) sum += (s.chi_l - s.chi_f) * s.eu_X;
  return sum;
}

/// True iff the stratified sum equals (-1)^dim X * alpha_q.
inline bool cross_check_alpha(const StrataTable& T, std::int64_t alphaQ) {
  const std::int64_t sign = (T.dimX % 2 == 0) ? 1 : -1;
  return stratified_euler_obstruction(T) == sign * alphaQ;
}

}  // namespace milnor
