#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milnor {

enum class ErrorKind {
  dimension,       // mismatched variable counts
  empty_input,     // zero polynomial / empty list where a value is required
  index_range,     // variable index out of range
  parse,           // malformed expression or file
  invalid_input,   // well-formed but violating a precondition
  resource_limit,  // configured bound exceeded
  inconclusive,    // oracle did not stabilize
  non_isolated,    // infinite colength where an isolated singularity is required
  non_icis,        // germ is not an isolated complete intersection
  genericity,      // no sampled linear form / perturbation was usable
  consistency,     // two independent computations disagree
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::index_range: return "index-range";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::non_isolated: return "non-isolated";
    case ErrorKind::non_icis: return "non-icis";
    case ErrorKind::genericity: return "genericity";
    case ErrorKind::consistency: return "consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace milnor
