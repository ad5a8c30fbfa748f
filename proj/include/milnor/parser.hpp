#pragma once

// Recursive-descent parser for polynomial expressions, plus the matching
// printer.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INT)?
//   primary := NUMBER ('/' NUMBER)? | IDENT | '(' expr ')'

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& msg)
      : Error(ErrorKind::parse, "parse error at column " + std::to_string(column) + ": " + msg),
        column_(column) {}

  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Ordered list of variable names; position i is exponent slot i.
class VarTable {
 public:
  VarTable() = default;
  VarTable(std::initializer_list<std::string> names) : VarTable(std::vector<std::string>(names)) {}
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
        throw Error(ErrorKind::invalid_input, "variable name must start with a letter: '" + n + "'");
      for (char ch : n)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
          throw Error(ErrorKind::invalid_input, "invalid character in variable name '" + n + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == n) throw Error(ErrorKind::invalid_input, "duplicate variable name '" + n + "'");
    }
  }

  /// Splits a comma-separated list such as "x,y,z".
  static VarTable from_list(std::string_view csv) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : csv) {
      if (ch == ',') {
        names.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    names.push_back(cur);
    return VarTable(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return names_.size();
  }

 private:
  std::vector<std::string> names_;
};

inline constexpr std::uint32_t kMaxExponent = 1u << 16;

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const VarTable& vars) : src_(src), vars_(vars) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == src_.size()) fail("empty input");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      if (src_[pos_] == ')') fail("unbalanced ')'");
      fail(std::string("unexpected character '") + src_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at + 1, msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() const {
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  Integer integer() {
    Integer v = 0;
    while (at_digit()) v = v * 10 + (src_[pos_++] - '0');
    return v;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') fail("malformed exponent: negative exponents are not allowed");
    if (!at_digit()) fail("malformed exponent: expected a nonnegative integer");
    Integer e = integer();
    if (pos_ < src_.size() && (src_[pos_] == '/' || src_[pos_] == '.'))
      fail("malformed exponent: expected a nonnegative integer");
    if (e > kMaxExponent) fail_at(at, "exponent overflow: exceeds 2^16");
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^')
      fail("'^' is non-associative; parenthesize towers");
    return pow(base, static_cast<std::uint32_t>(e));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ == src_.size()) fail("unexpected end of input");
    const char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = integer();
      Integer den = 1;
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        if (!at_digit()) fail("expected denominator after '/'");
        den = integer();
        if (den == 0) fail_at(at, "zero denominator");
      }
      return Polynomial::constant(vars_.size(), Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      const std::size_t idx = vars_.index_of(name);
      if (idx == vars_.size()) fail_at(start, "unknown identifier '" + std::string(name) + "'");
      return Polynomial::variable(vars_.size(), idx);
    }
    if (ch == '(') {
      const std::size_t open = pos_++;
      Polynomial inner = expr();
      if (!accept(')')) {
        skip_ws();
        if (pos_ == src_.size()) fail_at(open, "unbalanced '(': missing ')'");
        fail(std::string("expected ')' but found '") + src_[pos_] + "'");
      }
      return inner;
    }
    if (ch == ')') fail("unbalanced ')'");
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view src_;
  const VarTable& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses src into a polynomial in the variables of vars.
inline Polynomial parse(std::string_view src, const VarTable& vars) {
  return detail::ExprParser(src, vars).run();
}

/// Renders p in the grammar accepted by parse(), terms in local order.
inline std::string format(const Polynomial& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) out << '-';
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (a < 0) a = -a;
    bool wrote = false;
    if (a != 1 || m.is_one()) {
      out << a.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << '*';
      out << (i < vars.size() ? vars[i] : "x" + std::to_string(i));
      if (m[i] > 1) out << '^' << m[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace milnor
