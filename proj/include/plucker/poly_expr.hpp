// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "plucker/literals.hpp"
#include "plucker/polynomial.hpp"

namespace plucker {

namespace detail {

// Recursive-descent parser for polynomial expressions in z with Gaussian
// integer coefficients: "z^3", "1+2*z", "(z+1)*(z-i)".  Division is not an
// operator here; in self-map arguments '/' separates numerator from
// denominator, and rational coefficients can always be cleared projectively.
class poly_expr_parser {
 public:
  explicit poly_expr_parser(std::string_view text) : full_(text), s_(strip_ws(text)) {}

  polynomial parse() {
    polynomial p = expr();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  polynomial expr() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = next() == '-';
    polynomial acc = term();
    if (neg) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = next() == '-';
      polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  polynomial term() {
    polynomial acc = factor();
    while (peek() == '*') {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  polynomial factor() {
    polynomial base = atom();
    if (peek() == '^') {
      next();
      int e = integer("exponent");
      if (e > max_exponent) fail("exponent exceeds " + std::to_string(max_exponent));
      polynomial acc = polynomial::constant(1);
      while (e > 0) {  // square-and-multiply
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
      }
      base = acc;
    }
    return base;
  }

  polynomial atom() {
    const char c = peek();
    if (c == '(') {
      next();
      polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      next();
      return p;
    }
    if (c == 'z') {
      next();
      return polynomial::z();
    }
    if (c == 'i') {
      next();
      return polynomial::constant(gaussian_rational::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return polynomial::constant(gaussian_rational(rational(bigint_from_digits(digits()))));
    fail("expected coefficient, 'z', 'i' or '('");
    return {};
  }

  static constexpr int max_exponent = 512;

  int integer(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    const std::string text = digits();
    try {
      return std::stoi(text);
    } catch (const std::out_of_range&) {
      fail(std::string(what) + " \"" + text + "\" out of range");
    }
  }

  std::string digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char next() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("malformed polynomial expression \"" + std::string(full_) + "\" at offset " +
                      std::to_string(pos_) + ": " + why);
  }

  std::string_view full_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline polynomial parse_polynomial_expr(std::string_view text) {
  return detail::poly_expr_parser(text).parse();
}

// "NUM" or "NUM/DEN" where both sides are polynomial expressions; the single
// top-level '/' is the separator.
inline std::pair<polynomial, polynomial> parse_self_map_expr(std::string_view text) {
  const std::string s = detail::strip_ws(text);
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '(') ++depth;
    else if (s[j] == ')') --depth;
    else if (s[j] == '/' && depth == 0) {
      if (slash != std::string::npos)
        throw parse_error("self-map \"" + std::string(text) + "\" has more than one top-level '/'");
      slash = j;
    }
  }
  if (slash == std::string::npos) return {parse_polynomial_expr(s), polynomial::constant(1)};
  return {parse_polynomial_expr(s.substr(0, slash)), parse_polynomial_expr(s.substr(slash + 1))};
}

}  // namespace plucker
