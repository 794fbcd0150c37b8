// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "plucker/gaussian_rational.hpp"

namespace plucker {

namespace detail {

inline std::string strip_ws(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// cpp_int's string constructor reads a leading '0' as an octal prefix, so
// zero-padded decimals ("09") must be normalized first.
inline bigint bigint_from_digits(std::string_view digits) {
  size_t k = 0;
  while (k + 1 < digits.size() && digits[k] == '0') ++k;
  return bigint(std::string(digits.substr(k)));
}

// sign? digits ('/' digits)?  -- consumes the whole string.
inline rational parse_rational_strict(std::string_view s, std::string_view full) {
  size_t pos = 0;
  auto fail = [&]() -> rational {
    throw parse_error("malformed rational literal: \"" + std::string(full) + "\"");
  };
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  size_t num_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == num_start) return fail();
  bigint num = bigint_from_digits(s.substr(num_start, pos - num_start));
  bigint den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_start) return fail();
    den = bigint_from_digits(s.substr(den_start, pos - den_start));
    if (den == 0) throw parse_error("zero denominator in literal: \"" + std::string(full) + "\"");
  }
  if (pos != s.size()) return fail();
  if (neg) num = -num;
  return rational(num, den);
}

// sign? (rational '*')? 'i'  with the trailing 'i' already verified.
inline rational parse_imag_coeff(std::string_view s, std::string_view full) {
  // s excludes the trailing 'i'.
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  rational coeff(1);
  if (!s.empty()) {
    if (s.back() != '*')
      throw parse_error("malformed imaginary term in literal: \"" + std::string(full) + "\"");
    coeff = parse_rational_strict(s.substr(0, s.size() - 1), full);
  }
  return neg ? -coeff : coeff;
}

}  // namespace detail

// "a/b" with integers as shorthand; whitespace-insensitive.
inline rational parse_rational(std::string_view text) {
  const std::string s = detail::strip_ws(text);
  if (s.empty()) throw parse_error("empty rational literal");
  return detail::parse_rational_strict(s, text);
}

// sign? digits, whitespace-insensitive; leading zeros allowed.
inline bigint parse_bigint(std::string_view text) {
  const std::string s = detail::strip_ws(text);
  size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  const size_t digit_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digit_start || pos != s.size())
    throw parse_error("\"" + std::string(text) + "\" is not an integer");
  bigint value = detail::bigint_from_digits(std::string_view(s).substr(digit_start));
  return neg ? bigint(-value) : value;
}

// "a/b", "a/b+c/d*i", "a/b-c/d*i"; integers as shorthand; a bare "i" or
// "c/d*i" is accepted for purely imaginary values.  Whitespace-insensitive.
inline gaussian_rational parse_gaussian(std::string_view text) {
  const std::string s = detail::strip_ws(text);
  if (s.empty()) throw parse_error("empty scalar literal");
  if (s.back() != 'i') return gaussian_rational(detail::parse_rational_strict(s, text));

  std::string_view body(s);
  body.remove_suffix(1);  // drop 'i'
  // A sign past position 0 separates the real part from the imaginary term;
  // rational literals carry signs only at their front.
  size_t split = std::string_view::npos;
  for (size_t j = body.size(); j-- > 1;) {
    if (body[j] == '+' || body[j] == '-') {
      split = j;
      break;
    }
  }
  if (split == std::string_view::npos)
    return gaussian_rational(rational(0), detail::parse_imag_coeff(body, text));
  rational re = detail::parse_rational_strict(body.substr(0, split), text);
  rational im = detail::parse_imag_coeff(body.substr(split), text);
  return gaussian_rational(std::move(re), std::move(im));
}

}  // namespace plucker
