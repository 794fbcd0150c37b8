// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "plucker/gaussian_rational.hpp"

namespace plucker {

// Univariate polynomial over Q(i), coefficients stored by ascending power of
// z.  Canonical form: the highest stored coefficient is nonzero, the zero
// polynomial stores nothing.  The degree of the zero polynomial is not an
// integer; degree() reports it as std::nullopt.
class polynomial {
 public:
  polynomial() = default;

  explicit polynomial(std::vector<gaussian_rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  polynomial(std::initializer_list<gaussian_rational> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static polynomial zero() { return polynomial(); }
  static polynomial constant(gaussian_rational c) { return polynomial({std::move(c)}); }
  // c * z^e
  static polynomial term(gaussian_rational c, int exponent) {
    if (c.is_zero()) return polynomial();
    std::vector<gaussian_rational> v(static_cast<size_t>(exponent) + 1);
    v.back() = std::move(c);
    return polynomial(std::move(v));
  }
  static polynomial z() { return term(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }
  // Degree with an explicit stand-in for the zero polynomial; callers own the
  // convention they pass.
  int degree_or(int if_zero) const { return coeffs_.empty() ? if_zero : degree().value(); }

  const std::vector<gaussian_rational>& coefficients() const { return coeffs_; }

  // Coefficient of z^k, zero outside the stored range.
  gaussian_rational coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return gaussian_rational();
    return coeffs_[static_cast<size_t>(k)];
  }

  gaussian_rational leading() const {
    return coeffs_.empty() ? gaussian_rational() : coeffs_.back();
  }

  friend polynomial operator+(const polynomial& p, const polynomial& q) {
    std::vector<gaussian_rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return polynomial(std::move(v));
  }
  friend polynomial operator-(const polynomial& p, const polynomial& q) { return p + (-q); }
  friend polynomial operator-(const polynomial& p) {
    std::vector<gaussian_rational> v(p.coeffs_.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = -p.coeffs_[k];
    return polynomial(std::move(v));
  }
  friend polynomial operator*(const polynomial& p, const polynomial& q) {
    if (p.is_zero() || q.is_zero()) return polynomial();
    std::vector<gaussian_rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t a = 0; a < p.coeffs_.size(); ++a)
      for (size_t b = 0; b < q.coeffs_.size(); ++b) v[a + b] += p.coeffs_[a] * q.coeffs_[b];
    return polynomial(std::move(v));
  }
  friend polynomial operator*(const gaussian_rational& c, const polynomial& p) {
    if (c.is_zero()) return polynomial();
    std::vector<gaussian_rational> v(p.coeffs_.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = c * p.coeffs_[k];
    return polynomial(std::move(v));
  }
  friend polynomial operator*(const polynomial& p, const gaussian_rational& c) { return c * p; }

  polynomial& operator+=(const polynomial& q) { return *this = *this + q; }
  polynomial& operator-=(const polynomial& q) { return *this = *this - q; }
  polynomial& operator*=(const polynomial& q) { return *this = *this * q; }

  friend bool operator==(const polynomial& p, const polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const polynomial& p, const polynomial& q) { return !(p == q); }

  gaussian_rational operator()(const gaussian_rational& x) const {
    gaussian_rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string str(const std::string& var = "z") const;

  friend std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<gaussian_rational> coeffs_;
};

inline polynomial derivative(const polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return polynomial();
  std::vector<gaussian_rational> v(c.size() - 1);
  for (size_t k = 1; k < c.size(); ++k) v[k - 1] = gaussian_rational(bigint(k)) * c[k];
  return polynomial(std::move(v));
}

// Leading coefficient scaled to 1.  monic(0) = 0.
inline polynomial monic(const polynomial& p) {
  if (p.is_zero() || p.leading().is_one()) return p;
  gaussian_rational inv = gaussian_rational(1) / p.leading();
  return inv * p;
}

// Quotient and remainder with deg(rem) < deg(q).
inline std::pair<polynomial, polynomial> div_rem(const polynomial& p, const polynomial& q) {
  if (q.is_zero()) throw division_by_zero("polynomial division by zero");
  const int dq = q.degree().value();
  std::vector<gaussian_rational> rem(p.coefficients());
  if (p.degree_or(-1) < dq) return {polynomial(), p};
  std::vector<gaussian_rational> quot(static_cast<size_t>(p.degree().value() - dq) + 1);
  const gaussian_rational lead_inv = gaussian_rational(1) / q.leading();
  for (int k = p.degree().value(); k >= dq; --k) {
    gaussian_rational c = rem[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    c *= lead_inv;
    quot[static_cast<size_t>(k - dq)] = c;
    for (int j = 0; j <= dq; ++j)
      rem[static_cast<size_t>(k - dq + j)] -= c * q.coeff(j);
  }
  return {polynomial(std::move(quot)), polynomial(std::move(rem))};
}

// Exact quotient p / q; throws inexact_division if q does not divide p.
inline polynomial divexact(const polynomial& p, const polynomial& q) {
  if (q.is_zero()) throw division_by_zero("polynomial division by zero");
  auto [quot, rem] = div_rem(p, q);
  if (!rem.is_zero()) throw inexact_division();
  return quot;
}

// Monic greatest common divisor over Q(i).  gcd(p, 0) = monic(p).
inline polynomial gcd(const polynomial& p, const polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw undefined_gcd();
  polynomial a = p, b = q;
  while (!b.is_zero()) {
    polynomial r = div_rem(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));  // rescaling tames coefficient growth along the remainder chain
  }
  return monic(a);
}

// p(q(z)) by Horner's scheme on the outer coefficients.
inline polynomial compose(const polynomial& p, const polynomial& q) {
  polynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + polynomial::constant(*it);
  return acc;
}

// w^d * p(1/w): the coefficient sequence reversed within a window of length
// d+1.  Requires d >= deg(p); the zero polynomial reverses to itself for any
// window.
inline polynomial reverse(const polynomial& p, int d) {
  if (p.is_zero()) return p;
  if (d < p.degree().value())
    throw bad_reversal_bound("reversal bound " + std::to_string(d) + " below degree " +
                             std::to_string(p.degree().value()));
  std::vector<gaussian_rational> v(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) v[static_cast<size_t>(k)] = p.coeff(d - k);
  return polynomial(std::move(v));
}

// Order of vanishing at z = 0: the index of the lowest nonzero coefficient.
inline int valuation_at_zero(const polynomial& p) {
  if (p.is_zero()) throw undefined_valuation();
  const auto& c = p.coefficients();
  int k = 0;
  while (c[static_cast<size_t>(k)].is_zero()) ++k;
  return k;
}

inline std::string polynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const gaussian_rational& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    const bool leading_term = out.empty();
    std::string cs = c.str();
    bool negated = false;
    const bool negative_real = c.im().is_zero() && c.re().sign() < 0;
    const bool negative_imag = c.re().is_zero() && c.im().sign() < 0;
    if (negative_real || negative_imag) {
      cs = (-c).str();
      negated = true;
    }
    if (!leading_term) out += negated ? " - " : " + ";
    else if (negated) out += "-";
    const bool needs_parens = !c.im().is_zero() && !c.re().is_zero();
    const bool unit = cs == "1";
    if (k == 0) {
      out += needs_parens ? "(" + cs + ")" : cs;
    } else {
      if (!unit) out += (needs_parens ? "(" + cs + ")" : cs) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace plucker
