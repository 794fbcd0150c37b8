// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "plucker/rational.hpp"

namespace plucker {

// Element of Q(i): re + im*i with exact rational parts.  The coefficient
// field for every polynomial in the library.
class gaussian_rational {
 public:
  gaussian_rational() = default;
  gaussian_rational(rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  gaussian_rational(long long n) : re_(n) {}              // NOLINT(google-explicit-constructor)
  gaussian_rational(int n) : re_(n) {}                    // NOLINT(google-explicit-constructor)
  gaussian_rational(rational re, rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static gaussian_rational i() { return gaussian_rational(rational(0), rational(1)); }

  const rational& re() const { return re_; }
  const rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }

  gaussian_rational conjugate() const { return gaussian_rational(re_, -im_); }

  // |z|^2 = z * conj(z), a rational.
  rational norm() const { return re_ * re_ + im_ * im_; }

  friend gaussian_rational operator+(const gaussian_rational& a, const gaussian_rational& b) {
    return gaussian_rational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend gaussian_rational operator-(const gaussian_rational& a, const gaussian_rational& b) {
    return gaussian_rational(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend gaussian_rational operator*(const gaussian_rational& a, const gaussian_rational& b) {
    return gaussian_rational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend gaussian_rational operator/(const gaussian_rational& a, const gaussian_rational& b) {
    if (b.is_zero()) throw division_by_zero();
    const rational n = b.norm();
    return gaussian_rational((a.re_ * b.re_ + a.im_ * b.im_) / n,
                             (a.im_ * b.re_ - a.re_ * b.im_) / n);
  }
  friend gaussian_rational operator-(const gaussian_rational& a) {
    return gaussian_rational(-a.re_, -a.im_);
  }

  gaussian_rational& operator+=(const gaussian_rational& b) { return *this = *this + b; }
  gaussian_rational& operator-=(const gaussian_rational& b) { return *this = *this - b; }
  gaussian_rational& operator*=(const gaussian_rational& b) { return *this = *this * b; }
  gaussian_rational& operator/=(const gaussian_rational& b) { return *this = *this / b; }

  friend bool operator==(const gaussian_rational& a, const gaussian_rational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const gaussian_rational& a, const gaussian_rational& b) {
    return !(a == b);
  }

  // Canonical literal: "a/b", "a/b+c/d*i" or "a/b-c/d*i"; pure imaginary
  // values drop the real part.  parse_gaussian() accepts exactly this form.
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s;
    if (!re_.is_zero()) s = re_.str();
    if (im_.sign() > 0 && !re_.is_zero()) s += "+";
    if (im_.sign() < 0) s += "-";
    const rational magnitude = abs(im_);
    s += magnitude.is_one() ? "i" : magnitude.str() + "*i";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const gaussian_rational& z) {
    return os << z.str();
  }

 private:
  rational re_;
  rational im_;
};

}  // namespace plucker
