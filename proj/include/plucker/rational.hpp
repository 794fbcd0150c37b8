// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

#include "plucker/errors.hpp"

namespace plucker {

// Arbitrary-precision integer backing all exact arithmetic in the library.
using bigint = boost::multiprecision::cpp_int;

// Exact rational number.  Always stored reduced with a positive denominator,
// so equality is plain field-wise comparison.
class rational {
 public:
  rational() : num_(0), den_(1) {}
  rational(bigint n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  rational(long long n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)
  rational(int n) : num_(n), den_(1) {}                // NOLINT(google-explicit-constructor)

  rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw division_by_zero("rational with zero denominator");
    normalize();
  }

  const bigint& num() const { return num_; }
  const bigint& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  friend rational operator+(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.is_zero()) throw division_by_zero();
    return rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend rational operator-(const rational& a) { return rational(-a.num_, a.den_, already_reduced{}); }

  rational& operator+=(const rational& b) { return *this = *this + b; }
  rational& operator-=(const rational& b) { return *this = *this - b; }
  rational& operator*=(const rational& b) { return *this = *this * b; }
  rational& operator/=(const rational& b) { return *this = *this / b; }

  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
  friend bool operator<(const rational& a, const rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
  friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

  // "n" when the denominator is 1, "n/d" otherwise.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

 private:
  struct already_reduced {};
  rational(bigint n, bigint d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    bigint g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  bigint num_;
  bigint den_;
};

inline rational abs(const rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace plucker
