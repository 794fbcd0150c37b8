// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plucker/detail/poly_matrix.hpp"
#include "plucker/polynomial.hpp"

namespace plucker {

namespace detail {

// Monic gcd of a family, skipping zero members.  Throws undefined_gcd when
// every member is zero.
inline polynomial gcd_all(const std::vector<polynomial>& ps) {
  polynomial acc;
  for (const polynomial& p : ps) {
    if (p.is_zero()) continue;
    acc = acc.is_zero() ? monic(p) : gcd(acc, p);
    if (acc.degree() == 0) break;  // already a unit
  }
  if (acc.is_zero()) throw undefined_gcd("gcd of an all-zero family");
  return acc;
}

}  // namespace detail

// Holomorphic map S^2 -> CP^n in homogeneous coordinates: n+1 polynomials in
// the affine chart coordinate z, stored componentwise-coprime.  The point at
// infinity is reached through chart_flip().
class projective_curve {
 public:
  projective_curve(int n, std::vector<polynomial> raw) : n_(n) {
    if (n < 1) throw arity_mismatch("target dimension must be at least 1");
    if (raw.size() != static_cast<size_t>(n) + 1)
      throw arity_mismatch("expected " + std::to_string(n + 1) + " components, got " +
                           std::to_string(raw.size()));
    bool any_nonzero = false;
    for (const polynomial& p : raw) any_nonzero = any_nonzero || !p.is_zero();
    if (!any_nonzero) throw degenerate_curve();
    const polynomial g = detail::gcd_all(raw);
    components_.reserve(raw.size());
    for (polynomial& p : raw)
      components_.push_back(p.is_zero() ? std::move(p) : divexact(p, g));
    d_ = 0;
    for (const polynomial& p : components_) d_ = std::max(d_, p.degree_or(0));
  }

  int n() const { return n_; }
  // Algebraic degree: max component degree of the coprime representative.
  int degree() const { return d_; }
  const std::vector<polynomial>& components() const { return components_; }

  friend bool operator==(const projective_curve& a, const projective_curve& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }
  friend bool operator!=(const projective_curve& a, const projective_curve& b) {
    return !(a == b);
  }

 private:
  int n_;
  int d_;
  std::vector<polynomial> components_;
};

inline projective_curve make_curve(int n, std::vector<polynomial> raw) {
  return projective_curve(n, std::move(raw));
}

// Nonconstant rational self-map of the sphere, num/den coprime.
class rational_self_map {
 public:
  rational_self_map(polynomial num, polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero() && den_.is_zero()) throw degenerate_map("0/0 is not a map");
    const polynomial g = detail::gcd_all({num_, den_});
    if (!num_.is_zero()) num_ = divexact(num_, g);
    if (!den_.is_zero()) den_ = divexact(den_, g);
    if (degree() < 1) throw degenerate_map("constant self-map");
  }

  const polynomial& num() const { return num_; }
  const polynomial& den() const { return den_; }
  int degree() const { return std::max(num_.degree_or(0), den_.degree_or(0)); }

  // z -> z^k, k >= 1.
  static rational_self_map power(int k) {
    return rational_self_map(polynomial::term(1, k), polynomial::constant(1));
  }

 private:
  polynomial num_;
  polynomial den_;
};

// Full <=> the components are linearly independent over the scalars <=> the
// full Wronskian det[F, F', ..., F^(n)] is not the zero polynomial.  Both the
// Wronskian and a coefficient-matrix rank test are evaluated; disagreement is
// a library bug.
inline bool is_full(const projective_curve& c) {
  const int n = c.n();
  std::vector<std::vector<polynomial>> m(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    polynomial der = c.components()[static_cast<size_t>(i)];
    m[static_cast<size_t>(i)].push_back(der);
    for (int j = 1; j <= n; ++j) {
      der = derivative(der);
      m[static_cast<size_t>(i)].push_back(der);
    }
  }
  const bool wronskian_nonzero = !detail::poly_determinant(m).is_zero();

  std::vector<std::vector<gaussian_rational>> coeffs(
      static_cast<size_t>(n) + 1, std::vector<gaussian_rational>(static_cast<size_t>(c.degree()) + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= c.degree(); ++k)
      coeffs[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          c.components()[static_cast<size_t>(i)].coeff(k);
  const bool full_rank = detail::scalar_rank(std::move(coeffs)) == n + 1;

  if (wronskian_nonzero != full_rank)
    throw internal_inconsistency("Wronskian and rank fullness tests disagree");
  return wronskian_nonzero;
}

// The same curve in the second affine chart w = 1/z: each component reversed
// within the window of length degree+1, then re-normalized.
inline projective_curve chart_flip(const projective_curve& c) {
  std::vector<polynomial> flipped;
  flipped.reserve(c.components().size());
  for (const polynomial& p : c.components()) flipped.push_back(reverse(p, c.degree()));
  return projective_curve(c.n(), std::move(flipped));
}

// f o m for m = p/q: components q^d * F_i(p/q), cleared of denominators and
// re-normalized.
inline projective_curve precompose(const projective_curve& c, const rational_self_map& m) {
  const int d = c.degree();
  // Powers p^j and q^(d-j), j = 0..d.
  std::vector<polynomial> num_pow(static_cast<size_t>(d) + 1), den_pow(static_cast<size_t>(d) + 1);
  num_pow[0] = polynomial::constant(1);
  den_pow[0] = polynomial::constant(1);
  for (int j = 1; j <= d; ++j) {
    num_pow[static_cast<size_t>(j)] = num_pow[static_cast<size_t>(j - 1)] * m.num();
    den_pow[static_cast<size_t>(j)] = den_pow[static_cast<size_t>(j - 1)] * m.den();
  }
  std::vector<polynomial> comps;
  comps.reserve(c.components().size());
  for (const polynomial& f : c.components()) {
    polynomial acc;
    for (int j = 0; j <= f.degree_or(-1); ++j) {
      const gaussian_rational a = f.coeff(j);
      if (a.is_zero()) continue;
      acc += a * (num_pow[static_cast<size_t>(j)] * den_pow[static_cast<size_t>(d - j)]);
    }
    comps.push_back(std::move(acc));
  }
  return projective_curve(c.n(), std::move(comps));
}

}  // namespace plucker
