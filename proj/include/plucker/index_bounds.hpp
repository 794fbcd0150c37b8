// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plucker/harmonic_sequence.hpp"

namespace plucker {

// Directrix data (f, rho) for a complex isotropic harmonic map: the degree
// and leading total ramification indices of the generating full holomorphic
// map f, the number rho of Gauss transforms applied to it, the target
// dimension and the domain genus.  Accepts either data computed from a curve
// or user-supplied abstract invariants (the only route for genus >= 1).
class directrix_invariants {
 public:
  enum class origin { computed_curve, user_supplied };

  directrix_invariants(int n, int g, bigint deg_f, int rho, std::vector<bigint> r_prefix,
                       std::optional<std::vector<bigint>> r_full = std::nullopt,
                       origin source = origin::user_supplied)
      : n_(n),
        g_(g),
        rho_(rho),
        deg_f_(std::move(deg_f)),
        r_prefix_(std::move(r_prefix)),
        r_full_(std::move(r_full)),
        source_(source) {
    if (n_ < 1) throw std::invalid_argument("target dimension n must be at least 1");
    if (g_ < 0) throw std::invalid_argument("genus must be nonnegative");
    if (rho_ < 0 || rho_ > n_) throw std::invalid_argument("rho must lie in 0..n");
    if (r_prefix_.size() != static_cast<size_t>(rho_))
      throw std::invalid_argument("expected " + std::to_string(rho_) +
                                  " ramification indices, got " +
                                  std::to_string(r_prefix_.size()));
    for (const bigint& r : r_prefix_)
      if (r < 0) throw std::invalid_argument("ramification indices must be nonnegative");
    if (r_full_) {
      if (r_full_->size() != static_cast<size_t>(n_))
        throw std::invalid_argument("full ramification sequence must have length n");
      for (size_t a = 0; a < r_prefix_.size(); ++a)
        if ((*r_full_)[a] != r_prefix_[a])
          throw std::invalid_argument("full ramification sequence does not extend the prefix");
      for (const bigint& r : *r_full_)
        if (r < 0) throw std::invalid_argument("ramification indices must be nonnegative");
      bigint weighted(0);
      for (int a = 0; a < n_; ++a) weighted += bigint(n_ - a) * (*r_full_)[static_cast<size_t>(a)];
      if (weighted != bigint(n_ + 1) * deg_f_ + bigint(n_) * bigint(n_ + 1) * (bigint(g_) - 1))
        throw std::invalid_argument("full ramification sequence violates the Plucker relation");
    }
  }

  int n() const { return n_; }
  int g() const { return g_; }
  int rho() const { return rho_; }
  const bigint& deg_f() const { return deg_f_; }
  const std::vector<bigint>& r_prefix() const { return r_prefix_; }
  const std::optional<std::vector<bigint>>& r_full() const { return r_full_; }
  origin source() const { return source_; }

  // Bounds hold only for maps that are neither holomorphic nor
  // antiholomorphic, i.e. 0 < rho < n.
  bool applicable() const { return rho_ > 0 && rho_ < n_; }

 private:
  int n_;
  int g_;
  int rho_;
  bigint deg_f_;
  std::vector<bigint> r_prefix_;
  std::optional<std::vector<bigint>> r_full_;
  origin source_;
};

// Directrix data of the rho-fold Gauss transform of a computed curve.
inline directrix_invariants directrix_from_sequence(const sequence_invariants& inv, int rho) {
  if (rho < 0 || rho > inv.n) throw std::invalid_argument("rho must lie in 0..n");
  std::vector<bigint> prefix(inv.r.begin(), inv.r.begin() + rho);
  return directrix_invariants(inv.n, inv.g, inv.deg_f, rho, std::move(prefix), inv.r,
                              directrix_invariants::origin::computed_curve);
}

namespace detail {

inline void require_applicable(const directrix_invariants& inv) {
  if (!inv.applicable()) throw not_applicable();
}

inline bigint ram_prefix_weighted(const directrix_invariants& inv, bool by_level_from_top) {
  // by_level_from_top: weights (n - alpha); otherwise weights (alpha + 1).
  bigint acc(0);
  for (int a = 0; a < inv.rho(); ++a) {
    const bigint w = by_level_from_top ? bigint(inv.n() - a) : bigint(a + 1);
    acc += w * inv.r_prefix()[static_cast<size_t>(a)];
  }
  return acc;
}

}  // namespace detail

// deg(phi) of the rho-fold Gauss transform, from the Chern-class relation
// deg(f) = deg(phi) + sum r_alpha - rho(2g - 2).
inline bigint deg_phi(const directrix_invariants& inv) {
  bigint ram_sum(0);
  for (const bigint& r : inv.r_prefix()) ram_sum += r;
  return inv.deg_f() - ram_sum + bigint(inv.rho()) * (2 * bigint(inv.g()) - 2);
}

// The classical estimate: Index(phi) >= deg(phi)(n+1) + n(1-g).
inline bigint baseline_bound(const directrix_invariants& inv) {
  detail::require_applicable(inv);
  return deg_phi(inv) * (inv.n() + 1) + bigint(inv.n()) * (1 - bigint(inv.g()));
}

// Improved estimate in directrix form:
// (n+1)deg(f) - sum (n-alpha) r_alpha + (2n rho - rho^2 + 2 rho - n)(g-1).
inline bigint theorem_bound(const directrix_invariants& inv) {
  detail::require_applicable(inv);
  const int n = inv.n(), rho = inv.rho();
  const bigint genus_coeff = bigint(2 * n * rho - rho * rho + 2 * rho - n);
  return bigint(n + 1) * inv.deg_f() - detail::ram_prefix_weighted(inv, true) +
         genus_coeff * (bigint(inv.g()) - 1);
}

// The same estimate in Gauss-transform form:
// (n+1)deg(phi) + (n + rho^2)(1-g) + sum (alpha+1) r_alpha.
// Algebraically identical to theorem_bound; the equality is asserted.
inline bigint corollary_bound(const directrix_invariants& inv) {
  detail::require_applicable(inv);
  const int n = inv.n(), rho = inv.rho();
  const bigint value = bigint(n + 1) * deg_phi(inv) +
                       bigint(n + rho * rho) * (1 - bigint(inv.g())) +
                       detail::ram_prefix_weighted(inv, false);
  if (value != theorem_bound(inv))
    throw internal_inconsistency("directrix and Gauss-transform bound forms disagree");
  return value;
}

struct improvement_result {
  bigint delta;
  bool improves = false;
};

// By how much the improved estimate exceeds the classical one:
// delta = sum (alpha+1) r_alpha - rho^2 (g-1).
inline improvement_result improvement(const directrix_invariants& inv) {
  detail::require_applicable(inv);
  const bigint delta = detail::ram_prefix_weighted(inv, false) -
                       bigint(inv.rho()) * bigint(inv.rho()) * (bigint(inv.g()) - 1);
  if (delta != theorem_bound(inv) - baseline_bound(inv))
    throw internal_inconsistency("improvement delta differs from the bound difference");
  return {delta, delta > 0};
}

// sum (n-alpha) r_alpha = (n+1) deg(f) + n(n+1)(g-1), exactly.
inline bool ramrelation_check(int n, int g, const bigint& deg_f,
                              const std::vector<bigint>& r_full) {
  if (r_full.size() != static_cast<size_t>(n))
    throw std::invalid_argument("full ramification sequence must have length n");
  bigint weighted(0);
  for (int a = 0; a < n; ++a) weighted += bigint(n - a) * r_full[static_cast<size_t>(a)];
  return weighted == bigint(n + 1) * deg_f + bigint(n) * bigint(n + 1) * (bigint(g) - 1);
}

// Evaluated bounds for one directrix.  theorem == corollary and
// improvement == theorem - baseline hold by construction.
struct bound_report {
  int n = 0;
  int g = 0;
  int rho = 0;
  bigint deg_f;
  std::vector<bigint> r_prefix;
  std::optional<std::vector<bigint>> r_full;
  bigint deg_phi;
  bigint baseline;
  bigint theorem;
  bigint corollary;
  bigint improvement;
  bool improves = false;
  bool applicable = false;
  bool vacuous = false;
  std::string notes;
};

inline bound_report evaluate_bounds(const directrix_invariants& inv) {
  bound_report rep;
  rep.n = inv.n();
  rep.g = inv.g();
  rep.rho = inv.rho();
  rep.deg_f = inv.deg_f();
  rep.r_prefix = inv.r_prefix();
  rep.r_full = inv.r_full();
  rep.deg_phi = plucker::deg_phi(inv);
  rep.applicable = inv.applicable();

  std::vector<std::string> notes;
  if (!rep.applicable) {
    notes.emplace_back("+/-holomorphic: stable, Index 0");
  } else {
    rep.baseline = baseline_bound(inv);
    rep.theorem = theorem_bound(inv);
    rep.corollary = corollary_bound(inv);
    const improvement_result imp = improvement(inv);
    rep.improvement = imp.delta;
    rep.improves = imp.improves;
    rep.vacuous = rep.theorem <= 0;
    if (rep.vacuous) notes.emplace_back("bound is vacuous (<= 0); Index >= 0 holds trivially");
  }
  if (inv.source() == directrix_invariants::origin::user_supplied) {
    notes.emplace_back("fullness and complex isotropy taken as user-asserted for abstract input");
    if (inv.g() >= 2)
      notes.emplace_back("genus >= 2: geometric realizability of the directrix data not certified");
  }
  for (size_t j = 0; j < notes.size(); ++j) rep.notes += (j ? "; " : "") + notes[j];
  return rep;
}

// CP^2 specializations (n = 2, rho = 1): the closed forms
//   sphere: 3 deg(f) - 2 r_0 - 3 = 3 deg(phi) + r_0 + 3
//   torus:  3 deg(f) - 2 r_0     = 3 deg(phi) + r_0
// evaluated directly and checked against the general bounds.
inline bound_report cp2_bounds(const directrix_invariants& inv) {
  if (inv.n() != 2 || inv.rho() != 1 || (inv.g() != 0 && inv.g() != 1))
    throw not_applicable("CP^2 closed forms require n = 2, rho = 1, g in {0, 1}");
  bound_report rep = evaluate_bounds(inv);
  const bigint r0 = inv.r_prefix()[0];
  const bigint genus_term = inv.g() == 0 ? bigint(3) : bigint(0);
  const bigint via_f = 3 * inv.deg_f() - 2 * r0 - genus_term;
  const bigint via_phi = 3 * rep.deg_phi + r0 + genus_term;
  if (via_f != via_phi || via_f != rep.theorem)
    throw internal_inconsistency("CP^2 closed forms disagree with the general bound");
  rep.notes += std::string(rep.notes.empty() ? "" : "; ") + "CP^2 closed forms verified";
  return rep;
}

}  // namespace plucker
