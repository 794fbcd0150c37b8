// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plucker/projective_curve.hpp"
#include "plucker/rational.hpp"

namespace plucker {

// Numerical invariants of the harmonic sequence generated by a full
// holomorphic curve: associated-curve degrees d_k, total common-zero degrees
// G_k of the level-k minors over both charts, total ramification indices r_k,
// and the degrees of the harmonic maps obtained by k Gauss transforms.
struct sequence_invariants {
  int n = 0;
  int g = 0;  // domain genus; always 0 for curves computed here
  bigint deg_f;
  std::vector<bigint> d;        // d_0..d_n, d_n = 0
  std::vector<bigint> G;        // G_0..G_n, G_0 = 0
  std::vector<bigint> r;        // r_0..r_{n-1}
  std::vector<bigint> map_deg;  // degree of the rho-fold Gauss transform, rho = 0..n
};

// Residuals of the Plucker identities; all must vanish.
struct verification_report {
  std::vector<bigint> recursion_residuals;  // k = 0..n-1
  bigint ramrelation_residual;
  std::vector<bigint> degree_residuals;  // rho = 0..n
  bool pass = false;
};

namespace detail {

// All (k+1)x(k+1) minors of the (n+1)x(k+1) matrix [F, F', ..., F^(k)],
// row subsets in lexicographic order.  Assumes the curve is full.
inline std::vector<polynomial> level_minors_unchecked(const projective_curve& c, int k) {
  const int n = c.n();
  // rows[i][j] = j-th derivative of component i
  std::vector<std::vector<polynomial>> rows(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    polynomial der = c.components()[static_cast<size_t>(i)];
    rows[static_cast<size_t>(i)].push_back(der);
    for (int j = 1; j <= k; ++j) {
      der = derivative(der);
      rows[static_cast<size_t>(i)].push_back(der);
    }
  }
  std::vector<polynomial> minors;
  std::vector<int> pick(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<std::vector<polynomial>> sub;
    sub.reserve(pick.size());
    for (int row : pick) sub.push_back(rows[static_cast<size_t>(row)]);
    minors.push_back(poly_determinant(sub));
    // next (k+1)-subset of {0..n} in lexicographic order
    int j = k;
    while (j >= 0 && pick[static_cast<size_t>(j)] == n - (k - j)) --j;
    if (j < 0) break;
    ++pick[static_cast<size_t>(j)];
    for (int t = j + 1; t <= k; ++t)
      pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
  }
  return minors;
}

struct chart_levels {
  std::vector<int> reduced_degree;  // per level: max minor degree minus gcd degree
  std::vector<polynomial> minor_gcd;  // monic gcd of the level minors
};

inline chart_levels analyze_chart(const projective_curve& c) {
  chart_levels out;
  for (int k = 0; k <= c.n(); ++k) {
    const std::vector<polynomial> minors = level_minors_unchecked(c, k);
    const polynomial h = gcd_all(minors);
    int max_deg = 0;
    for (const polynomial& m : minors) max_deg = std::max(max_deg, m.degree_or(0));
    out.reduced_degree.push_back(max_deg - h.degree_or(0));
    out.minor_gcd.push_back(h);
  }
  return out;
}

inline void require_full(const projective_curve& c) {
  if (!is_full(c)) throw not_full();
}

inline void require_level(const projective_curve& c, int k, int lowest) {
  if (k < lowest || k > c.n())
    throw bad_level("level " + std::to_string(k) + " outside " + std::to_string(lowest) + ".." +
                    std::to_string(c.n()));
}

}  // namespace detail

inline std::vector<polynomial> level_minors(const projective_curve& c, int k) {
  detail::require_level(c, k, 0);
  detail::require_full(c);
  return detail::level_minors_unchecked(c, k);
}

// G_k: total degree of the common zeros of the level-k minors over the whole
// sphere.  Finite points are counted by the chart-1 gcd degree; the point at
// infinity contributes the valuation at w = 0 of the chart-2 gcd.  Chart-2
// zeros away from w = 0 are finite points already counted in chart 1.
inline int common_zero_degree(const projective_curve& c, int k) {
  detail::require_level(c, k, 1);
  detail::require_full(c);
  const polynomial h1 = detail::gcd_all(detail::level_minors_unchecked(c, k));
  const polynomial h2 = detail::gcd_all(detail::level_minors_unchecked(chart_flip(c), k));
  return h1.degree_or(0) + valuation_at_zero(h2);
}

// d_k: degree of the k-th associated curve, i.e. max level-minor degree after
// dividing out the common factor.  Computed in both charts, which must agree.
inline int associated_degree(const projective_curve& c, int k) {
  detail::require_level(c, k, 0);
  detail::require_full(c);
  const auto reduced = [k](const projective_curve& chart) {
    const std::vector<polynomial> minors = detail::level_minors_unchecked(chart, k);
    const polynomial h = detail::gcd_all(minors);
    int max_deg = 0;
    for (const polynomial& m : minors) max_deg = std::max(max_deg, m.degree_or(0));
    return max_deg - h.degree_or(0);
  };
  const int d1 = reduced(c);
  const int d2 = reduced(chart_flip(c));
  if (d1 != d2)
    throw internal_inconsistency("associated degree disagrees between charts at level " +
                                 std::to_string(k) + ": " + std::to_string(d1) + " vs " +
                                 std::to_string(d2));
  return d1;
}

inline sequence_invariants invariants(const projective_curve& c) {
  detail::require_full(c);
  const int n = c.n();
  const detail::chart_levels chart1 = detail::analyze_chart(c);
  const detail::chart_levels chart2 = detail::analyze_chart(chart_flip(c));

  sequence_invariants inv;
  inv.n = n;
  inv.g = 0;
  inv.deg_f = c.degree();

  for (int k = 0; k <= n; ++k) {
    const int dk = chart1.reduced_degree[static_cast<size_t>(k)];
    if (dk != chart2.reduced_degree[static_cast<size_t>(k)])
      throw internal_inconsistency("associated degree disagrees between charts at level " +
                                   std::to_string(k));
    inv.d.emplace_back(dk);
    if (k == 0)
      inv.G.emplace_back(0);
    else
      inv.G.emplace_back(chart1.minor_gcd[static_cast<size_t>(k)].degree_or(0) +
                         valuation_at_zero(chart2.minor_gcd[static_cast<size_t>(k)]));
  }
  if (inv.d.front() != inv.deg_f)
    throw internal_inconsistency("d_0 differs from the curve degree");
  if (inv.d.back() != 0) throw internal_inconsistency("top associated degree d_n is nonzero");
  if (chart1.minor_gcd.front().degree_or(0) != 0)
    throw internal_inconsistency("level-0 minors have a common factor on a normalized curve");

  // r_k as the second difference of the common-zero totals.
  for (int k = 0; k < n; ++k) {
    const bigint below = k == 0 ? bigint(0) : inv.G[static_cast<size_t>(k - 1)];
    const bigint rk = inv.G[static_cast<size_t>(k + 1)] - 2 * inv.G[static_cast<size_t>(k)] + below;
    if (rk < 0)
      throw internal_inconsistency("negative ramification index r_" + std::to_string(k));
    inv.r.push_back(rk);
  }

  // Degree of the rho-fold Gauss transform, via associated-degree differences
  // and independently via the Chern-class formula; the two must agree.
  for (int rho = 0; rho <= n; ++rho) {
    const bigint prev = rho == 0 ? bigint(0) : inv.d[static_cast<size_t>(rho - 1)];
    const bigint by_difference = inv.d[static_cast<size_t>(rho)] - prev;
    bigint ram_sum(0);
    for (int a = 0; a < rho; ++a) ram_sum += inv.r[static_cast<size_t>(a)];
    const bigint by_chern = inv.deg_f - ram_sum + bigint(rho) * (2 * inv.g - 2);
    if (by_difference != by_chern)
      throw internal_inconsistency("Gauss-transform degree mismatch at rho = " +
                                   std::to_string(rho));
    inv.map_deg.push_back(by_difference);
  }
  return inv;
}

inline std::vector<bigint> ramification_indices(const projective_curve& c) {
  return invariants(c).r;
}

// Checks the Plucker recursion, the weighted ramification relation and the
// Gauss-transform degree formula on an invariant set (computed or abstract).
inline verification_report verify_plucker(const sequence_invariants& inv) {
  verification_report rep;
  const int n = inv.n;
  const bigint two_g_minus_2 = 2 * bigint(inv.g) - 2;

  for (int k = 0; k < n; ++k) {
    const bigint below = k == 0 ? bigint(0) : inv.d[static_cast<size_t>(k - 1)];
    rep.recursion_residuals.push_back(inv.d[static_cast<size_t>(k + 1)] -
                                      2 * inv.d[static_cast<size_t>(k)] + below - two_g_minus_2 +
                                      inv.r[static_cast<size_t>(k)]);
  }

  bigint weighted(0);
  for (int a = 0; a < n; ++a) weighted += bigint(n - a) * inv.r[static_cast<size_t>(a)];
  rep.ramrelation_residual =
      weighted - bigint(n + 1) * inv.deg_f - bigint(n) * bigint(n + 1) * (bigint(inv.g) - 1);

  bigint ram_sum(0);
  for (int rho = 0; rho <= n; ++rho) {
    if (rho > 0) ram_sum += inv.r[static_cast<size_t>(rho - 1)];
    rep.degree_residuals.push_back(inv.map_deg[static_cast<size_t>(rho)] -
                                   (inv.deg_f - ram_sum + bigint(rho) * two_g_minus_2));
  }

  rep.pass = rep.ramrelation_residual == 0;
  for (const bigint& v : rep.recursion_residuals) rep.pass = rep.pass && v == 0;
  for (const bigint& v : rep.degree_residuals) rep.pass = rep.pass && v == 0;
  return rep;
}

}  // namespace plucker
