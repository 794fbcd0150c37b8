// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch.hpp>

#include "generators.hpp"
#include "plucker/index_bounds.hpp"
#include "plucker/poly_expr.hpp"

using namespace plucker;

namespace {

directrix_invariants dir(int n, int g, long long deg_f, int rho, std::vector<long long> r) {
  std::vector<bigint> prefix(r.begin(), r.end());
  return directrix_invariants(n, g, bigint(deg_f), rho, std::move(prefix));
}

}  // namespace

TEST_CASE("deg_phi from the Chern-class relation") {
  REQUIRE(deg_phi(dir(2, 0, 2, 1, {0})) == 0);
  REQUIRE(deg_phi(dir(2, 0, 3, 1, {0})) == 1);
  for (int k = 1; k <= 5; ++k) REQUIRE(deg_phi(dir(2, 1, 5 * k, 1, {4 * k})) == k);
  // rho = 0: no transforms, deg(phi) = deg(f); no applicability gate on deg_phi
  REQUIRE(deg_phi(dir(3, 2, 7, 0, {})) == 7);
}

TEST_CASE("baseline bound") {
  REQUIRE(baseline_bound(dir(2, 0, 2, 1, {0})) == 2);
  REQUIRE(baseline_bound(dir(2, 0, 3, 1, {0})) == 5);
  REQUIRE(baseline_bound(dir(2, 1, 5, 1, {4})) == 3);
  REQUIRE_THROWS_AS(baseline_bound(dir(2, 0, 2, 0, {})), not_applicable);
  REQUIRE_THROWS_AS(baseline_bound(dir(2, 0, 2, 2, {0, 0})), not_applicable);
}

TEST_CASE("improved bound, directrix form") {
  for (int k = 1; k <= 5; ++k) {
    REQUIRE(theorem_bound(dir(2, 0, 2 * k, 1, {2 * (k - 1)})) == 2 * k + 1);
    REQUIRE(theorem_bound(dir(2, 0, 3 * k, 1, {2 * (k - 1)})) == 5 * k + 1);
    REQUIRE(theorem_bound(dir(2, 1, 5 * k, 1, {4 * k})) == 7 * k);
  }
  REQUIRE_THROWS_AS(theorem_bound(dir(2, 1, 5, 0, {})), not_applicable);
}

TEST_CASE("improved bound, Gauss-transform form matches") {
  for (int k = 1; k <= 5; ++k) {
    REQUIRE(corollary_bound(dir(2, 0, 2 * k, 1, {2 * (k - 1)})) == 2 * k + 1);
    REQUIRE(corollary_bound(dir(2, 0, 3 * k, 1, {2 * (k - 1)})) == 5 * k + 1);
    REQUIRE(corollary_bound(dir(2, 1, 5 * k, 1, {4 * k})) == 7 * k);
  }
}

TEST_CASE("improvement over the baseline") {
  // sphere, rho = 1: delta = r_0 + 1
  for (long long r0 : {0LL, 1LL, 4LL, 9LL}) {
    const improvement_result imp = improvement(dir(2, 0, 10, 1, {r0}));
    REQUIRE(imp.delta == r0 + 1);
    REQUIRE(imp.improves);
  }
  // torus, rho = 1: delta = r_0
  REQUIRE(improvement(dir(2, 1, 10, 1, {0})).delta == 0);
  REQUIRE_FALSE(improvement(dir(2, 1, 10, 1, {0})).improves);
  REQUIRE(improvement(dir(2, 1, 10, 1, {6})).delta == 6);
  REQUIRE(improvement(dir(2, 1, 10, 1, {6})).improves);
  // genus g, deg_f = 3k, r_0 = 2k + 2g - 2 improves for all k >= 1, g >= 1
  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= 4; ++k) {
      const improvement_result imp = improvement(dir(2, g, 3 * k, 1, {2 * k + 2 * g - 2}));
      REQUIRE(imp.delta == 2 * k + g - 1);
      REQUIRE(imp.improves);
    }
}

TEST_CASE("weighted ramification relation check") {
  REQUIRE(ramrelation_check(2, 0, 2, {bigint(0), bigint(0)}));
  REQUIRE(ramrelation_check(2, 0, 3, {bigint(0), bigint(3)}));
  REQUIRE(ramrelation_check(2, 1, 5, {bigint(4), bigint(7)}));
  REQUIRE_FALSE(ramrelation_check(2, 1, 5, {bigint(4), bigint(6)}));
  REQUIRE_FALSE(ramrelation_check(2, 0, 2, {bigint(1), bigint(0)}));
  REQUIRE_THROWS_AS(ramrelation_check(3, 0, 2, {bigint(0)}), std::invalid_argument);
}

TEST_CASE("directrix validation") {
  REQUIRE_THROWS_AS(dir(0, 0, 1, 0, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(dir(2, -1, 1, 0, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(dir(2, 0, 1, 3, {0, 0, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(dir(2, 0, 1, 1, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(dir(2, 0, 1, 1, {-1}), std::invalid_argument);

  // r_full must extend the prefix and satisfy the ramification relation
  REQUIRE_NOTHROW(directrix_invariants(2, 0, bigint(3), 1, {bigint(0)},
                                       std::vector<bigint>{bigint(0), bigint(3)}));
  REQUIRE_THROWS_AS(directrix_invariants(2, 0, bigint(3), 1, {bigint(0)},
                                         std::vector<bigint>{bigint(1), bigint(2)}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(directrix_invariants(2, 0, bigint(3), 1, {bigint(0)},
                                         std::vector<bigint>{bigint(0), bigint(2)}),
                    std::invalid_argument);
}

TEST_CASE("CP^2 closed forms") {
  for (int k = 1; k <= 5; ++k) {
    const bound_report sphere2k = cp2_bounds(dir(2, 0, 2 * k, 1, {2 * (k - 1)}));
    REQUIRE(sphere2k.theorem == 2 * k + 1);
    REQUIRE(sphere2k.deg_phi == 0);
    const bound_report sphere3k = cp2_bounds(dir(2, 0, 3 * k, 1, {2 * (k - 1)}));
    REQUIRE(sphere3k.theorem == 5 * k + 1);
    REQUIRE(sphere3k.deg_phi == k);
    const bound_report torus = cp2_bounds(dir(2, 1, 5 * k, 1, {4 * k}));
    REQUIRE(torus.theorem == 7 * k);
    REQUIRE(torus.baseline == 3 * k);
    REQUIRE(torus.improvement == 4 * k);
  }
  REQUIRE_THROWS_AS(cp2_bounds(dir(3, 0, 4, 1, {0})), not_applicable);
  REQUIRE_THROWS_AS(cp2_bounds(dir(2, 2, 4, 1, {0})), not_applicable);
  REQUIRE_THROWS_AS(cp2_bounds(dir(2, 0, 4, 2, {0, 0})), not_applicable);
}

TEST_CASE("bound reports carry applicability and vacuousness") {
  const bound_report stable = evaluate_bounds(dir(2, 0, 2, 0, {}));
  REQUIRE_FALSE(stable.applicable);
  REQUIRE(stable.notes.find("stable, Index 0") != std::string::npos);

  // deg(phi) < 0 makes the bound vacuous; it is reported, never clamped
  const bound_report vac = evaluate_bounds(dir(2, 0, 1, 1, {2}));
  REQUIRE(vac.applicable);
  REQUIRE(vac.deg_phi == -3);
  REQUIRE(vac.theorem == -4);
  REQUIRE(vac.vacuous);
  REQUIRE(vac.notes.find("vacuous") != std::string::npos);

  const bound_report abstract_note = evaluate_bounds(dir(2, 2, 9, 1, {6}));
  REQUIRE(abstract_note.notes.find("user-asserted") != std::string::npos);
  REQUIRE(abstract_note.notes.find("realizability") != std::string::npos);
}

TEST_CASE("bound identities on random directrix data") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 500; ++iter) {
    const directrix_invariants d = plucker_test::random_directrix(rng);
    const bigint theorem = theorem_bound(d);
    REQUIRE(theorem == corollary_bound(d));
    bigint weighted(0);
    for (int a = 0; a < d.rho(); ++a)
      weighted += bigint(a + 1) * d.r_prefix()[static_cast<size_t>(a)];
    REQUIRE(theorem - baseline_bound(d) ==
            weighted - bigint(d.rho()) * bigint(d.rho()) * (bigint(d.g()) - 1));
  }
}

TEST_CASE("theorem bound strictly decreases in each r_alpha at genus 0") {
  std::mt19937 rng(47);
  for (int iter = 0; iter < 100; ++iter) {
    directrix_invariants base = plucker_test::random_directrix(rng, 6, 0);
    for (int a = 0; a < base.rho(); ++a) {
      std::vector<bigint> bumped = base.r_prefix();
      bumped[static_cast<size_t>(a)] += 1;
      const directrix_invariants more(base.n(), base.g(), base.deg_f(), base.rho(), bumped);
      REQUIRE(theorem_bound(more) == theorem_bound(base) - (base.n() - a));
      REQUIRE(theorem_bound(more) < theorem_bound(base));
    }
  }
}

TEST_CASE("curve pipeline feeds the evaluators without inconsistencies") {
  std::mt19937 rng(53);
  for (int iter = 0; iter < 20; ++iter) {
    const projective_curve c = plucker_test::random_full_curve(rng, 4, 5, 3, false);
    const sequence_invariants inv = invariants(c);
    for (int rho = 0; rho <= inv.n; ++rho) {
      const bound_report rep = evaluate_bounds(directrix_from_sequence(inv, rho));
      REQUIRE(rep.applicable == (rho > 0 && rho < inv.n));
      if (rep.applicable) REQUIRE(rep.theorem == rep.corollary);
    }
  }
}

TEST_CASE("directrix data from a computed sequence") {
  const projective_curve cubic = make_curve(
      2, {parse_polynomial_expr("1"), parse_polynomial_expr("z+z^3"), parse_polynomial_expr("z^2")});
  const sequence_invariants inv = invariants(cubic);
  const directrix_invariants d = directrix_from_sequence(inv, 1);
  REQUIRE(d.n() == 2);
  REQUIRE(d.g() == 0);
  REQUIRE(d.deg_f() == 3);
  REQUIRE(d.r_prefix() == std::vector<bigint>{bigint(0)});
  REQUIRE(d.r_full().has_value());
  REQUIRE(d.source() == directrix_invariants::origin::computed_curve);
  REQUIRE(evaluate_bounds(d).notes.find("user-asserted") == std::string::npos);
}
