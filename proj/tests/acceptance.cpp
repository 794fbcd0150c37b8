// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite.  Every check is an exact integer comparison (tolerance
// zero); one PASS/FAIL line is printed per criterion and the process exits
// nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "plucker/index_bounds.hpp"
#include "plucker/poly_expr.hpp"

using namespace plucker;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const bool ok = detail.empty();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  if (!ok) std::cout << " [" << detail << "]";
  std::cout << "\n";
}

template <typename T, typename U>
void expect(std::ostringstream& err, const std::string& what, const T& expected, const U& got) {
  if (expected == got) return;
  err << what << " expected " << expected << " got " << got << "; ";
}

projective_curve veronese() {
  return make_curve(2, {parse_polynomial_expr("1"), parse_polynomial_expr("z"),
                        parse_polynomial_expr("z^2")});
}

projective_curve plane_cubic() {
  return make_curve(2, {parse_polynomial_expr("1"), parse_polynomial_expr("z+z^3"),
                        parse_polynomial_expr("z^2")});
}

projective_curve rational_normal_curve(int n) {
  std::vector<polynomial> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(polynomial::term(1, i));
  return make_curve(n, std::move(comps));
}

std::string check_sphere_family(const projective_curve& base, int deg_step,
                                const std::function<bigint(int)>& expected_deg_phi,
                                const std::function<bigint(int)>& expected_theorem,
                                const std::function<bigint(int)>& expected_baseline) {
  std::ostringstream err;
  for (int k = 1; k <= 5; ++k) {
    const projective_curve c = precompose(base, rational_self_map::power(k));
    const sequence_invariants inv = invariants(c);
    const std::string tag = "k=" + std::to_string(k) + " ";
    expect(err, tag + "deg", bigint(deg_step * k), inv.deg_f);
    expect(err, tag + "r0", bigint(2 * (k - 1)), inv.r.at(0));
    const bound_report rep = evaluate_bounds(directrix_from_sequence(inv, 1));
    expect(err, tag + "deg_phi", expected_deg_phi(k), rep.deg_phi);
    expect(err, tag + "theorem", expected_theorem(k), rep.theorem);
    expect(err, tag + "baseline", expected_baseline(k), rep.baseline);
    expect(err, tag + "improvement", bigint(2 * k - 1), rep.improvement);
  }
  return err.str();
}

}  // namespace

int main() {
  criterion(1, "Veronese family: deg 2k, r0 = 2(k-1), deg(phi) = 0, bound 2k+1, improvement 2k-1",
            [] {
              return check_sphere_family(
                  veronese(), 2, [](int) { return bigint(0); },
                  [](int k) { return bigint(2 * k + 1); }, [](int) { return bigint(2); });
            });

  criterion(2, "degree-3 sphere family: deg 3k, r0 = 2(k-1), deg(phi) = k, bound 5k+1",
            [] {
              return check_sphere_family(
                  plane_cubic(), 3, [](int k) { return bigint(k); },
                  [](int k) { return bigint(5 * k + 1); },
                  [](int k) { return bigint(3 * k + 2); });
            });

  criterion(3, "torus family: deg(phi) = k, bound 7k, baseline 3k, improvement 4k", [] {
    std::ostringstream err;
    for (int k = 1; k <= 5; ++k) {
      const directrix_invariants d(2, 1, bigint(5 * k), 1, {bigint(4 * k)});
      const bound_report rep = cp2_bounds(d);
      const std::string tag = "k=" + std::to_string(k) + " ";
      expect(err, tag + "deg_phi", bigint(k), rep.deg_phi);
      expect(err, tag + "theorem", bigint(7 * k), rep.theorem);
      expect(err, tag + "baseline", bigint(3 * k), rep.baseline);
      expect(err, tag + "improvement", bigint(4 * k), rep.improvement);
    }
    return err.str();
  });

  criterion(4, "higher genus: deg(phi) = k and the improved bound beats the baseline", [] {
    std::ostringstream err;
    for (int g = 2; g <= 3; ++g)
      for (int k = g + 1; k <= g + 3; ++k) {
        const directrix_invariants d(2, g, bigint(3 * k), 1, {bigint(2 * k + 2 * g - 2)});
        const bound_report rep = evaluate_bounds(d);
        const std::string tag = "g=" + std::to_string(g) + ",k=" + std::to_string(k) + " ";
        expect(err, tag + "deg_phi", bigint(k), rep.deg_phi);
        expect(err, tag + "improves", true, rep.improves);
      }
    return err.str();
  });

  criterion(5, "200 random full curves pass every identity with chart-flip invariance", [] {
    std::ostringstream err;
    plucker_test::rng_t rng(20260808);
    for (int iter = 0; iter < 200; ++iter) {
      const projective_curve c = plucker_test::random_full_curve(rng, 4, 6, 3);
      const sequence_invariants inv = invariants(c);
      const verification_report rep = verify_plucker(inv);
      if (!rep.pass) {
        err << "iteration " << iter << ": nonzero residual; ";
        break;
      }
      if (invariants(chart_flip(c)).r != inv.r) {
        err << "iteration " << iter << ": ramification differs after chart flip; ";
        break;
      }
    }
    return err.str();
  });

  criterion(6, "500 random directrix data sets satisfy both bound identities", [] {
    std::ostringstream err;
    plucker_test::rng_t rng(77002);
    for (int iter = 0; iter < 500; ++iter) {
      const directrix_invariants d = plucker_test::random_directrix(rng, 6, 3, 40, 10);
      const bigint theorem = theorem_bound(d);
      if (theorem != corollary_bound(d)) {
        err << "iteration " << iter << ": theorem != corollary; ";
        break;
      }
      bigint weighted(0);
      for (int a = 0; a < d.rho(); ++a)
        weighted += bigint(a + 1) * d.r_prefix()[static_cast<size_t>(a)];
      const bigint delta = weighted - bigint(d.rho()) * bigint(d.rho()) * (bigint(d.g()) - 1);
      if (theorem - baseline_bound(d) != delta) {
        err << "iteration " << iter << ": improvement identity violated; ";
        break;
      }
    }
    return err.str();
  });

  criterion(7, "per-point multiplicity oracle equals gcd second differences on the corpus", [] {
    std::ostringstream err;
    std::vector<std::pair<std::string, projective_curve>> corpus;
    for (int k = 1; k <= 5; ++k) {
      corpus.emplace_back("veronese*eta" + std::to_string(k),
                          precompose(veronese(), rational_self_map::power(k)));
      corpus.emplace_back("cubic*eta" + std::to_string(k),
                          precompose(plane_cubic(), rational_self_map::power(k)));
    }
    for (int n = 1; n <= 4; ++n)
      corpus.emplace_back("rnc-cp" + std::to_string(n), rational_normal_curve(n));
    for (const auto& [name, curve] : corpus) {
      if (plucker_test::oracle_ramification(curve) != invariants(curve).r)
        err << name << ": oracle disagrees; ";
    }
    return err.str();
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
