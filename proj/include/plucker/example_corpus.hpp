// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plucker/json_io.hpp"
#include "plucker/poly_expr.hpp"

namespace plucker {

// One worked example with frozen expected values.  Curve entries carry a
// curve document (and optionally a precomposition map); abstract entries
// carry directrix data directly, which is the only route for genus >= 1.
struct example_record {
  struct abstract_data {
    int n = 0;
    int g = 0;
    int rho = 0;
    bigint deg_f;
    std::vector<bigint> r_prefix;
  };
  struct expected_values {
    std::optional<bigint> deg_f;
    std::optional<std::vector<bigint>> r;  // full ramification sequence
    std::optional<bigint> deg_phi;
    std::optional<bigint> baseline;
    std::optional<bigint> theorem;
    std::optional<bigint> improvement;
    std::optional<bool> improves;
  };

  std::string name;
  std::string note;
  std::string curve_json;  // empty for abstract entries
  std::string map_expr;    // optional precomposition, e.g. "z^3"
  std::optional<abstract_data> abstract_input;
  int rho = 1;
  expected_values expected;
};

struct corpus_outcome {
  std::string name;
  bool match = true;
  std::vector<std::string> mismatches;
};

namespace detail {

template <typename T>
void check_field(corpus_outcome& out, const char* field, const std::optional<T>& expected,
                 const T& got) {
  if (!expected || *expected == got) return;
  out.match = false;
  std::string exp_s, got_s;
  if constexpr (std::is_same_v<T, bool>) {
    exp_s = *expected ? "true" : "false";
    got_s = got ? "true" : "false";
  } else if constexpr (std::is_same_v<T, bigint>) {
    exp_s = expected->str();
    got_s = got.str();
  } else {
    for (size_t j = 0; j < expected->size(); ++j) exp_s += (j ? "," : "") + (*expected)[j].str();
    for (size_t j = 0; j < got.size(); ++j) got_s += (j ? "," : "") + got[j].str();
  }
  out.mismatches.push_back(std::string(field) + ": expected " + exp_s + ", got " + got_s);
}

}  // namespace detail

inline corpus_outcome run_example(const example_record& rec) {
  corpus_outcome out;
  out.name = rec.name;

  std::optional<bound_report> bounds;
  bool has_bound_expectations = rec.expected.deg_phi || rec.expected.baseline ||
                                rec.expected.theorem || rec.expected.improvement ||
                                rec.expected.improves;

  if (rec.abstract_input) {
    const auto& a = *rec.abstract_input;
    bounds = evaluate_bounds(directrix_invariants(a.n, a.g, a.deg_f, a.rho, a.r_prefix));
  } else {
    projective_curve c = curve_from_json(json::parse(rec.curve_json));
    if (!rec.map_expr.empty()) {
      auto [num, den] = parse_self_map_expr(rec.map_expr);
      c = precompose(c, rational_self_map(std::move(num), std::move(den)));
    }
    const sequence_invariants inv = invariants(c);
    if (!verify_plucker(inv).pass) {
      out.match = false;
      out.mismatches.emplace_back("verification: nonzero residual");
    }
    detail::check_field(out, "deg_f", rec.expected.deg_f, inv.deg_f);
    detail::check_field(out, "r", rec.expected.r, inv.r);
    if (has_bound_expectations)
      bounds = evaluate_bounds(directrix_from_sequence(inv, rec.rho));
  }

  if (bounds && has_bound_expectations) {
    detail::check_field(out, "deg_phi", rec.expected.deg_phi, bounds->deg_phi);
    detail::check_field(out, "baseline", rec.expected.baseline, bounds->baseline);
    detail::check_field(out, "theorem", rec.expected.theorem, bounds->theorem);
    detail::check_field(out, "improvement", rec.expected.improvement, bounds->improvement);
    detail::check_field(out, "improves", rec.expected.improves, bounds->improves);
  }
  return out;
}

// The deterministic corpus: the Veronese and degree-3 sphere families under
// z -> z^k, the abstract torus and higher-genus families, and the rational
// normal curves.  Expected values are the closed forms of each family.
inline std::vector<example_record> builtin_corpus() {
  std::vector<example_record> corpus;

  const std::string veronese = R"({"n":2,"components":[[1],[0,1],[0,0,1]]})";
  const std::string cubic = R"({"n":2,"components":[[1],[0,1,0,1],[0,0,1]]})";

  for (int k = 1; k <= 5; ++k) {
    example_record rec;
    rec.name = "veronese-eta" + std::to_string(k);
    rec.note = "Veronese conic precomposed with z^" + std::to_string(k) +
               ": degree 2k, r0 = 2(k-1), improved bound 2k+1 vs baseline 2";
    rec.curve_json = veronese;
    if (k > 1) rec.map_expr = "z^" + std::to_string(k);
    rec.rho = 1;
    rec.expected.deg_f = 2 * k;
    rec.expected.r = std::vector<bigint>{2 * (k - 1), 2 * (k - 1)};
    rec.expected.deg_phi = 0;
    rec.expected.baseline = 2;
    rec.expected.theorem = 2 * k + 1;
    rec.expected.improvement = 2 * k - 1;
    rec.expected.improves = true;
    corpus.push_back(std::move(rec));
  }

  for (int k = 1; k <= 5; ++k) {
    example_record rec;
    rec.name = "cubic-eta" + std::to_string(k);
    rec.note = "degree-3 curve [1, z+z^3, z^2] precomposed with z^" + std::to_string(k) +
               ": degree 3k, r0 = 2(k-1), improved bound 5k+1 vs baseline 3k+2";
    rec.curve_json = cubic;
    if (k > 1) rec.map_expr = "z^" + std::to_string(k);
    rec.rho = 1;
    rec.expected.deg_f = 3 * k;
    rec.expected.r = std::vector<bigint>{2 * (k - 1), 5 * k - 2};
    rec.expected.deg_phi = k;
    rec.expected.baseline = 3 * k + 2;
    rec.expected.theorem = 5 * k + 1;
    rec.expected.improvement = 2 * k - 1;
    rec.expected.improves = true;
    corpus.push_back(std::move(rec));
  }

  for (int k = 1; k <= 5; ++k) {
    example_record rec;
    rec.name = "torus-5k-k" + std::to_string(k);
    rec.note = "genus-1 degree-5 directrix under a degree-k covering: deg(f) = 5k, r0 = 4k, "
               "improved bound 7k vs baseline 3k";
    example_record::abstract_data a;
    a.n = 2;
    a.g = 1;
    a.rho = 1;
    a.deg_f = 5 * k;
    a.r_prefix = {bigint(4 * k)};
    rec.abstract_input = a;
    rec.rho = 1;
    rec.expected.deg_phi = k;
    rec.expected.baseline = 3 * k;
    rec.expected.theorem = 7 * k;
    rec.expected.improvement = 4 * k;
    rec.expected.improves = true;
    corpus.push_back(std::move(rec));
  }

  for (int g = 2; g <= 3; ++g) {
    for (int k = g + 1; k <= g + 3; ++k) {
      example_record rec;
      rec.name = "genus" + std::to_string(g) + "-k" + std::to_string(k);
      rec.note = "genus-" + std::to_string(g) + " directrix of degree 3k with r0 = 2k+2g-2: "
                 "the transform has degree k and the improvement r0 - (g-1) is positive";
      example_record::abstract_data a;
      a.n = 2;
      a.g = g;
      a.rho = 1;
      a.deg_f = 3 * k;
      a.r_prefix = {bigint(2 * k + 2 * g - 2)};
      rec.abstract_input = a;
      rec.rho = 1;
      rec.expected.deg_phi = k;
      rec.expected.improvement = 2 * k + g - 1;
      rec.expected.improves = true;
      corpus.push_back(std::move(rec));
    }
  }

  for (int n = 1; n <= 4; ++n) {
    example_record rec;
    rec.name = "rnc-cp" + std::to_string(n);
    rec.note = "rational normal curve in CP^" + std::to_string(n) + ": unramified at every level";
    json comps = json::array();
    for (int i = 0; i <= n; ++i) {
      json coeffs = json::array();
      for (int k = 0; k < i; ++k) coeffs.push_back(0);
      coeffs.push_back(1);
      comps.push_back(std::move(coeffs));
    }
    rec.curve_json = json{{"n", n}, {"components", std::move(comps)}}.dump();
    rec.rho = 0;
    rec.expected.deg_f = n;
    rec.expected.r = std::vector<bigint>(static_cast<size_t>(n), bigint(0));
    corpus.push_back(std::move(rec));
  }

  return corpus;
}

}  // namespace plucker
