// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

#include "plucker/index_bounds.hpp"
#include "plucker/literals.hpp"
#include "plucker/projective_curve.hpp"

namespace plucker {

using nlohmann::json;

// Integers are arbitrary precision throughout: emitted as JSON numbers while
// they fit in 64 bits, as decimal strings beyond that.
inline json bigint_to_json(const bigint& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline bigint bigint_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return bigint(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const parse_error&) {
      throw parse_error(path + ": \"" + j.get<std::string>() + "\" is not an integer");
    }
  }
  throw parse_error(path + ": expected an integer or a decimal string");
}

inline json bigints_to_json(const std::vector<bigint>& vs) {
  json arr = json::array();
  for (const bigint& v : vs) arr.push_back(bigint_to_json(v));
  return arr;
}

// Curve document: { "n": int, "components": [ [coeff, ...], ... ] } with each
// coefficient a scalar literal string ("3", "-1/2", "1/2+3*i") or a plain
// JSON integer.  Components list coefficients by ascending power of z.
inline projective_curve curve_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("/: expected a JSON object");
  if (!doc.contains("n")) throw parse_error("/n: missing");
  if (!doc["n"].is_number_integer()) throw parse_error("/n: expected an integer");
  const int n = doc["n"].get<int>();
  if (n < 1) throw parse_error("/n: must be at least 1");
  if (!doc.contains("components") || !doc["components"].is_array())
    throw parse_error("/components: expected an array of coefficient arrays");
  const json& comps = doc["components"];
  if (comps.size() != static_cast<size_t>(n) + 1)
    throw parse_error("/components: expected " + std::to_string(n + 1) + " entries, got " +
                      std::to_string(comps.size()));
  std::vector<polynomial> polys;
  polys.reserve(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    const std::string comp_path = "/components/" + std::to_string(i);
    if (!comps[i].is_array()) throw parse_error(comp_path + ": expected a coefficient array");
    std::vector<gaussian_rational> coeffs;
    coeffs.reserve(comps[i].size());
    for (size_t k = 0; k < comps[i].size(); ++k) {
      const json& c = comps[i][k];
      const std::string path = comp_path + "/" + std::to_string(k);
      if (c.is_number_integer()) {
        coeffs.emplace_back(rational(bigint(c.get<std::int64_t>())));
      } else if (c.is_string()) {
        try {
          coeffs.push_back(parse_gaussian(c.get<std::string>()));
        } catch (const parse_error& e) {
          throw parse_error(path + ": " + e.what());
        }
      } else {
        throw parse_error(path + ": expected a literal string or integer");
      }
    }
    polys.emplace_back(std::move(coeffs));
  }
  try {
    return make_curve(n, std::move(polys));
  } catch (const arity_mismatch& e) {
    throw parse_error(std::string("/components: ") + e.what());
  }
}

// Canonical echo: coefficients as literal strings, ascending powers.
inline json curve_to_json(const projective_curve& c) {
  json comps = json::array();
  for (const polynomial& p : c.components()) {
    json coeffs = json::array();
    for (const gaussian_rational& a : p.coefficients()) coeffs.push_back(a.str());
    comps.push_back(std::move(coeffs));
  }
  return json{{"n", c.n()}, {"degree", c.degree()}, {"components", std::move(comps)}};
}

inline json to_json(const sequence_invariants& inv) {
  return json{{"n", inv.n},
              {"g", inv.g},
              {"deg_f", bigint_to_json(inv.deg_f)},
              {"d", bigints_to_json(inv.d)},
              {"G", bigints_to_json(inv.G)},
              {"r", bigints_to_json(inv.r)},
              {"map_deg", bigints_to_json(inv.map_deg)}};
}

inline json to_json(const verification_report& rep) {
  return json{{"recursion_residuals", bigints_to_json(rep.recursion_residuals)},
              {"ramrelation_residual", bigint_to_json(rep.ramrelation_residual)},
              {"degree_residuals", bigints_to_json(rep.degree_residuals)},
              {"pass", rep.pass}};
}

inline json to_json(const bound_report& rep) {
  json inputs{{"n", rep.n},
              {"g", rep.g},
              {"deg_f", bigint_to_json(rep.deg_f)},
              {"rho", rep.rho},
              {"r_prefix", bigints_to_json(rep.r_prefix)}};
  if (rep.r_full) inputs["r_full"] = bigints_to_json(*rep.r_full);
  json out{{"inputs", std::move(inputs)},
           {"deg_phi", bigint_to_json(rep.deg_phi)},
           {"applicable", rep.applicable},
           {"notes", rep.notes}};
  if (rep.applicable) {
    out["baseline"] = bigint_to_json(rep.baseline);
    out["theorem"] = bigint_to_json(rep.theorem);
    out["corollary"] = bigint_to_json(rep.corollary);
    out["improvement"] = bigint_to_json(rep.improvement);
    out["improves"] = rep.improves;
    out["vacuous"] = rep.vacuous;
  }
  return out;
}

}  // namespace plucker
