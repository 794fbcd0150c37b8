// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace plucker {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Scalar / polynomial arithmetic.
struct division_by_zero : error {
  explicit division_by_zero(const std::string& what = "division by zero") : error(what) {}
};
struct undefined_gcd : error {
  explicit undefined_gcd(const std::string& what = "gcd(0, 0) is undefined") : error(what) {}
};
struct inexact_division : error {
  explicit inexact_division(const std::string& what = "polynomial division leaves a remainder")
      : error(what) {}
};
struct bad_reversal_bound : error {
  explicit bad_reversal_bound(const std::string& what = "reversal bound below the degree")
      : error(what) {}
};
struct undefined_valuation : error {
  explicit undefined_valuation(const std::string& what = "valuation of the zero polynomial")
      : error(what) {}
};

// Curves and maps.
struct degenerate_curve : error {
  explicit degenerate_curve(const std::string& what = "all curve components are zero")
      : error(what) {}
};
struct arity_mismatch : error {
  explicit arity_mismatch(const std::string& what = "component count does not match n+1")
      : error(what) {}
};
struct degenerate_map : error {
  explicit degenerate_map(const std::string& what = "self-map of the sphere is degenerate")
      : error(what) {}
};

// Harmonic sequence analysis.
struct bad_level : error {
  explicit bad_level(const std::string& what = "level out of range") : error(what) {}
};
struct not_full : error {
  explicit not_full(const std::string& what = "curve lies in a proper projective subspace")
      : error(what) {}
};

// A violated cross-check identity.  This is a bug in the library or a broken
// input invariant, never a routine user error.
struct internal_inconsistency : error {
  explicit internal_inconsistency(const std::string& what) : error(what) {}
};

// Bound evaluators refuse +/-holomorphic directrix data (rho = 0 or rho = n).
struct not_applicable : error {
  explicit not_applicable(const std::string& what = "map is +/-holomorphic: stable, Index 0")
      : error(what) {}
};

// Malformed literals, JSON documents or command-line input.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace plucker
