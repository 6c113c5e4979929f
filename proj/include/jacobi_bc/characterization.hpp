#pragma once

// Is a candidate vector the response vector of some Jacobi system (or of a
// discrete Schrödinger system, a == 1)? The test is positive definiteness of
// the connecting matrix (plus det C^l == 1 in the Schrödinger case); on
// acceptance the coefficients are reconstructed and re-simulated as a
// constructive certificate.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "jacobi_bc/bc_operators.hpp"
#include "jacobi_bc/linalg.hpp"

namespace jbc {

enum class Arithmetic { floating, exact };

enum class Verdict { accepted, rejected };

enum class Condition {
  invalid_first_entry,    // r_0 <= 0 (Jacobi) or r_0 != 1 (Schrödinger)
  not_positive_definite,  // index = first failing leading dimension k
  det_not_one,            // index = l
  roundtrip_mismatch,     // index = t
};

struct Failure {
  Condition condition;
  std::size_t index = 0;
  double witness = 0.0;
};

struct CharacterizationReport {
  Verdict verdict = Verdict::rejected;
  std::optional<Failure> failure;
  std::size_t horizon = 0;

  // Witnesses. NaN when the corresponding check did not run.
  double smallest_relative_pivot = std::numeric_limits<double>::quiet_NaN();
  double max_det_deviation = std::numeric_limits<double>::quiet_NaN();
  double max_response_mismatch = std::numeric_limits<double>::quiet_NaN();

  // Recovered coefficients on acceptance (a_0..a_{T-1}, b_1..b_{T-1}).
  std::vector<double> a;
  std::vector<double> b;
  std::vector<std::string> warnings;

  bool accepted() const { return verdict == Verdict::accepted; }
};

struct CharacterizationOptions {
  Arithmetic arithmetic = Arithmetic::floating;
  bool certify = true;                       // constructive round trip
  double pivot_tolerance = kPivotTolerance;  // d_k > tol * C̄_kk
  double det_tolerance = 1e-8;               // |det C^l - 1| <= tol * l * |C^l|_max
  double roundtrip_tolerance = 1e-6;         // |r - r_new|_inf <= tol * |r|_inf
  double first_entry_tolerance = 1e-12;      // |r_0 - 1| for Schrödinger data
};

// r has odd length 2T - 1.
CharacterizationReport characterize_jacobi(
    const ResponseVector& r, const CharacterizationOptions& options = {});

// Uses r_0..r_{2T-2}.
CharacterizationReport characterize_schrodinger(
    const ResponseVector& r, std::size_t horizon,
    const CharacterizationOptions& options = {});

// Shared by validate_schrodinger_measure: checks a family of rotated
// connecting matrices C̄^1..C̄^T given as the leading blocks of `cbar`.
CharacterizationReport check_schrodinger_connecting(
    const Matrix<double>& cbar, std::size_t horizon,
    const CharacterizationOptions& options);

std::string to_string(Condition c);

}  // namespace jbc
