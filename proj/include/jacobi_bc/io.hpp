#pragma once

// Structured-text (JSON) readers and writers shared by every CLI command, plus
// CSV export. Numbers are written with 17 significant digits, so a value read
// back is the same double and repeated runs are byte-identical.
//
//   coefficients   {"a": [...], "b": [...]}
//   control        {"f": [...]}
//   response       {"r": [...]}
//   measure        {"atoms": [[point, mass], ...]}
//
// Numeric entries may also be strings holding a rational "p/q"; the exact
// readers keep them exact, the floating readers round them.

#include <filesystem>
#include <string>
#include <vector>

#include "jacobi_bc/bc_operators.hpp"
#include "jacobi_bc/characterization.hpp"
#include "jacobi_bc/forward.hpp"
#include "jacobi_bc/inverse.hpp"
#include "jacobi_bc/spectral.hpp"

namespace jbc::io {

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

std::string format_number(double x);

JacobiCoefficients parse_coefficients(const std::string& text);
ControlVector parse_control(const std::string& text);
ResponseVector parse_response(const std::string& text);
Response<Rational> parse_response_exact(const std::string& text);
DiscreteMeasure parse_measure(const std::string& text);

std::string format_coefficients(const JacobiCoefficients& c);
// Adds "a_exact"/"b_exact" string arrays next to the rounded values.
std::string format_coefficients(const Coefficients<Rational>& c);
std::string format_response(const ResponseVector& r);
std::string format_measure(const DiscreteMeasure& mu);
std::string format_spectral_data(const SpectralData& sd);
std::string format_matrix(const Matrix<double>& m);
std::string format_report(const CharacterizationReport& rep);

std::string wavefield_csv(const Wavefield<double>& u);
std::string matrix_csv(const Matrix<double>& m);
std::string diagnostics_csv(const std::vector<std::string>& columns,
                            const std::vector<std::vector<double>>& rows);

}  // namespace jbc::io
