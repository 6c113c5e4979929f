#pragma once

// Batch front end. `run` does all the work so it can be driven from tests
// without spawning processes; tools/jacobi_bc_main.cpp only parses argv.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace jbc::cli {

enum class Command {
  forward,
  response,
  invert,
  characterize,
  spectral_data,
  moments,
  validate_measure,
  roundtrip,
};

enum class Method { factorization, krein };
enum class Mode { floating, exact };

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;
inline constexpr int kMalformed = 2;

struct RunConfig {
  Command command = Command::forward;
  std::string input;    // coefficients / response / measure, per command
  std::string control;  // forward: optional {"f": [...]}, default delta
  std::string output;   // empty: standard output
  std::string csv;      // optional CSV export (wavefield, diagnostics, matrix)

  std::optional<std::size_t> horizon;  // -T
  std::optional<std::size_t> n;        // -N
  double h = 0.0;

  Method method = Method::factorization;
  Mode mode = Mode::floating;
  bool schrodinger = false;  // characterize: a == 1 variant
  bool certify = true;

  std::optional<double> tol;            // round-trip tolerance
  std::optional<double> det_tol;
  std::optional<double> pivot_tol;
};

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

// Writes the primary output to `out` (or config.output) and diagnostics to
// `err`. Never throws; errors become kMalformed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace jbc::cli
