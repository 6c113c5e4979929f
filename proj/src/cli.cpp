#include "jacobi_bc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "jacobi_bc/characterization.hpp"
#include "jacobi_bc/inverse.hpp"
#include "jacobi_bc/io.hpp"
#include "jacobi_bc/spectral.hpp"

namespace jbc::cli {

namespace {

constexpr std::pair<Command, std::string_view> kNames[] = {
    {Command::forward, "forward"},
    {Command::response, "response"},
    {Command::invert, "invert"},
    {Command::characterize, "characterize"},
    {Command::spectral_data, "spectral-data"},
    {Command::moments, "moments"},
    {Command::validate_measure, "validate-measure"},
    {Command::roundtrip, "roundtrip"},
};

// JACOBI_BC_LOG=info|debug turns on progress lines on stderr.
int log_level() {
  const char* env = std::getenv("JACOBI_BC_LOG");
  if (!env) return 0;
  const std::string_view v(env);
  if (v == "debug") return 2;
  if (v == "info") return 1;
  return 0;
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err), level_(log_level()) {}

  void info(const std::string& msg) const {
    if (level_ >= 1) err_ << "[info] " << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level_ >= 2) err_ << "[debug] " << msg << "\n";
  }
  void notice(const std::string& msg) const { err_ << "note: " << msg << "\n"; }

  void emit(const std::string& text) const {
    if (cfg_.output.empty()) {
      out_ << text;
    } else {
      io::write_text(cfg_.output, text);
      info("wrote " + cfg_.output);
    }
  }
  void emit_csv(const std::string& text) const {
    if (cfg_.csv.empty()) return;
    io::write_text(cfg_.csv, text);
    info("wrote " + cfg_.csv);
  }

  std::string input() const {
    if (cfg_.input.empty()) throw ParseError("--input is required");
    return io::read_text(cfg_.input);
  }

  std::size_t horizon() const {
    if (!cfg_.horizon) throw ParseError("-T is required for this command");
    if (*cfg_.horizon == 0) throw ParseError("-T must be positive");
    return *cfg_.horizon;
  }

  CharacterizationOptions options() const {
    CharacterizationOptions o;
    o.arithmetic = cfg_.mode == Mode::exact ? Arithmetic::exact : Arithmetic::floating;
    o.certify = cfg_.certify;
    if (cfg_.tol) o.roundtrip_tolerance = *cfg_.tol;
    if (cfg_.det_tol) o.det_tolerance = *cfg_.det_tol;
    if (cfg_.pivot_tol) o.pivot_tolerance = *cfg_.pivot_tol;
    return o;
  }

  const RunConfig& cfg() const { return cfg_; }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  int level_;
};

template <class T>
Response<T> truncate(Response<T> r, std::size_t horizon) {
  require_horizon(r, horizon);
  r.values.resize(2 * horizon - 1);
  return r;
}

int cmd_forward(const Session& s) {
  const JacobiCoefficients c = io::parse_coefficients(s.input());
  const ControlVector f = s.cfg().control.empty()
                              ? ControlVector::delta()
                              : io::parse_control(io::read_text(s.cfg().control));
  const std::size_t t_max = s.horizon();
  s.emit(io::wavefield_csv(step_forward(c, f, t_max)));
  return kOk;
}

int cmd_response(const Session& s) {
  const JacobiCoefficients c = io::parse_coefficients(s.input());
  const std::size_t horizon = s.horizon();
  s.emit(io::format_response(response_vector(c, 2 * horizon - 1)));
  return kOk;
}

template <class T>
RecoveryResult<T> recover(Method m, const Response<T>& r, std::size_t horizon) {
  return m == Method::krein ? recover_krein(r, horizon)
                            : recover_factorization(r, horizon);
}

int cmd_invert(const Session& s) {
  const std::string text = s.input();
  const Method method = s.cfg().method;
  if (s.cfg().mode == Mode::exact) {
    const Response<Rational> r = io::parse_response_exact(text);
    const std::size_t horizon = s.cfg().horizon ? s.horizon() : max_horizon(r);
    const RecoveryResult<Rational> rec = recover(method, r, horizon);
    for (const std::string& w : rec.warnings) s.notice(w);
    s.emit(io::format_coefficients(rec.coefficients()));
    s.emit_csv(io::diagnostics_csv(rec.columns, rec.diagnostics));
    return kOk;
  }
  const ResponseVector r = io::parse_response(text);
  const std::size_t horizon = s.cfg().horizon ? s.horizon() : max_horizon(r);
  const RecoveryResult<double> rec = recover(method, r, horizon);
  s.emit(io::format_coefficients(rec.coefficients()));
  s.emit_csv(io::diagnostics_csv(rec.columns, rec.diagnostics));
  return kOk;
}

int cmd_characterize(const Session& s) {
  ResponseVector r = io::parse_response(s.input());
  const std::size_t horizon = s.cfg().horizon ? s.horizon() : max_horizon(r);
  const CharacterizationOptions opt = s.options();
  CharacterizationReport rep;
  if (s.cfg().schrodinger) {
    rep = characterize_schrodinger(r, horizon, opt);
  } else {
    if (s.cfg().horizon) r = truncate(r, horizon);
    rep = characterize_jacobi(r, opt);
  }
  s.info(std::string("verdict: ") + (rep.accepted() ? "accepted" : "rejected"));
  s.emit(io::format_report(rep));
  return rep.accepted() ? kOk : kRejected;
}

int cmd_spectral_data(const Session& s) {
  if (!s.cfg().n) throw ParseError("-N is required for spectral-data");
  const BoundaryProblem p{io::parse_coefficients(s.input()), *s.cfg().n, s.cfg().h};
  const SpectralData sd = spectral_data(p);
  s.debug("orthogonality residual " + io::format_number(orthogonality_residual(p, sd)));
  s.emit(io::format_spectral_data(sd));
  return kOk;
}

int cmd_moments(const Session& s) {
  const DiscreteMeasure mu = io::parse_measure(s.input());
  const std::size_t horizon = s.horizon();
  s.emit(io::format_response(response_from_measure(mu, 2 * horizon - 1)));
  s.emit_csv(io::matrix_csv(connecting_from_measure(mu, horizon).values));
  return kOk;
}

int cmd_validate_measure(const Session& s) {
  const DiscreteMeasure mu = io::parse_measure(s.input());
  const CharacterizationReport rep =
      validate_schrodinger_measure(mu, s.horizon(), s.options());
  s.emit(io::format_report(rep));
  return rep.accepted() ? kOk : kRejected;
}

// Forward data -> response -> recovery -> compare. Exit 1 when the recovered
// coefficients miss the originals by more than the tolerance.
int cmd_roundtrip(const Session& s) {
  const JacobiCoefficients c = io::parse_coefficients(s.input());
  const std::size_t horizon = s.horizon();
  const ResponseVector r = response_vector(c, 2 * horizon - 1);
  const RecoveryResult<double> rec = recover(s.cfg().method, r, horizon);

  double err = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < horizon; ++k) {
    err = std::max(err, std::abs(rec.a[k] - c.a[k]));
    scale = std::max(scale, std::abs(c.a[k]));
  }
  for (std::size_t k = 0; k + 1 < horizon; ++k) {
    err = std::max(err, std::abs(rec.b[k] - c.b[k]));
    scale = std::max(scale, std::abs(c.b[k]));
  }
  const double rel = err / scale;
  const double tol = s.cfg().tol.value_or(1e-6);
  const bool ok = rel <= tol;

  std::ostringstream os;
  os << "{\n  \"verdict\": " << (ok ? "\"recovered\"" : "\"mismatch\"")
     << ",\n  \"horizon\": " << horizon
     << ",\n  \"max_relative_error\": " << io::format_number(rel)
     << ",\n  \"tolerance\": " << io::format_number(tol) << "\n}\n";
  s.emit(os.str());
  s.emit_csv(io::diagnostics_csv(rec.columns, rec.diagnostics));
  return ok ? kOk : kRejected;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kNames)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [cmd, n] : kNames)
    if (cmd == c) return n;
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Session s(config, out, err);
  if (config.mode == Mode::exact && config.command != Command::invert &&
      config.command != Command::characterize)
    s.notice("--mode exact is ignored by " + std::string(command_name(config.command)));

  const auto start = std::chrono::steady_clock::now();
  try {
    int status = kOk;
    switch (config.command) {
      case Command::forward: status = cmd_forward(s); break;
      case Command::response: status = cmd_response(s); break;
      case Command::invert: status = cmd_invert(s); break;
      case Command::characterize: status = cmd_characterize(s); break;
      case Command::spectral_data: status = cmd_spectral_data(s); break;
      case Command::moments: status = cmd_moments(s); break;
      case Command::validate_measure: status = cmd_validate_measure(s); break;
      case Command::roundtrip: status = cmd_roundtrip(s); break;
    }
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    s.debug(std::string(command_name(config.command)) + " took " +
            io::format_number(ms) + " ms");
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
}

}  // namespace jbc::cli
