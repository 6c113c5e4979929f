#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "jacobi_bc/cli.hpp"

using jbc::cli::Command;
using jbc::cli::RunConfig;

namespace {

struct Flags {
  bool input = false, control = false, horizon = false, n = false, h = false;
  bool method = false, mode = false, schrodinger = false, csv = false;
};

CLI::App* add(CLI::App& app, RunConfig& cfg, Command c, const char* help,
              const Flags& f) {
  CLI::App* sub = app.add_subcommand(std::string(jbc::cli::command_name(c)), help);
  sub->callback([&cfg, c] { cfg.command = c; });
  if (f.input) sub->add_option("-i,--input", cfg.input, "input file")->required();
  if (f.control) sub->add_option("--control", cfg.control, "control file {\"f\": [...]} (default: delta)");
  if (f.horizon) sub->add_option("-T,--horizon", cfg.horizon, "horizon T");
  if (f.n) sub->add_option("-N", cfg.n, "interval length N")->required();
  if (f.h) sub->add_option("--h", cfg.h, "boundary parameter h");
  if (f.method)
    sub->add_option("--method", cfg.method, "factorization | krein")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, jbc::cli::Method>{
                {"factorization", jbc::cli::Method::factorization},
                {"krein", jbc::cli::Method::krein}}));
  if (f.schrodinger) {
    sub->add_flag("--schrodinger", cfg.schrodinger, "test for a == 1 data");
    sub->add_flag("!--no-certify", cfg.certify, "skip the round-trip certificate");
    sub->add_option("--det-tol", cfg.det_tol, "det C^l - 1 tolerance factor");
    sub->add_option("--pivot-tol", cfg.pivot_tol, "relative LDL pivot threshold");
  }
  if (f.csv) sub->add_option("--csv", cfg.csv, "CSV export path");
  sub->add_option("-o,--output", cfg.output, "output file (default: stdout)");
  sub->add_option("--tol", cfg.tol, "round-trip tolerance");
  sub->add_option("--mode", cfg.mode, "float | exact")
      ->transform(CLI::CheckedTransformer(std::map<std::string, jbc::cli::Mode>{
          {"float", jbc::cli::Mode::floating}, {"exact", jbc::cli::Mode::exact}}));
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary Control toolkit for Jacobi matrices"};
  app.set_help_flag("--help", "print help");  // -h is taken by --h
  app.require_subcommand(1);
  RunConfig cfg;

  add(app, cfg, Command::forward, "time-step the half-line system; CSV n,t,value",
      {.input = true, .control = true, .horizon = true});
  add(app, cfg, Command::response, "response vector r_0..r_{2T-2}",
      {.input = true, .horizon = true});
  add(app, cfg, Command::invert, "recover coefficients from a response vector",
      {.input = true, .horizon = true, .method = true, .csv = true});
  add(app, cfg, Command::characterize, "is this a response vector?",
      {.input = true, .horizon = true, .schrodinger = true});
  add(app, cfg, Command::spectral_data, "eigen-data and spectral measure of the interval problem",
      {.input = true, .n = true, .h = true});
  add(app, cfg, Command::moments, "Chebyshev moments r_0..r_{2T-2} of a measure",
      {.input = true, .horizon = true, .csv = true});
  add(app, cfg, Command::validate_measure, "is this the measure of a Schrödinger operator?",
      {.input = true, .horizon = true, .schrodinger = true});
  add(app, cfg, Command::roundtrip, "response -> recovery -> compare",
      {.input = true, .horizon = true, .method = true, .csv = true});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jbc::cli::kMalformed;
  }
  return jbc::cli::run(cfg, std::cout, std::cerr);
}
