// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jacobi_bc/bc_operators.hpp"
#include "jacobi_bc/characterization.hpp"
#include "jacobi_bc/forward.hpp"
#include "jacobi_bc/inverse.hpp"
#include "jacobi_bc/linalg.hpp"
#include "jacobi_bc/spectral.hpp"
#include "test_support.hpp"

using namespace jbc;
using jbc::testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double budget_s = 0;  // 0: no runtime bound
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::string detail = o.detail + "; " + timing;
  if (o.budget_s > 0 && secs >= o.budget_s) {
    o.pass = false;
    detail += " (limit " + std::to_string(o.budget_s).substr(0, 4) + " s)";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s [%s]\n", o.pass ? "PASS" : "FAIL", id, title,
              detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double rel_error(const std::vector<double>& a, const std::vector<double>& b,
                 const JacobiCoefficients& c, std::size_t horizon) {
  return jbc::testing::coefficient_error(a, b, jbc::testing::head(c.a, horizon),
                                         jbc::testing::head(c.b, horizon - 1));
}

Outcome dalembert() {
  Gen g(1001);
  double worst = 0;  // error / (1 + max|u|)
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t t_max = 20;
    const auto c = g.coefficients(t_max + 1);
    const auto f = g.control(t_max + 1);
    const auto u = step_forward(c, f, t_max);
    const auto w = goursat_kernel(c, t_max);
    double scale = 0, err = 0;
    for (std::size_t t = 0; t <= t_max; ++t)
      for (std::size_t n = 0; n <= t; ++n) {
        scale = std::max(scale, std::abs(u(n, t)));
        err = std::max(err, std::abs(u(n, t) - dalembert_solution(c, w, f, n, t)));
      }
    worst = std::max(worst, err / (1 + scale));
  }
  return {worst <= 1e-12, fmt("max scaled error %.2e over 100 sets", worst), 1.0};
}

Outcome connecting_triple() {
  Gen g(1002);
  double worst = 0;
  int cases = 0;
  for (std::size_t horizon = 1; horizon <= 10; ++horizon) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto c = g.coefficients(horizon + 3);
      const auto gram = connecting_from_gram(control_matrix(c, horizon)).values;
      const auto resp =
          connecting_from_response(response_vector(c, 2 * horizon - 1), horizon).values;
      const double scale = 1 + max_abs(gram);
      worst = std::max(worst, max_abs_diff(gram, resp) / scale);
      for (std::size_t n = horizon; n <= horizon + 2; ++n)
        for (double h : {-1.0, 0.0, 1.0}) {
          const BoundaryProblem p{c, n, h};
          const auto mu = measure_from_spectral_data(spectral_data(p));
          worst = std::max(worst,
                           max_abs_diff(gram, connecting_from_measure(mu, horizon).values) / scale);
          ++cases;
        }
    }
  }
  return {worst <= 1e-10,
          fmt("max scaled discrepancy %.2e", worst) + " over " + std::to_string(cases) +
              " measure cases",
          5.0};
}

Outcome roundtrip() {
  Gen g(1003);
  double float_err = 0, krein_gap = 0;
  int exact_misses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t horizon = g.index(1, 10);
    const auto c = g.coefficients(horizon);
    const auto r = response_vector(c, 2 * horizon - 1);
    const auto fac = recover_factorization(r, horizon);
    const auto kr = recover_krein(r, horizon);
    float_err = std::max(float_err, rel_error(fac.a, fac.b, c, horizon));
    double scale = 0, gap = 0;
    for (std::size_t k = 0; k < fac.a.size(); ++k) {
      scale = std::max({scale, std::abs(fac.a[k])});
      gap = std::max(gap, std::abs(fac.a[k] - kr.a[k]));
    }
    for (std::size_t k = 0; k < fac.b.size(); ++k) {
      scale = std::max({scale, std::abs(fac.b[k])});
      gap = std::max(gap, std::abs(fac.b[k] - kr.b[k]));
    }
    krein_gap = std::max(krein_gap, gap / scale);

    // The double coefficients are exact binary rationals, so the rational
    // pipeline must give them back exactly.
    const auto ce = to_exact(c);
    const auto ex = recover_factorization(response_vector(ce, 2 * horizon - 1), horizon);
    bool same = ex.warnings.empty();
    for (std::size_t k = 0; k < horizon; ++k) same = same && ex.a[k] == ce.a[k];
    for (std::size_t k = 0; k + 1 < horizon; ++k) same = same && ex.b[k] == ce.b[k];
    if (!same) ++exact_misses;
  }
  const bool pass = float_err <= 1e-6 && krein_gap <= 1e-6 && exact_misses == 0;
  return {pass,
          fmt("float rel error %.2e", float_err) + fmt(", krein vs factorization %.2e", krein_gap) +
              ", exact mismatches " + std::to_string(exact_misses) + "/100",
          10.0};
}

Outcome schrodinger_dets() {
  Gen g(1004);
  double worst = 0;  // |det - 1| / (l |C^l|_max)
  int exact_misses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = g.schrodinger(10);
    const auto r = response_vector(c, 19);
    const auto re = response_vector(to_exact(c), 19);
    for (std::size_t l = 1; l <= 10; ++l) {
      const auto m = connecting_from_response(r, l).values;
      worst = std::max(worst, std::abs(determinant(m) - 1) / (l * max_abs(m)));
      if (determinant(connecting_from_response(re, l).values) != Rational(1)) ++exact_misses;
    }
  }
  return {worst <= 1e-8 && exact_misses == 0,
          fmt("max |det - 1| / (l |C|) = %.2e", worst) + ", exact misses " +
              std::to_string(exact_misses) + "/1000"};
}

Outcome characterization() {
  Gen g(1005);
  int rejected_forward = 0, unflipped = 0, perturbations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t horizon = g.index(1, 10);
    const auto c = g.coefficients(horizon);
    if (!characterize_jacobi(response_vector(c, 2 * horizon - 1)).accepted()) ++rejected_forward;
  }
  const auto bad = characterize_jacobi(ResponseVector{{1, 2, 0}});
  const bool hand = !bad.accepted() && bad.failure &&
                    bad.failure->condition == Condition::not_positive_definite &&
                    bad.failure->index == 2;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t horizon = g.index(2, 10);
    // b in [-1, 1] keeps |C^T| below ~1e4, where a 1e-3 change in the corner
    // entry still exceeds the determinant tolerance 1e-8 T |C^T|.
    const auto r = response_vector(g.schrodinger(horizon, -1, 1), 2 * horizon - 1);
    if (!characterize_schrodinger(r, horizon).accepted()) {
      ++unflipped;  // the unperturbed data must pass first
      continue;
    }
    for (std::size_t m = 0; 2 * m < r.size(); ++m) {
      auto p = r;
      p.values[2 * m] += 1e-3;
      ++perturbations;
      if (characterize_schrodinger(p, horizon).accepted()) ++unflipped;
    }
  }
  return {rejected_forward == 0 && hand && unflipped == 0,
          "forward rejected " + std::to_string(rejected_forward) + "/100, (1,2,0) " +
              (hand ? "rejected at k = 2" : "NOT rejected as expected") + ", perturbations kept " +
              std::to_string(unflipped) + "/" + std::to_string(perturbations)};
}

Outcome spectral_identities() {
  Gen g(1006);
  double ortho = 0, moment = 0, h_spread = 0, edge_h0 = 0, edge_h = 0, expansion = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto c = g.coefficients(n + 1);
      const auto r = response_vector(c, 2 * n);
      std::vector<ResponseVector> by_h;
      for (double h : {-1.0, 0.0, 1.0}) {
        const BoundaryProblem p{c, n, h};
        const auto sd = spectral_data(p);
        ortho = std::max(ortho, orthogonality_residual(p, sd));
        by_h.push_back(response_from_measure(measure_from_spectral_data(sd), 2 * n));
        const auto& m = by_h.back();
        for (std::size_t t = 1; t + 1 <= 2 * n; ++t)
          moment = std::max(moment, std::abs(m[t - 1] - r[t - 1]) / (1 + std::abs(r[t - 1])));
        const double edge = std::abs(m[2 * n - 1] - r[2 * n - 1]) / (1 + std::abs(r[2 * n - 1]));
        (h == 0.0 ? edge_h0 : edge_h) = std::max(h == 0.0 ? edge_h0 : edge_h, edge);

        if (n <= 8) {
          const auto f = g.control(2 * n + 1);
          const auto v = interval_forward(p, f, 2 * n);
          for (std::size_t t = 0; t <= 2 * n; ++t) {
            const auto e = eigenexpansion_solution(p, sd, f, t);
            for (std::size_t i = 0; i <= n + 1; ++i)
              expansion = std::max(expansion, std::abs(e[i] - v(i, t)) / (1 + std::abs(v(i, t))));
          }
        }
      }
      for (std::size_t t = 1; t + 1 <= 2 * n; ++t)
        for (const auto& m : by_h)
          h_spread = std::max(h_spread, std::abs(m[t - 1] - by_h[0][t - 1]) / (1 + std::abs(r[t - 1])));
    }
  }
  const bool pass = ortho <= 1e-9 && moment <= 1e-10 && h_spread <= 1e-10 && edge_h0 <= 1e-10 &&
                    expansion <= 1e-10;
  return {pass, fmt("orthogonality %.2e", ortho) + fmt(", moments t<2N %.2e", moment) +
                    fmt(", h-spread %.2e", h_spread) + fmt(", t=2N h=0 %.2e", edge_h0) +
                    fmt(", expansion vs stepping %.2e", expansion) +
                    fmt("; note: t=2N with h=+-1 differs by up to %.2e", edge_h)};
}

Outcome measure_end_to_end() {
  Gen g(1007);
  double b_err = 0, smallest_missed = 0;
  int failed_validation = 0, missed = 0, masses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = g.schrodinger(13, -1, 1);
    const auto mu = measure_from_spectral_data(spectral_data({c, 12, 0.0}));
    const auto rep = validate_schrodinger_measure(mu, 8);
    if (!rep.accepted() || rep.b.size() < 7) {
      ++failed_validation;
      continue;
    }
    for (std::size_t k = 0; k < 7; ++k) b_err = std::max(b_err, std::abs(rep.b[k] - c.b[k]));
    for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
      auto scaled = mu;
      scaled.atoms[k].mass *= 1.01;
      ++masses;
      const auto bad = validate_schrodinger_measure(scaled, 8);
      if (bad.accepted() || bad.failure->index > 2) {
        // A mass m moves det C^1 = mu(R)^2 by about 0.02 m, invisible to the
        // 1e-8 determinant tolerance once m is below ~5e-7.
        smallest_missed = missed == 0 ? mu.atoms[k].mass : std::min(smallest_missed, mu.atoms[k].mass);
        ++missed;
      }
    }
  }
  std::string detail = "validation failures " + std::to_string(failed_validation) + "/100" +
                       fmt(", max |b_k error| %.2e", b_err) + ", scaled masses not rejected by T = 2: " +
                       std::to_string(missed) + "/" + std::to_string(masses);
  if (missed > 0) detail += fmt(" (smallest such mass %.2e)", smallest_missed);
  return {failed_validation == 0 && b_err <= 1e-6 && missed == 0, detail};
}

Outcome finite_speed() {
  Gen g(1008);
  int changed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t horizon = g.index(1, 10);
    auto c = g.coefficients(2 * horizon + 3);
    const auto r = response_vector(c, 2 * horizon);
    const auto re = response_vector(to_exact(c), 2 * horizon);
    for (std::size_t k = horizon; k < c.a.size(); ++k) c.a[k] = g.uniform(0.5, 2);
    for (std::size_t k = horizon; k < c.b.size(); ++k) c.b[k] = g.uniform(-2, 2);  // b_{T+1}..
    if (response_vector(c, 2 * horizon).values != r.values) ++changed;
    if (response_vector(to_exact(c), 2 * horizon).values != re.values) ++changed;
  }
  return {changed == 0, "responses changed " + std::to_string(changed) + "/200"};
}

}  // namespace

int main() {
  criterion(1, "d'Alembert representation matches time stepping", dalembert);
  criterion(2, "Gram, response and measure connecting matrices agree", connecting_triple);
  criterion(3, "round-trip inversion (float, rational, Krein)", roundtrip);
  criterion(4, "Schrodinger connecting determinants equal one", schrodinger_dets);
  criterion(5, "characterization soundness and rejection", characterization);
  criterion(6, "spectral identities (orthogonality, moments, eigenexpansion)",
            spectral_identities);
  criterion(7, "measure validation recovers b and rejects scaled masses", measure_end_to_end);
  criterion(8, "response of length 2T ignores coefficients beyond T", finite_speed);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
