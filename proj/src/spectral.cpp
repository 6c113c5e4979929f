#include "jacobi_bc/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "jacobi_bc/error.hpp"

namespace jbc {

void BoundaryProblem::validate() const {
  coeffs.validate();
  if (n == 0) throw Error("interval length N must be positive");
  if (coeffs.window() < n + 1)
    throw WindowTooSmall("interval problem with N = " + std::to_string(n) +
                         " needs coefficient window >= N + 1 = " +
                         std::to_string(n + 1));
  if (!std::isfinite(h)) throw InvalidCoefficients("h must be finite");
}

void DiscreteMeasure::validate() const {
  if (atoms.empty()) throw InvalidData(0, "measure has no atoms");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!std::isfinite(atoms[i].point))
      throw InvalidData(i, "atom " + std::to_string(i) + " has a non-finite point");
    if (!std::isfinite(atoms[i].mass) || !(atoms[i].mass > 0))
      throw InvalidData(i, "atom " + std::to_string(i) +
                               " must have positive finite mass");
    if (i > 0 && !(atoms[i - 1].point < atoms[i].point))
      throw InvalidData(i, "atom points must be strictly increasing");
  }
}

double DiscreteMeasure::total_mass() const {
  double m = 0.0;
  for (const Atom& x : atoms) m += x.mass;
  return m;
}

double chebyshev_u(std::size_t t, double lambda) {
  if (t == 0) return 0.0;
  double prev = 0.0, cur = 1.0;
  for (std::size_t k = 1; k < t; ++k) {
    const double next = lambda * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> chebyshev_sequence(std::size_t count, double lambda) {
  std::vector<double> u(count, 0.0);
  if (count > 1) u[1] = 1.0;
  for (std::size_t t = 2; t < count; ++t) u[t] = lambda * u[t - 1] - u[t - 2];
  return u;
}

std::vector<double> phi_solution(const JacobiCoefficients& c, double lambda,
                                 std::size_t n) {
  c.validate();
  if (c.window() < n + 1)
    throw WindowTooSmall("phi_" + std::to_string(n + 1) +
                         " needs coefficient window >= " + std::to_string(n + 1));
  std::vector<double> phi(n + 2, 0.0);
  phi[1] = 1.0;
  for (std::size_t k = 1; k <= n; ++k)
    phi[k + 1] = ((lambda - c.b_at(k)) * phi[k] - c.a_at(k - 1) * phi[k - 1]) /
                 c.a_at(k);
  return phi;
}

namespace {

struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
};

Tridiagonal interval_matrix(const BoundaryProblem& p) {
  Tridiagonal m{Eigen::VectorXd(p.n), Eigen::VectorXd(p.n > 1 ? p.n - 1 : 0)};
  for (std::size_t k = 1; k <= p.n; ++k) m.diag[k - 1] = p.coeffs.b_at(k);
  m.diag[p.n - 1] -= p.coeffs.a_at(p.n) * p.h;
  for (std::size_t k = 1; k < p.n; ++k) m.sub[k - 1] = p.coeffs.a_at(k);
  return m;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_interval(
    const BoundaryProblem& p, bool vectors) {
  const Tridiagonal m = interval_matrix(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(m.diag, m.sub,
                            vectors ? Eigen::ComputeEigenvectors
                                    : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("tridiagonal eigen-solver did not converge for N = " +
                           std::to_string(p.n));
  return es;
}

}  // namespace

SpectralData spectral_data(const BoundaryProblem& problem) {
  problem.validate();
  const auto es = solve_interval(problem, false);
  SpectralData sd;
  sd.a0 = problem.coeffs.a_at(0);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    sd.lambdas.push_back(es.eigenvalues()[k]);
  for (std::size_t k = 1; k < sd.lambdas.size(); ++k)
    if (!(sd.lambdas[k - 1] < sd.lambdas[k]))
      throw ConvergenceError("eigenvalues " + std::to_string(k - 1) + " and " +
                             std::to_string(k) + " are not separated");
  for (double lambda : sd.lambdas) {
    const std::vector<double> phi = phi_solution(problem.coeffs, lambda, problem.n);
    double s = 0.0;
    for (std::size_t i = 1; i <= problem.n; ++i) s += phi[i] * phi[i];
    sd.rhos.push_back(sd.a0 * s);
  }
  return sd;
}

double eigenvector_mismatch(const BoundaryProblem& problem,
                            const SpectralData& sd) {
  problem.validate();
  const auto es = solve_interval(problem, true);
  double worst = 0.0;
  for (std::size_t k = 0; k < sd.size(); ++k) {
    const std::vector<double> phi =
        phi_solution(problem.coeffs, sd.lambdas[k], problem.n);
    const double norm = std::sqrt(sd.rhos[k] / sd.a0);
    const auto v = es.eigenvectors().col(static_cast<Eigen::Index>(k));
    // phi_1 = 1 > 0, so align the eigenvector sign on its first entry.
    const double sign = v[0] < 0 ? -1.0 : 1.0;
    for (std::size_t i = 1; i <= problem.n; ++i)
      worst = std::max(worst, std::abs(sign * v[static_cast<Eigen::Index>(i - 1)] -
                                       phi[i] / norm));
  }
  return worst;
}

double orthogonality_residual(const BoundaryProblem& problem,
                              const SpectralData& sd) {
  std::vector<std::vector<double>> phis;
  for (double lambda : sd.lambdas)
    phis.push_back(phi_solution(problem.coeffs, lambda, problem.n));
  double worst = 0.0;
  for (std::size_t k = 0; k < sd.size(); ++k) {
    for (std::size_t l = 0; l < sd.size(); ++l) {
      const double scale = std::sqrt(sd.rhos[k] * sd.rhos[l]) / sd.a0;
      double s = 0.0;
      for (std::size_t i = 1; i <= problem.n; ++i) s += phis[k][i] * phis[l][i];
      if (k == l) s -= scale;
      worst = std::max(worst, std::abs(s) / scale);
    }
  }
  return worst;
}

DiscreteMeasure measure_from_spectral_data(const SpectralData& sd) {
  DiscreteMeasure mu;
  for (std::size_t k = 0; k < sd.size(); ++k)
    mu.atoms.push_back({sd.lambdas[k], sd.a0 * sd.a0 / sd.rhos[k]});
  return mu;
}

ResponseVector response_from_measure(const DiscreteMeasure& mu, std::size_t k) {
  ResponseVector r;
  r.values.assign(k, 0.0);
  for (const Atom& x : mu.atoms) {
    const std::vector<double> u = chebyshev_sequence(k + 1, x.point);
    for (std::size_t t = 1; t <= k; ++t) r.values[t - 1] += x.mass * u[t];
  }
  return r;
}

ConnectingMatrix connecting_from_measure(const DiscreteMeasure& mu,
                                         std::size_t horizon) {
  if (horizon == 0) throw Error("horizon T must be positive");
  ConnectingMatrix c{Matrix<double>(horizon, horizon), Orientation::plain};
  for (const Atom& x : mu.atoms) {
    const std::vector<double> u = chebyshev_sequence(horizon + 1, x.point);
    for (std::size_t i = 1; i <= horizon; ++i)
      for (std::size_t j = 1; j <= horizon; ++j)
        c.values(i - 1, j - 1) +=
            x.mass * u[horizon - i + 1] * u[horizon - j + 1];
  }
  const double total = mu.total_mass();
  for (std::size_t i = 0; i < horizon; ++i)
    for (std::size_t j = 0; j < horizon; ++j) c.values(i, j) *= total;
  return c;
}

CharacterizationReport validate_schrodinger_measure(
    const DiscreteMeasure& mu, std::size_t t_max,
    const CharacterizationOptions& options) {
  mu.validate();
  if (t_max == 0) throw Error("T_max must be positive");
  // The rotated matrix of horizon T_max has C̄^T as its leading blocks.
  const Matrix<double> cbar =
      rotate_connecting(connecting_from_measure(mu, t_max)).values;
  return check_schrodinger_connecting(cbar, t_max, options);
}

Wavefield<double> interval_forward(const BoundaryProblem& problem,
                                   const ControlVector& f, std::size_t t_max,
                                   Execution exec) {
  problem.validate();
  if (t_max == 0) throw Error("t_max must be positive");
  const std::size_t n = problem.n;
  Wavefield<double> v(n + 1, t_max);
  const auto s = detail::stencil(problem.coeffs, n + 1);
  const std::span<const double> a(s.a), b(s.b);
  for (std::size_t t = 0; t <= t_max; ++t) v(0, t) = f.at(static_cast<std::ptrdiff_t>(t));

  const std::vector<double> zero_row(n + 3, 0.0);
  for (std::size_t t = 0; t < t_max; ++t) {
    std::span<const double> prev =
        t == 0 ? std::span<const double>(zero_row) : v.row(t - 1);
    std::span<const double> cur = v.row(t);
    std::span<double> next = v.row(t + 1);
    kernels::advance<double>(exec, a, b, prev, cur, next, 1, std::min(t + 1, n));
    next[0] = f.at(static_cast<std::ptrdiff_t>(t + 1));
    next[n + 1] = -problem.h * next[n];
  }
  return v;
}

std::vector<double> eigenexpansion_solution(const BoundaryProblem& problem,
                                            const SpectralData& sd,
                                            const ControlVector& f,
                                            std::size_t t) {
  problem.validate();
  const std::size_t n = problem.n;
  if (sd.size() != n)
    throw Error("spectral data has " + std::to_string(sd.size()) +
                " eigenvalues, expected N = " + std::to_string(n));
  // (a_0^2 / rho_k) phi_n(lambda_k) = a_0 q_1 q_n for the unit eigenvector q,
  // since phi_1 = 1. The solver's q is accurate where the phi recursion run up
  // to site N is not (eigenvectors localized away from site 1).
  const auto es = solve_interval(problem, true);
  const auto& q = es.eigenvectors();
  std::vector<double> v(n + 2, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const std::vector<double> u = chebyshev_sequence(t + 1, sd.lambdas[k]);
    double c = 0.0;
    for (std::size_t l = 0; l <= t; ++l)
      c += u[l] * f.at(static_cast<std::ptrdiff_t>(t - l));
    c *= sd.a0 * q(0, col);
    for (std::size_t i = 1; i <= n; ++i)
      v[i] += c * q(static_cast<Eigen::Index>(i - 1), col);
  }
  v[0] = f.at(static_cast<std::ptrdiff_t>(t));
  // phi_{N+1} = -h phi_N only up to eigenvalue roundoff; impose it exactly.
  v[n + 1] = -problem.h * v[n];
  return v;
}

std::vector<double> eigenexpansion_solution(const BoundaryProblem& problem,
                                            const ControlVector& f,
                                            std::size_t t) {
  return eigenexpansion_solution(problem, spectral_data(problem), f, t);
}

}  // namespace jbc
