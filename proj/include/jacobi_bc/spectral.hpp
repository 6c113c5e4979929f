#pragma once

// Spectral side: the interval problem on n = 0..N+1 with
// v[N+1][t] + h v[N][t] = 0, its eigen-data {lambda_k, rho_k}, second-kind
// Chebyshev polynomials and the atomic measure whose Chebyshev moments
// reproduce the response vector.
//
// Normalization: atoms carry mass a_0^2 / rho_k (total mass a_0 = r_0), and
// connecting_from_measure carries the prefactor mu(R). Both reduce to the
// unweighted forms when a_0 = 1.

#include <cstddef>
#include <vector>

#include "jacobi_bc/bc_operators.hpp"
#include "jacobi_bc/characterization.hpp"
#include "jacobi_bc/forward.hpp"

namespace jbc {

struct BoundaryProblem {
  JacobiCoefficients coeffs;  // window >= N + 1 (a_N enters the boundary row)
  std::size_t n = 0;
  double h = 0.0;

  void validate() const;
};

struct SpectralData {
  std::vector<double> lambdas;  // ascending
  std::vector<double> rhos;     // rho_k = a_0 sum_{i=1}^N phi_i(lambda_k)^2
  double a0 = 1.0;

  std::size_t size() const { return lambdas.size(); }
};

struct Atom {
  double point;
  double mass;
};

struct DiscreteMeasure {
  std::vector<Atom> atoms;

  // Sorted, distinct points, finite positive masses. Throws InvalidData.
  void validate() const;
  double total_mass() const;
};

// T_t(lambda): T_0 = 0, T_1 = 1, T_{t+1} = lambda T_t - T_{t-1}.
double chebyshev_u(std::size_t t, double lambda);

// T_0(lambda)..T_{count-1}(lambda).
std::vector<double> chebyshev_sequence(std::size_t count, double lambda);

// phi_0..phi_{N+1}: phi_0 = 0, phi_1 = 1,
// a_n phi_{n+1} = (lambda - b_n) phi_n - a_{n-1} phi_{n-1}.
std::vector<double> phi_solution(const JacobiCoefficients& c, double lambda,
                                 std::size_t n);

// Eigenvalues of the tridiagonal matrix with diagonal (b_1, ..., b_N - a_N h)
// and off-diagonal (a_1, ..., a_{N-1}); rho_k from the phi recursion.
SpectralData spectral_data(const BoundaryProblem& problem);

// max_k |v_k - (phi(lambda_k) / |phi(lambda_k)|)| over sign-aligned unit
// eigenvectors v_k: each eigenvector is proportional to (phi_1..phi_N).
double eigenvector_mismatch(const BoundaryProblem& problem,
                            const SpectralData& sd);

// max_{k,l} |sum_i phi_i(lambda_k) phi_i(lambda_l) - delta_kl rho_k / a_0|
// scaled by sqrt(rho_k rho_l) / a_0.
double orthogonality_residual(const BoundaryProblem& problem,
                              const SpectralData& sd);

DiscreteMeasure measure_from_spectral_data(const SpectralData& sd);

// r_{t-1} = sum mass * T_t(point), t = 1..K.
ResponseVector response_from_measure(const DiscreteMeasure& mu, std::size_t k);

// C_ij = mu(R) sum mass * T_{T-i+1}(point) T_{T-j+1}(point).
ConnectingMatrix connecting_from_measure(const DiscreteMeasure& mu,
                                         std::size_t horizon);

// Accepts when C^T > 0 and det C^T = 1 for T = 1..T_max; b_1..b_{T_max-1} are
// then recovered from the rotated matrix.
CharacterizationReport validate_schrodinger_measure(
    const DiscreteMeasure& mu, std::size_t t_max,
    const CharacterizationOptions& options = {});

// v[n][t] for n = 0..N+1, t = 0..T_max.
Wavefield<double> interval_forward(const BoundaryProblem& problem,
                                   const ControlVector& f, std::size_t t_max,
                                   Execution exec = Execution::parallel);

// v[0..N+1][t] as sum_k c^k_t phi_n(lambda_k),
// c^k_t = (a_0^2 / rho_k) sum_{l=0}^{t} T_l(lambda_k) f_{t-l}.
// sd must come from spectral_data(problem).
std::vector<double> eigenexpansion_solution(const BoundaryProblem& problem,
                                            const SpectralData& sd,
                                            const ControlVector& f,
                                            std::size_t t);

std::vector<double> eigenexpansion_solution(const BoundaryProblem& problem,
                                            const ControlVector& f,
                                            std::size_t t);

}  // namespace jbc
