#pragma once

// Recovery of (a_0..a_{T-1}, b_1..b_{T-1}) from r_0..r_{2T-2}.
//
// Two independent routes:
//  * Krein: for each horizon n solve C^n f^n = a_0 (beta kappa - alpha R* kappa),
//    which steers the system to the solution y of the three-term equation
//    with y_0 = alpha, y_1 = beta; read b_{n-1}, a_{n-1} off the last two
//    entries of W^n f^n.
//  * Factorization: C̄ = W̄^* W̄ with W̄ upper triangular, so leading minors
//    of C̄ give the products a_0...a_{k-1} and bordered minors give the
//    partial sums b_1 + ... + b_k.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "jacobi_bc/bc_operators.hpp"
#include "jacobi_bc/error.hpp"
#include "jacobi_bc/linalg.hpp"
#include "jacobi_bc/scalar.hpp"

namespace jbc {

template <class T>
struct RecoveryResult {
  std::vector<T> a;  // a_0..a_{T-1}
  std::vector<T> b;  // b_1..b_{T-1}
  std::vector<std::string> columns;
  std::vector<std::vector<double>> diagnostics;  // one row per step
  std::vector<std::string> warnings;

  Coefficients<T> coefficients() const {
    Coefficients<T> c{a, b};
    c.b.push_back(T(0));  // b_T is not determined by r_0..r_{2T-2}
    return c;
  }
};

namespace detail {

template <class T>
T checked_sqrt(const T& x, std::size_t index, std::vector<std::string>& warnings,
               const char* what) {
  if (!(x > 0))
    throw InvalidData(index, std::string(what) + " is not positive at k = " +
                                 std::to_string(index));
  if constexpr (is_exact_v<T>) {
    if (auto root = exact_sqrt(x)) return *root;
    warnings.push_back(std::string(what) + " at k = " + std::to_string(index) +
                       " is not a rational square; used floating-point root");
    return Rational(std::sqrt(to_double(x)));
  } else {
    return std::sqrt(x);
  }
}

}  // namespace detail

// kappa_0..kappa_{T-1} from kappa_{t+1} + kappa_{t-1} = 0, kappa_T = 0,
// kappa_{T-1} = 1.
template <class T = double>
std::vector<T> kappa_vector(std::size_t horizon) {
  if (horizon == 0) throw Error("horizon T must be positive");
  std::vector<T> k(horizon + 1, T(0));
  k[horizon - 1] = T(1);
  for (std::size_t t = horizon - 1; t >= 1; --t) k[t - 1] = -k[t + 1];
  k.pop_back();
  return k;
}

template <class T>
struct KreinProblem {
  T alpha;
  T beta;
  std::vector<T> kappa;
  Control<T> control;   // f^T
  double residual = 0;  // ||C f - rhs||_inf / ||rhs||_inf (0 for rhs = 0)
};

template <class T>
KreinProblem<T> krein_problem(const Response<T>& r, std::size_t horizon,
                              const T& alpha, const T& beta) {
  const Connecting<T> c = connecting_from_response(r, horizon);
  KreinProblem<T> out{alpha, beta, kappa_vector<T>(horizon), {}, 0.0};

  // (R^T)^* kappa pairs kappa_t with (R g)_t, t = 1..T, and kappa_T = 0.
  std::vector<T> shifted(out.kappa.begin() + 1, out.kappa.end());
  shifted.push_back(T(0));
  const std::vector<T> adj = adjoint_response(r, shifted);
  std::vector<T> rhs(horizon);
  for (std::size_t s = 0; s < horizon; ++s)
    rhs[s] = r[0] * (beta * out.kappa[s] - alpha * adj[s]);

  out.control.values = solve_spd(c.values, rhs);

  const std::vector<T> back = c.values.apply(out.control.values);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < horizon; ++i) {
    num = std::max(num, std::abs(to_double(back[i]) - to_double(rhs[i])));
    den = std::max(den, std::abs(to_double(rhs[i])));
  }
  out.residual = den > 0 ? num / den : num;
  return out;
}

template <class T>
Control<T> solve_krein(const Response<T>& r, std::size_t horizon,
                       const T& alpha, const T& beta) {
  return krein_problem(r, horizon, alpha, beta).control;
}

template <class T>
RecoveryResult<T> recover_krein(const Response<T>& r, std::size_t horizon) {
  require_horizon(r, horizon);
  if (!(r[0] > 0)) throw InvalidData(0, "r_0 = a_0 must be positive");

  RecoveryResult<T> out;
  out.columns = {"n", "alpha", "beta", "f0", "f1", "residual"};
  out.a.push_back(r[0]);

  // Two independent solutions of the three-term equation. Their Casoratian
  // a_{n-1}(y_n z_{n-1} - y_{n-1} z_n) = -a_0 never vanishes, so at every
  // step at least one of them has y_n != 0 (equivalently f^n_0 != 0).
  struct Track {
    T alpha, beta;
    std::vector<T> y;
  };
  std::vector<Track> tracks = {{T(0), T(1), {T(0), T(1)}},
                               {T(1), T(0), {T(1), T(0)}}};
  std::vector<T> p = {T(1), r[0]};  // P_n = a_0...a_{n-1}
  T b_sum(0);

  for (std::size_t n = 2; n <= horizon; ++n) {
    const Track* best = nullptr;
    KreinProblem<T> chosen;
    double best_score = -1.0;
    for (const Track& tr : tracks) {
      KreinProblem<T> kp = krein_problem(r, n, tr.alpha, tr.beta);
      const double proxy = std::abs(to_double(p[n - 1] * kp.control.values[0]));
      const double prev = std::abs(to_double(tr.y[n - 1]));
      const double score = proxy > 0 ? proxy / (prev + proxy) : 0.0;
      if (score > best_score) {
        best_score = score;
        best = &tr;
        chosen = std::move(kp);
      }
    }
    const T& f0 = chosen.control.values[0];
    const T& f1 = chosen.control.values[1];
    if (f0 == 0 || best_score < 64 * std::numeric_limits<double>::epsilon())
      throw DegenerateControl(n, "Krein control f^" + std::to_string(n) +
                                     "_0 vanishes; cannot recover b_" +
                                     std::to_string(n - 1));

    // y_{n-1} = P_{n-1} (f_1 + (b_1 + ... + b_{n-1}) f_0)
    const std::vector<T>& y = best->y;
    const T partial = (y[n - 1] / p[n - 1] - f1) / f0;
    const T b_new = partial - b_sum;
    b_sum = partial;

    // y_n = P_{n-1} a_{n-1} f_0 and a_{n-1} y_n = -(a_{n-2} y_{n-2} + b_{n-1} y_{n-1})
    const T q = -(out.a[n - 2] * y[n - 2] + b_new * y[n - 1]);
    const T a_sq = q / (p[n - 1] * f0);
    const T a_new = detail::checked_sqrt(a_sq, n - 1, out.warnings, "a_k^2");

    out.diagnostics.push_back({static_cast<double>(n), to_double(best->alpha),
                               to_double(best->beta), to_double(f0),
                               to_double(f1), chosen.residual});
    out.a.push_back(a_new);
    out.b.push_back(b_new);
    p.push_back(p[n - 1] * a_new);
    for (Track& tr : tracks)
      tr.y.push_back(-(out.a[n - 2] * tr.y[n - 2] + b_new * tr.y[n - 1]) / a_new);
  }
  return out;
}

// Bordered minor C̄^k_{k+1}: leading k x k block with its last column
// replaced by (c̄_{1,k+1}, ..., c̄_{k,k+1}).
template <class T>
Matrix<T> bordered_minor(const Matrix<T>& cbar, std::size_t k) {
  Matrix<T> m = cbar.leading(k);
  for (std::size_t i = 0; i < k; ++i) m(i, k - 1) = cbar(i, k);
  return m;
}

// det C̄^k for k = 0..horizon (det C̄^0 = 1).
template <class T>
std::vector<T> leading_determinants(const Matrix<T>& cbar, std::size_t horizon) {
  std::vector<T> d(horizon + 1, T(1));
  for (std::size_t k = 1; k <= horizon; ++k) d[k] = determinant(cbar.leading(k));
  return d;
}

// a_k = sqrt(det C̄^{k+1} det C̄^{k-1}) / det C̄^k,
// b_k = det C̄^k_{k+1} / det C̄^k - det C̄^{k-1}_k / det C̄^{k-1},
// with det C̄^0 = det C̄^{-1} = 1 and det C̄^0_1 = 0.
//
// `cbar` is the rotated connecting matrix of horizon >= `horizon`.
template <class T>
RecoveryResult<T> recover_from_rotated(const Matrix<T>& cbar,
                                       std::size_t horizon) {
  if (horizon == 0 || cbar.rows() < horizon)
    throw WindowTooSmall("rotated connecting matrix is smaller than horizon");
  const std::vector<T> det = leading_determinants(cbar, horizon);
  for (std::size_t k = 1; k <= horizon; ++k)
    if (!(det[k] > 0))
      throw InvalidData(k, "det C̄^" + std::to_string(k) +
                               " is not positive; data is not a response vector");

  auto det_at = [&](std::ptrdiff_t k) -> const T& {
    static const T one(1);
    return k <= 0 ? one : det[static_cast<std::size_t>(k)];
  };

  RecoveryResult<T> out;
  out.columns = {"k", "det_C", "det_C_bordered", "a", "b"};
  std::vector<T> partial(horizon, T(0));  // S_k = b_1 + ... + b_k
  std::vector<T> bordered(horizon, T(0));
  for (std::size_t k = 1; k < horizon; ++k) {
    bordered[k] = determinant(bordered_minor(cbar, k));
    partial[k] = bordered[k] / det[k];
  }

  for (std::size_t k = 0; k < horizon; ++k) {
    const auto kk = static_cast<std::ptrdiff_t>(k);
    const T radicand = det_at(kk + 1) * det_at(kk - 1);
    const T root = detail::checked_sqrt(radicand, k, out.warnings,
                                        "det C̄^{k+1} det C̄^{k-1}");
    out.a.push_back(root / det_at(kk));
    double b_diag = std::numeric_limits<double>::quiet_NaN();
    if (k >= 1) {
      out.b.push_back(partial[k] - partial[k - 1]);
      b_diag = to_double(out.b.back());
    }
    out.diagnostics.push_back({static_cast<double>(k), to_double(det_at(kk)),
                               to_double(bordered[k]), to_double(out.a.back()),
                               b_diag});
  }
  return out;
}

template <class T>
RecoveryResult<T> recover_factorization(const Response<T>& r,
                                        std::size_t horizon) {
  require_horizon(r, horizon);
  if (!(r[0] > 0)) throw InvalidData(0, "r_0 = a_0 must be positive");
  return recover_from_rotated(rotated_from_response(r, horizon).values, horizon);
}

}  // namespace jbc
