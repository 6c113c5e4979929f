#pragma once

// Operators of the Boundary Control method: response R^T, control W^T and
// connecting C^T = (W^T)^* W^T. The connecting matrix has three independent
// constructions (Gram product, closed form in the response vector, and the
// spectral-measure integral in spectral.hpp) which tests compare.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jacobi_bc/error.hpp"
#include "jacobi_bc/forward.hpp"
#include "jacobi_bc/matrix.hpp"

namespace jbc {

// r = (r_0, r_1, ...) with r_0 = a_0 and r_t = w[1][t] = u^delta[1][t+1].
template <class T>
struct Response {
  std::vector<T> values;

  std::size_t size() const { return values.size(); }
  const T& operator[](std::size_t t) const { return values[t]; }
};

using ResponseVector = Response<double>;

// Largest horizon T with len(r) >= 2T - 1.
template <class T>
std::size_t max_horizon(const Response<T>& r) {
  return (r.size() + 1) / 2;
}

template <class T>
void require_horizon(const Response<T>& r, std::size_t horizon) {
  if (horizon == 0) throw Error("horizon T must be positive");
  if (r.size() + 1 < 2 * horizon)
    throw WindowTooSmall("response vector of length " +
                         std::to_string(r.size()) + " is too short for T = " +
                         std::to_string(horizon) + " (needs 2T-1 = " +
                         std::to_string(2 * horizon - 1) + ")");
}

// r_0..r_{K-1} by stepping u^delta only inside the backward light cone of
// (n, t) = (1, K). By finite speed this needs a_0..a_{ceil(K/2)-1} and
// b_1..b_{floor(K/2)}, i.e. window >= ceil(K/2).
template <class T>
Response<T> response_vector(const Coefficients<T>& c, std::size_t length) {
  c.validate();
  if (length == 0) throw Error("response length must be positive");
  const std::size_t need = (length + 1) / 2;
  if (c.window() < need)
    throw WindowTooSmall("response vector of length " + std::to_string(length) +
                         " needs coefficient window >= " + std::to_string(need) +
                         ", have " + std::to_string(c.window()));

  const std::size_t k_end = length;  // final time
  const std::size_t sites = k_end + 2;
  const auto s = detail::stencil(c, sites);
  const std::span<const T> a(s.a), b(s.b);
  std::vector<T> prev(sites, T(0)), cur(sites, T(0)), next(sites, T(0));
  cur[0] = T(1);  // delta control: f_0 = 1

  Response<T> r;
  r.values.reserve(length);
  for (std::size_t t = 0; t < k_end; ++t) {
    // sites that still influence u[1][K] at time t + 1
    const std::size_t hi = std::min(t + 1, k_end - t);
    std::fill(next.begin(), next.end(), T(0));
    kernels::advance_serial<T>(a, b, prev, cur, next, 1, hi);
    next[0] = T(0);
    r.values.push_back(next[1]);
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return r;
}

// (R^T f)_t = (r * f)_{t-1}, t = 1..T with T = len(f). Output index t-1.
template <class T>
std::vector<T> apply_response(const Response<T>& r, const Control<T>& f) {
  const std::size_t horizon = f.size();
  if (r.size() < horizon)
    throw WindowTooSmall("response vector shorter than control");
  std::vector<T> out(horizon, T(0));
  for (std::size_t t = 1; t <= horizon; ++t)
    for (std::size_t s = 0; s + 1 <= t; ++s)
      out[t - 1] += r[s] * f.values[t - 1 - s];
  return out;
}

// Transpose of apply_response: g holds (g_1..g_T) at g[0..T-1];
// out_s = sum_{t=s+1}^{T} r_{t-1-s} g_t for s = 0..T-1.
template <class T>
std::vector<T> adjoint_response(const Response<T>& r, std::span<const T> g) {
  const std::size_t horizon = g.size();
  if (r.size() < horizon)
    throw WindowTooSmall("response vector shorter than argument");
  std::vector<T> out(horizon, T(0));
  for (std::size_t s = 0; s < horizon; ++s)
    for (std::size_t t = s + 1; t <= horizon; ++t)
      out[s] += r[t - 1 - s] * g[t - 1];
  return out;
}

template <class T>
std::vector<T> adjoint_response(const Response<T>& r, const std::vector<T>& g) {
  return adjoint_response<T>(r, std::span<const T>(g));
}

// W^T as a dense matrix acting on (f_0, ..., f_{T-1}):
//   (W f)_n = P_n f_{T-n} + sum_{s=n}^{T-1} w[n][s] f_{T-s-1}.
// Factored as W = (A + K) J with A = diag(P_1..P_T), K strictly upper
// triangular with K_{i,j} = w[i][j-1], J the reversal.
template <class T>
struct ControlMatrix {
  Matrix<T> dense;
  std::vector<T> diagonal;  // P_1..P_T

  std::size_t horizon() const { return dense.rows(); }

  // A + K = W J (upper triangular).
  Matrix<T> triangular() const {
    const std::size_t n = horizon();
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dense(i, n - 1 - j);
    return m;
  }
};

template <class T>
ControlMatrix<T> control_matrix(const Coefficients<T>& c, std::size_t horizon) {
  c.validate();
  if (horizon == 0) throw Error("horizon T must be positive");
  if (c.window() < horizon)
    throw WindowTooSmall("control operator W^" + std::to_string(horizon) +
                         " needs coefficient window >= " +
                         std::to_string(horizon));
  const GoursatKernel<T> w = goursat_kernel(c, horizon - 1);
  const std::vector<T> p = prefix_products(c, horizon);
  ControlMatrix<T> out{Matrix<T>(horizon, horizon), {}};
  for (std::size_t n = 1; n <= horizon; ++n) {
    out.dense(n - 1, horizon - n) = p[n];
    out.diagonal.push_back(p[n]);
    for (std::size_t s = n; s + 1 <= horizon; ++s)
      out.dense(n - 1, horizon - s - 1) = w(n, s);
  }
  return out;
}

enum class Orientation { plain, rotated };

template <class T>
struct Connecting {
  Matrix<T> values;
  Orientation orientation = Orientation::plain;

  std::size_t horizon() const { return values.rows(); }
};

using ConnectingMatrix = Connecting<double>;

template <class T>
Connecting<T> connecting_from_gram(const ControlMatrix<T>& w) {
  return {w.dense.transpose() * w.dense, Orientation::plain};
}

// C_{ij} = r_0 sum_{k=0}^{T-max(i,j)} r_{|i-j|+2k}, 1-based i, j.
template <class T>
Connecting<T> connecting_from_response(const Response<T>& r,
                                       std::size_t horizon) {
  require_horizon(r, horizon);
  Connecting<T> c{Matrix<T>(horizon, horizon), Orientation::plain};
  for (std::size_t i = 1; i <= horizon; ++i) {
    for (std::size_t j = i; j <= horizon; ++j) {
      T sum(0);
      for (std::size_t k = 0; k <= horizon - j; ++k) sum += r[j - i + 2 * k];
      c.values(i - 1, j - 1) = r[0] * sum;
      c.values(j - 1, i - 1) = c.values(i - 1, j - 1);
    }
  }
  return c;
}

// C̄_{ij} = C_{T+1-j, T+1-i}; an involution.
template <class T>
Connecting<T> rotate_connecting(const Connecting<T>& c) {
  const std::size_t n = c.horizon();
  Connecting<T> out{Matrix<T>(n, n), c.orientation == Orientation::plain
                                         ? Orientation::rotated
                                         : Orientation::plain};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.values(i, j) = c.values(n - 1 - j, n - 1 - i);
  return out;
}

// Rotated connecting matrix straight from r:
//   C̄_{ij} = r_0 sum_{k=0}^{min(i,j)-1} r_{|i-j|+2k}.
// Leading blocks are the rotated matrices of smaller horizons.
template <class T>
Connecting<T> rotated_from_response(const Response<T>& r, std::size_t horizon) {
  return rotate_connecting(connecting_from_response(r, horizon));
}

// (C^T f, g) via the lattice recursion
//   psi[n][t+1] = psi[n+1][t] + psi[n-1][t] - psi[n][t-1] + h[n][t],
//   h[n][t] = a_0 (g_t (Rf)_n - f_n (Rg)_t),
// with f oddly extended past T; the value is psi[T][T].
template <class T>
T blagoveshchenskii_form(const Response<T>& r, const Control<T>& f,
                         const Control<T>& g, std::size_t horizon) {
  require_horizon(r, horizon);
  const std::size_t big = 2 * horizon;

  std::vector<T> fe(big, T(0));  // f_0..f_{2T-1}, f_T = 0, f_{T+k} = -f_{T-k}
  for (std::size_t j = 0; j < horizon; ++j) fe[j] = f.at(static_cast<std::ptrdiff_t>(j));
  for (std::size_t k = 1; k < horizon; ++k) fe[horizon + k] = -fe[horizon - k];

  auto response_at = [&](const std::vector<T>& x, std::size_t t) {
    T out(0);  // (R x)_t = sum_{s=0}^{t-1} r_s x_{t-1-s}
    for (std::size_t s = 0; s + 1 <= t; ++s) out += r[s] * x[t - 1 - s];
    return out;
  };
  std::vector<T> gv(horizon, T(0));
  for (std::size_t j = 0; j < horizon; ++j) gv[j] = g.at(static_cast<std::ptrdiff_t>(j));

  std::vector<T> rf(big, T(0)), rg(horizon, T(0));
  for (std::size_t n = 1; n < big; ++n) rf[n] = response_at(fe, n);
  for (std::size_t t = 1; t < horizon; ++t) rg[t] = response_at(gv, t);

  const std::size_t width = big + 1;
  std::vector<T> prev(width, T(0)), cur(width, T(0)), next(width, T(0));
  for (std::size_t t = 0; t < horizon; ++t) {
    std::fill(next.begin(), next.end(), T(0));
    for (std::size_t n = 1; n + t < big; ++n) {
      const T h = r[0] * (gv[t] * rf[n] - fe[n] * rg[t]);
      next[n] = cur[n + 1] + cur[n - 1] - prev[n] + h;
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return cur[horizon];
}

}  // namespace jbc
