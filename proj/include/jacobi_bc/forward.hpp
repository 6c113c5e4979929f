#pragma once

// Forward problem for the discrete-time system on the half-line
//
//   u[n][t+1] + u[n][t-1] - a_n u[n+1][t] - a_{n-1} u[n-1][t] - b_n u[n][t] = 0,
//   u[n][-1] = u[n][0] = 0 (n >= 1),   u[0][t] = f_t,
//
// solved two ways: direct time stepping, and the representation
//
//   u[n][t] = (a_0 ... a_{n-1}) f_{t-n} + sum_{s=n}^{t-1} w[n][s] f_{t-s-1}
//
// through the Goursat kernel w.
//
// Index mapping used throughout the library:
//
//   quantity      math index     storage
//   a_k           k = 0..M-1     a[k]
//   b_n           n = 1..M       b[n-1]
//   f_t           t = 0..T-1     values[t]   (f_t = 0 outside)
//   u_{n,t}       n, t >= 0      Wavefield(n, t)
//   w_{n,s}       1 <= n <= s    GoursatKernel(n, s)

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jacobi_bc/error.hpp"
#include "jacobi_bc/kernels.hpp"
#include "jacobi_bc/scalar.hpp"

namespace jbc {

template <class T>
struct Coefficients {
  std::vector<T> a;  // a_0..a_{M-1}
  std::vector<T> b;  // b_1..b_M

  std::size_t window() const { return a.size(); }
  const T& a_at(std::size_t k) const { return a[k]; }
  const T& b_at(std::size_t n) const { return b[n - 1]; }

  void validate() const {
    if (a.empty()) throw InvalidCoefficients("coefficient window is empty");
    if (a.size() != b.size())
      throw InvalidCoefficients("len(a) = " + std::to_string(a.size()) +
                                " differs from len(b) = " +
                                std::to_string(b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double ak = to_double(a[k]);
      if (!std::isfinite(ak) || !(ak > 0.0))
        throw InvalidCoefficients("a_" + std::to_string(k) +
                                  " must be positive and finite");
      if (!std::isfinite(to_double(b[k])))
        throw InvalidCoefficients("b_" + std::to_string(k + 1) +
                                  " must be finite");
    }
  }
};

using JacobiCoefficients = Coefficients<double>;

inline Coefficients<Rational> to_exact(const JacobiCoefficients& c) {
  Coefficients<Rational> out;
  out.a.reserve(c.a.size());
  out.b.reserve(c.b.size());
  for (double x : c.a) out.a.emplace_back(x);
  for (double x : c.b) out.b.emplace_back(x);
  return out;
}

// Boundary control f = (f_0, ..., f_{T-1}); zero outside that range.
template <class T>
struct Control {
  std::vector<T> values;

  std::size_t size() const { return values.size(); }
  T at(std::ptrdiff_t j) const {
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(values.size())) return T(0);
    return values[static_cast<std::size_t>(j)];
  }

  static Control delta(std::size_t length = 1) {
    Control c{std::vector<T>(std::max<std::size_t>(length, 1), T(0))};
    c.values[0] = T(1);
    return c;
  }
};

using ControlVector = Control<double>;

// u[n][t] for n = 0..n_max, t = 0..t_max. Stored time-major with one zero
// ghost site past n_max so the stencil can read cur[n_max + 1].
template <class T>
class Wavefield {
 public:
  Wavefield() = default;
  Wavefield(std::size_t n_max, std::size_t t_max)
      : n_max_(n_max),
        t_max_(t_max),
        stride_(n_max + 2),
        data_((t_max + 1) * (n_max + 2), T(0)) {}

  std::size_t n_max() const { return n_max_; }
  std::size_t t_max() const { return t_max_; }

  T& operator()(std::size_t n, std::size_t t) { return data_[t * stride_ + n]; }
  const T& operator()(std::size_t n, std::size_t t) const {
    return data_[t * stride_ + n];
  }

  std::span<T> row(std::size_t t) {
    return std::span<T>(data_).subspan(t * stride_, stride_);
  }
  std::span<const T> row(std::size_t t) const {
    return std::span<const T>(data_).subspan(t * stride_, stride_);
  }

 private:
  std::size_t n_max_ = 0;
  std::size_t t_max_ = 0;
  std::size_t stride_ = 0;
  std::vector<T> data_;
};

// w[n][s] on 1 <= n <= s <= depth; zero elsewhere.
template <class T>
class GoursatKernel {
 public:
  GoursatKernel() = default;
  explicit GoursatKernel(std::size_t depth)
      : depth_(depth), data_((depth + 1) * (depth + 1), T(0)) {}

  std::size_t depth() const { return depth_; }

  T operator()(std::size_t n, std::size_t s) const {
    if (n == 0 || n > s || s > depth_) return T(0);
    return data_[n * (depth_ + 1) + s];
  }
  T& at(std::size_t n, std::size_t s) { return data_[n * (depth_ + 1) + s]; }

 private:
  std::size_t depth_ = 0;
  std::vector<T> data_;
};

// P_n = a_0 a_1 ... a_{n-1} for n = 0..n_max (P_0 = 1).
template <class T>
std::vector<T> prefix_products(const Coefficients<T>& c, std::size_t n_max) {
  if (n_max > c.window())
    throw WindowTooSmall("product a_0..a_" + std::to_string(n_max - 1) +
                         " needs window " + std::to_string(n_max));
  std::vector<T> p(n_max + 1, T(1));
  for (std::size_t n = 1; n <= n_max; ++n) p[n] = p[n - 1] * c.a_at(n - 1);
  return p;
}

namespace detail {

// Coefficients laid out for the stepping kernels: a[0..len), b[1..len).
// Sites past the window are zero; callers only let them multiply lattice
// values that vanish by finite speed of propagation.
template <class T>
struct StencilCoefficients {
  std::vector<T> a;
  std::vector<T> b;
};

template <class T>
StencilCoefficients<T> stencil(const Coefficients<T>& c, std::size_t len) {
  StencilCoefficients<T> s{std::vector<T>(len, T(0)), std::vector<T>(len, T(0))};
  for (std::size_t k = 0; k < std::min(len, c.window()); ++k) s.a[k] = c.a_at(k);
  for (std::size_t n = 1; n < len && n <= c.window(); ++n) s.b[n] = c.b_at(n);
  return s;
}

}  // namespace detail

// Time-steps the half-line system up to t_max. Requires window >= t_max, which
// covers every coefficient multiplying a non-zero value on n <= t <= t_max.
template <class T>
Wavefield<T> step_forward(const Coefficients<T>& c, const Control<T>& f,
                          std::size_t t_max,
                          Execution exec = Execution::parallel) {
  c.validate();
  if (t_max == 0) throw Error("t_max must be positive");
  if (c.window() < t_max)
    throw WindowTooSmall("step_forward to t = " + std::to_string(t_max) +
                         " needs coefficient window >= " +
                         std::to_string(t_max) + ", have " +
                         std::to_string(c.window()));

  Wavefield<T> u(t_max, t_max);
  const auto s = detail::stencil(c, t_max + 1);
  const std::span<const T> a(s.a), b(s.b);
  for (std::size_t t = 0; t <= t_max; ++t) u(0, t) = f.at(static_cast<std::ptrdiff_t>(t));

  const std::vector<T> zero_row(t_max + 2, T(0));
  for (std::size_t t = 0; t < t_max; ++t) {
    std::span<const T> prev =
        t == 0 ? std::span<const T>(zero_row) : u.row(t - 1);
    std::span<const T> cur = u.row(t);
    std::span<T> next = u.row(t + 1);
    // u[n][t+1] can be non-zero only for n <= t + 1.
    kernels::advance<T>(exec, a, b, prev, cur, next, 1, t + 1);
    next[0] = f.at(static_cast<std::ptrdiff_t>(t + 1));
  }
  return u;
}

// Fills w in order of increasing s from the diagonal relation
//   w[n][n] = b_n P_n + a_{n-1} w[n-1][n-1]
// and the interior relation (s >= n)
//   w[n][s+1] = a_n w[n+1][s] + a_{n-1} w[n-1][s] + b_n w[n][s] - w[n][s-1]
//               - [s == n] (1 - a_n^2) P_n.
template <class T>
GoursatKernel<T> goursat_kernel(const Coefficients<T>& c, std::size_t depth) {
  c.validate();
  if (c.window() < depth)
    throw WindowTooSmall("Goursat kernel to depth " + std::to_string(depth) +
                         " needs coefficient window >= " +
                         std::to_string(depth));
  GoursatKernel<T> w(depth);
  if (depth == 0) return w;
  const std::vector<T> p = prefix_products(c, depth);

  for (std::size_t s = 1; s <= depth; ++s) {
    const std::size_t sp = s - 1;  // the interior relation is applied at (n, sp)
    for (std::size_t n = 1; n < s; ++n) {  // n <= sp, so w(n, sp - 1) is in range
      T v = c.a_at(n) * w(n + 1, sp) + c.a_at(n - 1) * w(n - 1, sp) +
            c.b_at(n) * w(n, sp) - w(n, sp - 1);
      if (sp == n) v -= (T(1) - c.a_at(n) * c.a_at(n)) * p[n];
      w.at(n, s) = v;
    }
    w.at(s, s) = c.b_at(s) * p[s] + c.a_at(s - 1) * w(s - 1, s - 1);
  }
  return w;
}

// d'Alembert-type representation of u[n][t]; needs kernel depth >= t - 1.
template <class T>
T dalembert_solution(const Coefficients<T>& c, const GoursatKernel<T>& w,
                     const Control<T>& f, std::size_t n, std::size_t t) {
  if (n == 0) return f.at(static_cast<std::ptrdiff_t>(t));
  if (n > t) return T(0);
  if (t >= 1 && w.depth() + 1 < t)
    throw WindowTooSmall("kernel depth " + std::to_string(w.depth()) +
                         " is too small for t = " + std::to_string(t));
  const std::vector<T> p = prefix_products(c, n);
  T out = p[n] * f.at(static_cast<std::ptrdiff_t>(t) - static_cast<std::ptrdiff_t>(n));
  for (std::size_t s = n; s + 1 <= t; ++s)
    out += w(n, s) * f.at(static_cast<std::ptrdiff_t>(t - s - 1));
  return out;
}

// c_t = sum_{s=0}^{t} x_s y_{t-s}, length len(x) + len(y) - 1.
template <class T>
std::vector<T> convolve(std::span<const T> x, std::span<const T> y) {
  if (x.empty() || y.empty()) return {};
  std::vector<T> out(x.size() + y.size() - 1, T(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

template <class T>
std::vector<T> convolve(const std::vector<T>& x, const std::vector<T>& y) {
  return convolve<T>(std::span<const T>(x), std::span<const T>(y));
}

}  // namespace jbc
