#pragma once

// One time step of the discrete wave system
//
//   next[n] = a[n] * cur[n+1] + a[n-1] * cur[n-1] + b[n] * cur[n] - prev[n]
//
// for n in [lo, hi]. `a` is indexed by a_n (a[0] = a_0) and `b` by the 1-based
// site (b[0] unused). Callers guarantee a.size() > hi, b.size() > hi and
// cur.size() > hi + 1.
//
// The serial loop is the reference; the OpenMP variant performs the same
// per-site arithmetic in the same order, so the two agree bit for bit.

#include <cstddef>
#include <span>
#include <type_traits>

namespace jbc {

enum class Execution { serial, parallel };

namespace kernels {

template <class T>
void advance_serial(std::span<const T> a, std::span<const T> b,
                    std::span<const T> prev, std::span<const T> cur,
                    std::span<T> next, std::size_t lo, std::size_t hi) {
  for (std::size_t n = lo; n <= hi; ++n)
    next[n] = a[n] * cur[n + 1] + a[n - 1] * cur[n - 1] + b[n] * cur[n] -
              prev[n];
}

void advance_parallel(std::span<const double> a, std::span<const double> b,
                      std::span<const double> prev, std::span<const double> cur,
                      std::span<double> next, std::size_t lo, std::size_t hi);

// Below this many sites the parallel kernel runs inline on one thread.
inline constexpr std::size_t kParallelThreshold = 512;

template <class T>
void advance(Execution exec, std::span<const T> a, std::span<const T> b,
             std::span<const T> prev, std::span<const T> cur,
             std::span<T> next, std::size_t lo, std::size_t hi) {
  if (lo > hi) return;
  if constexpr (std::is_same_v<T, double>) {
    if (exec == Execution::parallel) {
      advance_parallel(a, b, prev, cur, next, lo, hi);
      return;
    }
  }
  advance_serial<T>(a, b, prev, cur, next, lo, hi);
}

}  // namespace kernels
}  // namespace jbc
