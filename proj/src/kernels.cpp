#include "jacobi_bc/kernels.hpp"

#include <cstdint>

namespace jbc::kernels {

void advance_parallel(std::span<const double> a, std::span<const double> b,
                      std::span<const double> prev, std::span<const double> cur,
                      std::span<double> next, std::size_t lo, std::size_t hi) {
  const auto first = static_cast<std::int64_t>(lo);
  const auto last = static_cast<std::int64_t>(hi);
  const double* pa = a.data();
  const double* pb = b.data();
  const double* pp = prev.data();
  const double* pc = cur.data();
  double* pn = next.data();
#pragma omp parallel for schedule(static) if (hi - lo + 1 >= kParallelThreshold)
  for (std::int64_t n = first; n <= last; ++n)
    pn[n] = pa[n] * pc[n + 1] + pa[n - 1] * pc[n - 1] + pb[n] * pc[n] - pp[n];
}

}  // namespace jbc::kernels
