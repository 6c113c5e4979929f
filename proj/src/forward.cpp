#include "jacobi_bc/forward.hpp"

namespace jbc {

template Wavefield<double> step_forward(const Coefficients<double>&,
                                        const Control<double>&, std::size_t,
                                        Execution);
template Wavefield<Rational> step_forward(const Coefficients<Rational>&,
                                          const Control<Rational>&, std::size_t,
                                          Execution);
template GoursatKernel<double> goursat_kernel(const Coefficients<double>&,
                                              std::size_t);
template GoursatKernel<Rational> goursat_kernel(const Coefficients<Rational>&,
                                                std::size_t);

}  // namespace jbc
