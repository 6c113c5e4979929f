#pragma once

// Scalar plumbing shared by the floating-point and exact-rational code paths.
// Algorithms are written once as templates over `double` and `mpq_class`.

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>

namespace jbc {

using Rational = mpq_class;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

template <class T>
T from_double(double x) {
  if constexpr (is_exact_v<T>) {
    return Rational(x);  // exact: every finite double is a dyadic rational
  } else {
    return static_cast<T>(x);
  }
}

template <class T>
T abs_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return abs(x);
  } else {
    return std::abs(x);
  }
}

// Square root of a non-negative rational when it is itself rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace jbc
