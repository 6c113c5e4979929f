#include "jacobi_bc/characterization.hpp"

#include <algorithm>
#include <cmath>

#include "jacobi_bc/inverse.hpp"

namespace jbc {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::invalid_first_entry:
      return "invalid_first_entry";
    case Condition::not_positive_definite:
      return "not_positive_definite";
    case Condition::det_not_one:
      return "det_not_one";
    case Condition::roundtrip_mismatch:
      return "roundtrip_mismatch";
  }
  return "unknown";
}

namespace {

void reject(CharacterizationReport& rep, Condition c, std::size_t index,
            double witness) {
  rep.verdict = Verdict::rejected;
  rep.failure = Failure{c, index, witness};
}

template <class T>
Response<T> promote(const ResponseVector& r) {
  Response<T> out;
  out.values.reserve(r.size());
  for (double x : r.values) out.values.push_back(from_double<T>(x));
  return out;
}

template <class T>
std::vector<double> demote(const std::vector<T>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const T& x : v) out.push_back(to_double(x));
  return out;
}

// Positive definiteness of C̄^T; records the witness and rejects on failure.
template <class T>
bool check_positive_definite(const Matrix<T>& cbar,
                             const CharacterizationOptions& opt,
                             CharacterizationReport& rep) {
  const Ldlt<T> f = ldlt(cbar, opt.pivot_tolerance);
  rep.smallest_relative_pivot = f.min_relative_pivot;
  if (!f.positive_definite) {
    reject(rep, Condition::not_positive_definite, f.failing_dimension(),
           f.min_relative_pivot);
    return false;
  }
  return true;
}

// Re-simulates the recovered coefficients and compares with r. In exact mode
// (and when the recovery itself stayed exact) equality is required.
template <class T>
bool certify_roundtrip(const Response<T>& r, const RecoveryResult<T>& rec,
                       const Coefficients<T>& coeffs,
                       const CharacterizationOptions& opt,
                       CharacterizationReport& rep) {
  const Response<T> again = response_vector(coeffs, r.size());
  double worst = 0.0, scale = 0.0;
  std::size_t worst_t = 0;
  bool equal = true;
  for (std::size_t t = 0; t < r.size(); ++t) {
    const double d = std::abs(to_double(r[t]) - to_double(again[t]));
    if (!(r[t] == again[t])) equal = false;
    if (d > worst || (!equal && worst == 0.0 && !(r[t] == again[t]))) {
      worst = d;
      worst_t = t;
    }
    scale = std::max(scale, std::abs(to_double(r[t])));
  }
  const double rel = scale > 0 ? worst / scale : worst;
  rep.max_response_mismatch = rel;

  const bool exact_check = is_exact_v<T> && rec.warnings.empty();
  const bool ok = exact_check ? equal : rel <= opt.roundtrip_tolerance;
  if (!ok) reject(rep, Condition::roundtrip_mismatch, worst_t, rel);
  return ok;
}

template <class T>
CharacterizationReport jacobi_impl(const Response<T>& r, std::size_t horizon,
                                   const CharacterizationOptions& opt) {
  CharacterizationReport rep;
  rep.horizon = horizon;
  if (!(r[0] > 0)) {
    reject(rep, Condition::invalid_first_entry, 0, to_double(r[0]));
    return rep;
  }
  const Matrix<T> cbar = rotated_from_response(r, horizon).values;
  if (!check_positive_definite(cbar, opt, rep)) return rep;

  if (opt.certify) {
    RecoveryResult<T> rec;
    try {
      rec = recover_from_rotated(cbar, horizon);
    } catch (const InvalidData& e) {
      reject(rep, Condition::not_positive_definite, e.index,
             rep.smallest_relative_pivot);
      return rep;
    }
    rep.warnings = rec.warnings;
    if (!certify_roundtrip(r, rec, rec.coefficients(), opt, rep)) return rep;
    rep.a = demote(rec.a);
    rep.b = demote(rec.b);
  }
  rep.verdict = Verdict::accepted;
  return rep;
}

template <class T>
bool check_unit_determinants(const Matrix<T>& cbar, std::size_t horizon,
                             const CharacterizationOptions& opt,
                             CharacterizationReport& rep) {
  rep.max_det_deviation = 0.0;
  std::optional<Failure> first;
  for (std::size_t l = 1; l <= horizon; ++l) {
    const Matrix<T> block = cbar.leading(l);
    const T det = determinant(block);
    const double dev = std::abs(to_double(det) - 1.0);
    rep.max_det_deviation = std::max(rep.max_det_deviation, dev);
    bool ok;
    if constexpr (is_exact_v<T>) {
      ok = det == 1;
    } else {
      ok = dev <= opt.det_tolerance * static_cast<double>(l) * max_abs(block);
    }
    if (!ok && !first) first = Failure{Condition::det_not_one, l, dev};
  }
  if (first) {
    reject(rep, first->condition, first->index, first->witness);
    return false;
  }
  return true;
}

template <class T>
CharacterizationReport schrodinger_impl(const Response<T>& r,
                                        std::size_t horizon,
                                        const CharacterizationOptions& opt) {
  CharacterizationReport rep;
  rep.horizon = horizon;
  bool unit_first;
  if constexpr (is_exact_v<T>) {
    unit_first = r[0] == 1;
  } else {
    unit_first = std::abs(r[0] - 1.0) <= opt.first_entry_tolerance;
  }
  if (!unit_first) {
    reject(rep, Condition::invalid_first_entry, 0, to_double(r[0]) - 1.0);
    return rep;
  }
  const Matrix<T> cbar = rotated_from_response(r, horizon).values;
  if (!check_positive_definite(cbar, opt, rep)) return rep;
  if (!check_unit_determinants(cbar, horizon, opt, rep)) return rep;

  if (opt.certify) {
    RecoveryResult<T> rec;
    try {
      rec = recover_from_rotated(cbar, horizon);
    } catch (const InvalidData& e) {
      reject(rep, Condition::not_positive_definite, e.index,
             rep.smallest_relative_pivot);
      return rep;
    }
    rep.warnings = rec.warnings;
    Coefficients<T> coeffs{std::vector<T>(horizon, T(1)), rec.b};
    coeffs.b.push_back(T(0));
    if (!certify_roundtrip(r, rec, coeffs, opt, rep)) return rep;
    rep.a.assign(horizon, 1.0);
    rep.b = demote(rec.b);
  }
  rep.verdict = Verdict::accepted;
  return rep;
}

}  // namespace

CharacterizationReport characterize_jacobi(const ResponseVector& r,
                                           const CharacterizationOptions& opt) {
  if (r.size() % 2 == 0)
    throw Error("candidate response vector must have odd length 2T-1, got " +
                std::to_string(r.size()));
  const std::size_t horizon = max_horizon(r);
  if (opt.arithmetic == Arithmetic::exact)
    return jacobi_impl(promote<Rational>(r), horizon, opt);
  return jacobi_impl(r, horizon, opt);
}

CharacterizationReport characterize_schrodinger(
    const ResponseVector& r, std::size_t horizon,
    const CharacterizationOptions& opt) {
  require_horizon(r, horizon);
  if (opt.arithmetic == Arithmetic::exact)
    return schrodinger_impl(promote<Rational>(r), horizon, opt);
  return schrodinger_impl(r, horizon, opt);
}

CharacterizationReport check_schrodinger_connecting(
    const Matrix<double>& cbar, std::size_t horizon,
    const CharacterizationOptions& opt) {
  CharacterizationReport rep;
  rep.horizon = horizon;
  if (!check_positive_definite(cbar, opt, rep)) return rep;
  if (!check_unit_determinants(cbar, horizon, opt, rep)) return rep;
  try {
    const RecoveryResult<double> rec = recover_from_rotated(cbar, horizon);
    rep.a.assign(horizon, 1.0);
    rep.b = rec.b;
  } catch (const InvalidData& e) {
    reject(rep, Condition::not_positive_definite, e.index,
           rep.smallest_relative_pivot);
    return rep;
  }
  rep.verdict = Verdict::accepted;
  return rep;
}

}  // namespace jbc
