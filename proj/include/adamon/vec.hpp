#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "adamon/errors.hpp"
#include "adamon/kernels.hpp"

namespace adamon {

// Dense point/gradient carrier. Operations that can silently produce Inf/NaN
// are funneled through checked helpers below.
using Vector = std::vector<double>;

namespace vec {

inline Vector zeros(std::size_t n) { return Vector(n, 0.0); }
inline Vector ones(std::size_t n) { return Vector(n, 1.0); }

inline bool all_finite(const Vector& v) {
  return kernels::all_finite(v.data(), v.size());
}

inline void require_finite(const Vector& v, const char* what, long iteration = -1) {
  if (!all_finite(v)) {
    throw NumericError(std::string(what) + ": non-finite entry", iteration);
  }
}

inline double l1(const Vector& v) { return kernels::sum_abs(v.data(), v.size()); }
inline double l2sq(const Vector& v) { return kernels::sum_sq(v.data(), v.size()); }
inline double l2(const Vector& v) { return std::sqrt(l2sq(v)); }
inline double min(const Vector& v) { return kernels::min(v.data(), v.size()); }
inline double max(const Vector& v) { return kernels::max(v.data(), v.size()); }
inline double dot(const Vector& a, const Vector& b) {
  return kernels::dot(a.data(), b.data(), a.size());
}

inline Vector mul(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector scale(const Vector& a, double s) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

// elementwise a/b; every entry of b must be strictly positive
inline Vector div_checked(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(b[i] > 0.0)) {
      throw NumericError("elementwise division: denominator coordinate " +
                         std::to_string(i) + " is not strictly positive");
    }
    out[i] = a[i] / b[i];
  }
  require_finite(out, "elementwise division");
  return out;
}

inline Vector sqrt(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::sqrt(a[i]);
  return out;
}

}  // namespace vec
}  // namespace adamon
