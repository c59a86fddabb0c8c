#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <span>
#include <string>

#include "jordanaff/linalg.hpp"
#include "jordanaff/rational.hpp"
#include "jordanaff/report.hpp"

namespace jordanaff::detail {

/// Exact residual: any nonzero entry fails the check; the first location is kept.
inline void record(Check& c, std::span<const Rational> r, const std::string& where) {
  for (const auto& x : r) {
    if (x.is_zero()) continue;
    c.pass = false;
    c.max_residual = std::max(c.max_residual, std::max(std::abs(x.to_double()), 1e-300));
    if (c.detail.empty()) c.detail = where;
  }
}

inline void record(Check& c, const Matrix<Rational>& m, const std::string& where) { record(c, m.data(), where); }

inline void record(Check& c, const Rational& x, const std::string& where) {
  record(c, std::span<const Rational>(&x, 1), where);
}

inline double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace jordanaff::detail
