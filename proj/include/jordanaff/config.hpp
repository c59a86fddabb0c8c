#pragma once

namespace jordanaff {

/// All floating-point thresholds used anywhere in the library.
struct Tolerances {
  double relative = 1e-9;        // float comparisons: |a-b| <= relative*scale + absolute
  double absolute = 1e-12;
  double singular_det = 1e-12;   // |det P_v| below this times scale counts as singular
  double svd_rank = 1e-9;        // singular values below this times the largest are zero
  double level_set = 1e-8;       // |det P_p / C^{2(n+1)} - 1|
  double t0_constraint = 1e-12;  // sum (n_a + 1) t_a
  double tangent = 1e-10;        // membership of float vectors in V0
};

inline constexpr Tolerances kTolerances{};

inline bool float_close(double a, double b, double scale = 1.0) {
  const double diff = a > b ? a - b : b - a;
  const double s = scale < 0 ? -scale : scale;
  return diff <= kTolerances.relative * s + kTolerances.absolute;
}

}  // namespace jordanaff
