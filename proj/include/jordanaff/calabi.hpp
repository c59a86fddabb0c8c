#pragma once

// Calabi composition: the model of a direct sum of algebras, with points
// (c_1 e^{t_1} x_1, ..., c_r e^{t_r} x_r) over sum (n_a + 1) t_a = 0.

#include <span>
#include <vector>

#include "jordanaff/catalog.hpp"
#include "jordanaff/hypersurface.hpp"

namespace jordanaff {

/// Block-diagonal product; unity sum of the factor unities.
JordanAlgebra direct_sum(const std::vector<JordanAlgebra>& factors, std::string name = {});

struct CalabiFactor {
  JordanAlgebra algebra;
  Rational L1;
};

struct CalabiSpec {
  std::vector<CalabiFactor> factors;
  Rational L1;
};

struct CalabiModel {
  HypersurfaceModel model;           // build_model(direct_sum(...), L1)
  std::vector<std::size_t> offsets;  // first coordinate of each block
  std::vector<std::size_t> dims;     // n_a + 1
  std::vector<double> C_factor;      // C_a from each factor's (n_a, L1_a)
  std::vector<double> c;             // c_a = C / C_a
};

CalabiModel compose(const CalabiSpec& spec, ModelOptions opts = {});

/// Eq. of the composed immersion; kConstraintViolated when
/// |sum (n_a + 1) t_a| exceeds the T0 tolerance.
Vec<double> compose_point(const CalabiModel& cm, std::span<const double> t,
                          const std::vector<Vec<double>>& factor_points);

/// The traceless combinations sum s_a e_a, spanning the central part p0 of p.
std::vector<Vec<Rational>> central_directions(const CalabiModel& cm);

}  // namespace jordanaff
