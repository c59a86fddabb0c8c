#pragma once

// Floating-point helpers backed by Eigen.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "jordanaff/linalg.hpp"

namespace jordanaff {

Eigen::MatrixXd to_eigen(const Matrix<double>& m);
Matrix<double> from_eigen(const Eigen::MatrixXd& m);

double determinant(const Matrix<double>& m);

/// Number of singular values above threshold * largest.
std::size_t svd_rank(const Eigen::MatrixXd& m, double threshold);

/// exp(A) by scaling and squaring with the [13/13] Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Best rational approximation p/q with q <= max_den (continued fractions).
Rational rationalize(double x, std::int64_t max_den = 1000000);

}  // namespace jordanaff
