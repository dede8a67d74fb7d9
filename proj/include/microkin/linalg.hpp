#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "microkin/errors.hpp"

namespace microkin {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

// Skew matrix of v: hat(v)*w == v x w.
inline Mat3 hat(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

// Columns of I3 restricted to the first n base directions. Embeds R^n into R^3.
inline Mat base_embedding(int n) { return Mat::Identity(3, n); }

inline double frob(const Mat& m) { return m.norm(); }

// Rotation about `axis` by `angle` (Rodrigues).
Mat3 rotation(const Vec3& axis, double angle);

// Principal square root of a symmetric positive-definite matrix via
// eigen-decomposition. Throws Inconsistent on negative eigenvalues.
Mat spd_sqrt(const Mat& m, double tol = 1e-10);

// Smallest singular value of a (possibly rectangular) matrix.
double min_singular_value(const Mat& m);

// Principal angles (radians, ascending) between the column spans of two
// matrices with orthonormalizable columns.
Vec principal_angles(const Mat& a, const Mat& b);

// Haar-distributed orthogonal 3x3 matrix (QR of a Gaussian matrix with the
// sign fix); det is +1 or -1 with probability 1/2 each.
Mat3 random_orthogonal(std::mt19937_64& rng);

Vec3 random_gaussian3(std::mt19937_64& rng);

// Log-log least-squares slope of y against x; both must be positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// R^2 of the least-squares fit y = c*x (through the origin).
double fit_through_origin(const std::vector<double>& x, const std::vector<double>& y,
                          double* r2);

}  // namespace microkin
