#include "microkin/linalg.hpp"

#include <cmath>
#include <vector>

namespace microkin {

Mat3 rotation(const Vec3& axis, double angle) {
  const double norm = axis.norm();
  if (norm == 0.0) throw Error(Errc::InvalidArgument, "rotation axis is zero");
  const Mat3 k = hat(axis / norm);
  return Mat3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

Mat spd_sqrt(const Mat& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.transpose()));
  Vec vals = es.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  for (int i = 0; i < vals.size(); ++i) {
    if (vals[i] < -tol * scale)
      throw Error(Errc::Inconsistent, "matrix square root of a non-PSD input");
    vals[i] = std::sqrt(std::max(vals[i], 0.0));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().transpose();
}

double min_singular_value(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().minCoeff();
}

Vec principal_angles(const Mat& a, const Mat& b) {
  Eigen::HouseholderQR<Mat> qa(a), qb(b);
  const Mat ua = Mat(qa.householderQ()).leftCols(a.cols());
  const Mat ub = Mat(qb.householderQ()).leftCols(b.cols());
  Eigen::JacobiSVD<Mat> svd(ua.transpose() * ub);
  Vec s = svd.singularValues();
  Vec angles(s.size());
  for (int i = 0; i < s.size(); ++i)
    angles[s.size() - 1 - i] = std::acos(std::min(1.0, std::max(-1.0, s[i])));
  return angles;
}

Mat3 random_orthogonal(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat3 g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g(r, c) = gauss(rng);
  Eigen::HouseholderQR<Mat3> qr(g);
  Mat3 q = qr.householderQ();
  const Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 3; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  return q;
}

Vec3 random_gaussian3(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return Vec3(gauss(rng), gauss(rng), gauss(rng));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double fit_through_origin(const std::vector<double>& x, const std::vector<double>& y,
                          double* r2) {
  double sxy = 0, sxx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
    sy += y[i];
  }
  const double c = sxy / sxx;
  if (r2) {
    const double mean = sy / static_cast<double>(y.size());
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      ss_res += (y[i] - c * x[i]) * (y[i] - c * x[i]);
      ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    *r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  }
  return c;
}

}  // namespace microkin
