#include "opmat/svd.hpp"

#include <cmath>
#include <limits>

namespace opmat {

SvdResult svd_full(const Matrix& m) {
  SvdResult out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.u = Matrix::Identity(m.rows(), m.rows());
    out.sigma = RealVector(0);
    out.v = Matrix::Identity(m.cols(), m.cols());
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.u = svd.matrixU();
  out.sigma = svd.singularValues();
  out.v = svd.matrixV();
  return out;
}

double sigma_max_of(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return svd_full(m).sigma(0);
}

double sigma_min_of(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    return std::numeric_limits<double>::infinity();
  const RealVector sigma = svd_full(m).sigma;
  return sigma(sigma.size() - 1);
}

double rank_threshold(Index rows, Index cols, double sigma_max,
                      const ToleranceConfig& tol) {
  const double dim = static_cast<double>(std::max(rows, cols));
  return tol.rank_coeff * dim * std::numeric_limits<double>::epsilon() * sigma_max;
}

Index numerical_rank(const RealVector& sigma, double tau) {
  Index r = 0;
  while (r < sigma.size() && sigma(r) > tau) ++r;
  return r;
}

void fix_column_phases(Matrix& columns) {
  for (Index j = 0; j < columns.cols(); ++j) {
    Index at = 0;
    double best = -1.0;
    for (Index i = 0; i < columns.rows(); ++i) {
      const double mag = std::abs(columns(i, j));
      if (mag > best) {  // strict: ties keep the lowest index
        best = mag;
        at = i;
      }
    }
    if (best <= 0.0) continue;
    const Complex z = columns(at, j);
    columns.col(j) *= std::conj(z) / std::abs(z);
    columns(at, j) = Complex(std::abs(columns(at, j)), 0.0);
  }
}

Verdict band_verdict(double sigma_min, double tau, double borderline_factor) {
  if (sigma_min <= tau) return Verdict::Singular;
  if (sigma_min <= borderline_factor * tau) return Verdict::Indeterminate;
  return Verdict::Invertible;
}

}  // namespace opmat
