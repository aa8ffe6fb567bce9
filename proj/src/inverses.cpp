#include "opmat/inverses.hpp"

namespace opmat {

namespace {

Index rank_of(const Matrix& t, const ToleranceConfig& tol) {
  if (t.rows() == 0 || t.cols() == 0) return 0;
  const SvdResult svd = svd_full(t);
  const double tau = rank_threshold(t.rows(), t.cols(), svd.sigma(0), tol);
  return numerical_rank(svd.sigma, tau);
}

Matrix pseudoinverse(const Matrix& t, const ToleranceConfig& tol) {
  if (t.rows() == 0 || t.cols() == 0) return Matrix(t.cols(), t.rows());
  const SvdResult svd = svd_full(t);
  const double tau = rank_threshold(t.rows(), t.cols(), svd.sigma(0), tol);
  const Index r = numerical_rank(svd.sigma, tau);
  Matrix inv = Matrix::Zero(t.cols(), t.rows());
  for (Index i = 0; i < r; ++i)
    inv += (1.0 / svd.sigma(i)) * svd.v.col(i) * svd.u.col(i).adjoint();
  return inv;
}

}  // namespace

bool is_right_invertible(const Matrix& t, const ToleranceConfig& tol) {
  return rank_of(t, tol) == t.rows();
}

bool is_left_invertible(const Matrix& t, const ToleranceConfig& tol) {
  return rank_of(t, tol) == t.cols();
}

SidedInverseResult right_inverse(const Matrix& t, const ToleranceConfig& tol) {
  if (!is_right_invertible(t, tol))
    throw NotRightInvertible("right_inverse: operator is not surjective");
  SidedInverseResult out;
  out.inverse = pseudoinverse(t, tol);
  out.residual =
      (t * out.inverse - Matrix::Identity(t.rows(), t.rows())).norm();
  out.range_check_residual =
      subspace_equals(range_of(out.inverse, tol),
                      complement(kernel_of(t, tol), tol), tol)
          .residual;
  return out;
}

SidedInverseResult left_inverse(const Matrix& t, const ToleranceConfig& tol) {
  if (!is_left_invertible(t, tol))
    throw NotLeftInvertible("left_inverse: operator is not injective");
  SidedInverseResult out;
  out.inverse = pseudoinverse(t, tol);
  out.residual =
      (out.inverse * t - Matrix::Identity(t.cols(), t.cols())).norm();
  out.range_check_residual =
      subspace_equals(kernel_of(out.inverse, tol),
                      complement(range_of(t, tol), tol), tol)
          .residual;
  return out;
}

Verdict schur_certify(const Matrix& a, const Matrix& b, const Matrix& c,
                      const Matrix& d, SchurPivot pivot,
                      const ToleranceConfig& tol) {
  const Index n = a.rows();
  const Index p = d.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != p || c.rows() != p ||
      c.cols() != n || d.cols() != p)
    throw ShapeError("schur_certify: inconsistent block shapes");

  Matrix complement_op;
  if (pivot == SchurPivot::UseA) {
    const double smin = sigma_min_of(a);
    if (!(smin > rank_threshold(n, n, sigma_max_of(a), tol)))
      throw PivotSingular("schur_certify: pivot A is singular");
    complement_op = d - c * a.colPivHouseholderQr().solve(b);
  } else {
    if (b.rows() != b.cols())
      throw PivotSingular("schur_certify: pivot B is not square");
    const double smin = sigma_min_of(b);
    if (!(smin > rank_threshold(n, p, sigma_max_of(b), tol)))
      throw PivotSingular("schur_certify: pivot B is singular");
    complement_op = c - d * b.colPivHouseholderQr().solve(a);
  }

  Matrix m(n + p, n + p);
  m << a, b, c, d;
  const double tau_m = rank_threshold(n + p, n + p, sigma_max_of(m), tol);
  return band_verdict(sigma_min_of(complement_op), tau_m,
                      tol.borderline_factor);
}

RowIsomorphismResult row_isomorphism_check(const Matrix& a, const Matrix& b,
                                           const ToleranceConfig& tol) {
  RowIsomorphismResult out;
  out.cond_i =
      kernel_of(a, tol).dim() == 0 && kernel_of(b, tol).dim() == 0;
  const Subspace ra = range_of(a, tol);
  const Subspace rb = range_of(b, tol);
  out.cond_ii = subspace_equals(ra, complement(rb, tol), tol).equal &&
                subspace_equals(rb, complement(ra, tol), tol).equal;
  out.is_iso = out.cond_i && out.cond_ii;
  return out;
}

KernelNecessityResult kernel_necessity_check(const Matrix& a, const Matrix& b,
                                             Index p,
                                             const ToleranceConfig& tol) {
  if (p >= 1 && kernel_of(hcat(a, b), tol).dim() == 0) return {false};
  return {true};
}

}  // namespace opmat
