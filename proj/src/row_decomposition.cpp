#include "opmat/row_decomposition.hpp"

#include <algorithm>

namespace opmat {

namespace {

void check_row_shapes(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols())
    throw ShapeError("row operator: A must be square");
  if (b.rows() != a.rows())
    throw ShapeError("row operator: B must have as many rows as A");
}

}  // namespace

RowDecomposition decompose_row(const Matrix& a, const Matrix& b,
                               const ToleranceConfig& tol) {
  check_row_shapes(a, b);
  if (!is_right_invertible(hcat(a, b), tol))
    throw NotRightInvertible("decompose_row: row operator is not surjective");

  RowDecomposition dec;
  const Subspace ra = range_of(a, tol);
  const Subspace rb = range_of(b, tol);
  dec.ra_perp = complement(ra, tol);
  dec.rb_perp = complement(rb, tol);
  dec.r_int = subspace_intersect(ra, rb, tol);

  dec.x1 = kernel_of(a, tol);
  dec.x3 = complement(kernel_of(dec.rb_perp.projector() * a, tol), tol);
  dec.x2 = subspace_ominus(complement(dec.x1, tol), dec.x3, tol);

  dec.y1 = kernel_of(b, tol);
  dec.y3 = complement(kernel_of(dec.ra_perp.projector() * b, tol), tol);
  dec.y2 = subspace_ominus(complement(dec.y1, tol), dec.y3, tol);
  return dec;
}

BlockForm block_form(const Matrix& a, const Matrix& b,
                     const RowDecomposition& dec, const ToleranceConfig& tol) {
  check_row_shapes(a, b);
  (void)tol;
  BlockForm out;
  out.a0 = dec.r_int.basis().adjoint() * a * dec.x3.basis();
  out.a2 = dec.r_int.basis().adjoint() * a * dec.x2.basis();
  out.a3 = dec.rb_perp.basis().adjoint() * a * dec.x3.basis();
  out.b0 = dec.r_int.basis().adjoint() * b * dec.y3.basis();
  out.b2 = dec.r_int.basis().adjoint() * b * dec.y2.basis();
  out.b3 = dec.ra_perp.basis().adjoint() * b * dec.y3.basis();

  // Structurally-zero slots of the 3x6 pattern.
  double zr = 0.0;
  const auto track = [&zr](const Matrix& slot) {
    zr = std::max(zr, slot.norm());
  };
  track(dec.ra_perp.basis().adjoint() * a * dec.x1.basis());
  track(dec.ra_perp.basis().adjoint() * a * dec.x2.basis());
  track(dec.ra_perp.basis().adjoint() * a * dec.x3.basis());
  track(dec.ra_perp.basis().adjoint() * b * dec.y2.basis());
  track(dec.ra_perp.basis().adjoint() * b * dec.y1.basis());
  track(dec.rb_perp.basis().adjoint() * a * dec.x1.basis());
  track(dec.rb_perp.basis().adjoint() * a * dec.x2.basis());
  track(dec.rb_perp.basis().adjoint() * b * dec.y3.basis());
  track(dec.rb_perp.basis().adjoint() * b * dec.y2.basis());
  track(dec.rb_perp.basis().adjoint() * b * dec.y1.basis());
  track(dec.r_int.basis().adjoint() * a * dec.x1.basis());
  track(dec.r_int.basis().adjoint() * b * dec.y1.basis());
  out.zero_residual = zr;
  return out;
}

Subspace projected_kernel(const Matrix& a, const Matrix& b,
                          const ToleranceConfig& tol) {
  check_row_shapes(a, b);
  if (!is_right_invertible(hcat(a, b), tol))
    throw NotRightInvertible(
        "projected_kernel: row operator is not surjective");
  const Subspace kernel = kernel_of(hcat(a, b), tol);
  const Matrix first_component = kernel.basis().topRows(a.rows());
  return range_of(first_component, tol);
}

ReducedTransfer reduced_transfer(const Matrix& a, const Matrix& b,
                                 const RowDecomposition& dec,
                                 const BlockForm& blocks,
                                 const ToleranceConfig& tol) {
  ReducedTransfer out;
  out.domain = projected_kernel(a, b, tol);
  const Matrix a_t2 =
      dec.r_int.basis().adjoint() * a * out.domain.basis();
  if (blocks.b2.rows() == 0 || blocks.b2.cols() == 0) {
    out.map = Matrix::Zero(dec.y2.dim(), out.domain.dim());
    out.membership_residual = a_t2.norm();
  } else {
    out.map = blocks.b2.colPivHouseholderQr().solve(a_t2);
    double worst = 0.0;
    const Matrix defect = blocks.b2 * out.map - a_t2;
    for (Index j = 0; j < defect.cols(); ++j)
      worst = std::max(worst, defect.col(j).norm());
    out.membership_residual = worst;
  }
  if (out.membership_residual > 1e-6 * sigma_max_of(a))
    throw MembershipViolated(
        "reduced_transfer: Atilde2 image leaves R(B2); rank structure "
        "misclassified upstream");
  return out;
}

}  // namespace opmat
