#include "opmat/subspace.hpp"

#include <string>

namespace opmat {

Subspace Subspace::from_orthonormal(Index ambient, Matrix basis) {
  if (basis.rows() != ambient)
    throw ShapeError("Subspace: basis rows must equal ambient dimension");
  if (basis.cols() > ambient)
    throw ShapeError("Subspace: dimension exceeds ambient");
  const Matrix gram = basis.adjoint() * basis;
  const double defect =
      (gram - Matrix::Identity(basis.cols(), basis.cols())).norm();
  if (defect > 1e-10)
    throw std::invalid_argument("Subspace: basis is not orthonormal, defect " +
                                std::to_string(defect));
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::zero(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, 0);
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::Identity(ambient, ambient);
  return s;
}

Subspace range_of(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() == 0 || m.cols() == 0) return Subspace::zero(m.rows());
  const SvdResult svd = svd_full(m);
  const double tau = rank_threshold(m.rows(), m.cols(), svd.sigma(0), tol);
  const Index r = numerical_rank(svd.sigma, tau);
  Matrix basis = svd.u.leftCols(r);
  fix_column_phases(basis);
  return Subspace::from_orthonormal(m.rows(), std::move(basis));
}

Subspace kernel_of(const Matrix& m, const ToleranceConfig& tol) {
  if (m.cols() == 0) return Subspace::zero(0);
  if (m.rows() == 0) return Subspace::full(m.cols());
  const SvdResult svd = svd_full(m);
  const double tau = rank_threshold(m.rows(), m.cols(), svd.sigma(0), tol);
  const Index r = numerical_rank(svd.sigma, tau);
  Matrix basis = svd.v.rightCols(m.cols() - r);
  fix_column_phases(basis);
  return Subspace::from_orthonormal(m.cols(), std::move(basis));
}

Subspace complement(const Subspace& s, const ToleranceConfig& tol) {
  if (s.dim() == 0) return Subspace::full(s.ambient());
  if (s.dim() == s.ambient()) return Subspace::zero(s.ambient());
  return kernel_of(s.basis().adjoint(), tol);
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2,
                      const ToleranceConfig& tol) {
  if (s1.ambient() != s2.ambient())
    throw AmbientMismatch("subspace_sum: ambient dimensions differ");
  return range_of(hcat(s1.basis(), s2.basis()), tol);
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2,
                            const ToleranceConfig& tol) {
  if (s1.ambient() != s2.ambient())
    throw AmbientMismatch("subspace_intersect: ambient dimensions differ");
  return complement(
      subspace_sum(complement(s1, tol), complement(s2, tol), tol), tol);
}

Subspace subspace_ominus(const Subspace& s, const Subspace& s1,
                         const ToleranceConfig& tol) {
  if (s.ambient() != s1.ambient())
    throw AmbientMismatch("subspace_ominus: ambient dimensions differ");
  if (s1.dim() > 0) {
    const Matrix defect = s1.basis() - s.projector() * s1.basis();
    if (sigma_max_of(defect) > tol.subspace_eq_tol)
      throw ContainmentViolated("subspace_ominus: subtrahend not contained");
  }
  if (s1.dim() == 0) return s;
  const Matrix reduced = s.basis() - s1.projector() * s.basis();
  return range_of(reduced, tol);
}

SubspaceEquality subspace_equals(const Subspace& s1, const Subspace& s2,
                                 const ToleranceConfig& tol) {
  if (s1.ambient() != s2.ambient())
    throw AmbientMismatch("subspace_equals: ambient dimensions differ");
  const double residual = sigma_max_of(s1.projector() - s2.projector());
  return {residual <= tol.subspace_eq_tol, residual};
}

std::vector<Matrix> oblique_components(const std::vector<Subspace>& parts,
                                       const Matrix& v,
                                       const ToleranceConfig& tol) {
  if (parts.empty()) throw DirectSumDegenerate("oblique_components: no parts");
  const Index n = parts.front().ambient();
  Index total = 0;
  for (const Subspace& part : parts) {
    if (part.ambient() != n)
      throw AmbientMismatch("oblique_components: ambient dimensions differ");
    total += part.dim();
  }
  if (v.rows() != n)
    throw ShapeError("oblique_components: vector rows do not match ambient");
  if (total != n)
    throw DirectSumDegenerate(
        "oblique_components: concatenated bases are not square");

  Matrix concat(n, n);
  Index at = 0;
  for (const Subspace& part : parts) {
    concat.middleCols(at, part.dim()) = part.basis();
    at += part.dim();
  }
  if (n > 0) {
    const SvdResult svd = svd_full(concat);
    const double tau = rank_threshold(n, n, svd.sigma(0), tol);
    if (svd.sigma(n - 1) <= tau)
      throw DirectSumDegenerate("oblique_components: parts are not a direct sum");
  }

  const Matrix coords = concat.colPivHouseholderQr().solve(v);
  const double residual = (concat * coords - v).norm();
  if (residual > 1e-10 * std::max(1e-300, v.norm()))
    throw DirectSumDegenerate(
        "oblique_components: reconstruction residual too large");

  std::vector<Matrix> out;
  out.reserve(parts.size());
  at = 0;
  for (const Subspace& part : parts) {
    out.push_back(coords.middleRows(at, part.dim()));
    at += part.dim();
  }
  return out;
}

}  // namespace opmat
