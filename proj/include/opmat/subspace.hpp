#pragma once

#include <vector>

#include "opmat/svd.hpp"

namespace opmat {

/// Closed subspace of C^n carried by a column-orthonormal basis.
/// The zero subspace is an n x 0 basis; values are immutable once built.
class Subspace {
 public:
  Subspace() = default;

  /// Validates column orthonormality (||B^H B - I||_F <= 1e-10).
  static Subspace from_orthonormal(Index ambient, Matrix basis);
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Matrix projector() const { return basis_ * basis_.adjoint(); }

 private:
  Index ambient_ = 0;
  Matrix basis_{0, 0};
};

/// Column space at numerical rank; basis columns are phase-fixed left
/// singular vectors.
Subspace range_of(const Matrix& m, const ToleranceConfig& tol = {});

/// Null space (right singular vectors for sigma <= tau), phase-fixed.
Subspace kernel_of(const Matrix& m, const ToleranceConfig& tol = {});

/// Orthogonal complement within the ambient space.
Subspace complement(const Subspace& s, const ToleranceConfig& tol = {});

Subspace subspace_sum(const Subspace& s1, const Subspace& s2,
                      const ToleranceConfig& tol = {});

/// Computed through the duality identity (S1 cap S2) = (S1^perp + S2^perp)^perp.
Subspace subspace_intersect(const Subspace& s1, const Subspace& s2,
                            const ToleranceConfig& tol = {});

/// S ominus S1: the part of S orthogonal to S1. Requires S1 contained in S.
Subspace subspace_ominus(const Subspace& s, const Subspace& s1,
                         const ToleranceConfig& tol = {});

struct SubspaceEquality {
  bool equal;
  double residual;  ///< spectral norm of the projector difference
};

SubspaceEquality subspace_equals(const Subspace& s1, const Subspace& s2,
                                 const ToleranceConfig& tol = {});

/// Coordinates of each column of v along a direct-sum decomposition:
/// v = sum_i basis_i * out_i, computed by solving the concatenated-basis
/// system. Throws DirectSumDegenerate when the concatenation is not a
/// square full-rank matrix.
std::vector<Matrix> oblique_components(const std::vector<Subspace>& parts,
                                       const Matrix& v,
                                       const ToleranceConfig& tol = {});

}  // namespace opmat
