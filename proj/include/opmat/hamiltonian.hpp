#pragma once

#include "opmat/certificate.hpp"

namespace opmat {

/// H = [[A, B], [C, -A^H]] with Hermitian B and C. Hermiticity is
/// validated, never silently repaired; callers wanting symmetrization
/// average (B + B^H)/2 themselves before construction.
struct HamiltonianInstance {
  Matrix a, b, c;
  ToleranceConfig tol;

  Index n() const { return a.rows(); }
  Matrix d() const { return -a.adjoint(); }
  Instance as_general() const;

  /// Throws ShapeError / NotHermitian.
  static HamiltonianInstance validated(Matrix a, Matrix b, Matrix c,
                                       ToleranceConfig tol = {});
};

/// Single-condition certificate: (C2 - (-A^H)2 B2^{-1} Atilde2) on the
/// projected kernel, surjecting onto N(P_{R(B)^perp} A). That codomain
/// equals (R(-A^H|N(B)))^perp, which is cross-checked on every run; the
/// verdict always matches the general certificate on [[A,B],[C,-A^H]].
Certificate certify_hamiltonian(const HamiltonianInstance& inst);

struct RangeIdentityResult {
  bool equal;
  double residual;
};

/// Verifies (R(-A^H|N(B)))^perp = N(P_{R(B)^perp} A) for Hermitian B.
RangeIdentityResult verify_range_identity(const Matrix& a, const Matrix& b,
                                          const ToleranceConfig& tol = {});

}  // namespace opmat
