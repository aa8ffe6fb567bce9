#pragma once

#include "opmat/subspace.hpp"

namespace opmat {

/// One-sided inverse realized as the Moore-Penrose pseudoinverse: the
/// canonical element with zero component on the kernel and range inside
/// the coimage, matching the explicit constructions for both sides.
struct SidedInverseResult {
  Matrix inverse;
  double residual;             ///< ||composition - I||_F
  double range_check_residual; ///< right: range(S) vs kernel(T)^perp; left: kernel(S) vs range(T)^perp
};

/// Full row rank at numerical rank, i.e. surjectivity.
bool is_right_invertible(const Matrix& t, const ToleranceConfig& tol = {});

/// Full column rank, i.e. injectivity (range closedness is automatic here).
bool is_left_invertible(const Matrix& t, const ToleranceConfig& tol = {});

SidedInverseResult right_inverse(const Matrix& t, const ToleranceConfig& tol = {});
SidedInverseResult left_inverse(const Matrix& t, const ToleranceConfig& tol = {});

enum class SchurPivot { UseA, UseB };

/// Classical pivot-based certificate: with A (resp. B) invertible, M is
/// invertible iff D - C A^{-1} B (resp. C - D B^{-1} A) is. The decisive
/// singular value is banded against the assembled instance's threshold so
/// verdicts compose with the main certificate.
Verdict schur_certify(const Matrix& a, const Matrix& b, const Matrix& c,
                      const Matrix& d, SchurPivot pivot,
                      const ToleranceConfig& tol = {});

struct RowIsomorphismResult {
  bool is_iso;
  bool cond_i;   ///< both kernels trivial
  bool cond_ii;  ///< ranges are each other's orthogonal complements
};

/// Characterizes when the row operator (A B) is bijective. With p >= 1 this
/// is impossible at finite dimension, so is_iso reduces to p == 0 and A
/// invertible.
RowIsomorphismResult row_isomorphism_check(const Matrix& a, const Matrix& b,
                                           const ToleranceConfig& tol = {});

struct KernelNecessityResult {
  bool m_possible;
};

/// Necessary condition: a 2x2 operator matrix over a nontrivial second
/// space cannot be invertible when the row kernel is trivial.
KernelNecessityResult kernel_necessity_check(const Matrix& a, const Matrix& b,
                                             Index p,
                                             const ToleranceConfig& tol = {});

}  // namespace opmat
