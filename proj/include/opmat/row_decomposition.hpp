#pragma once

#include "opmat/inverses.hpp"

namespace opmat {

/// Space decomposition induced by a right-invertible row operator (A B):
/// the domain splits into six mutually orthogonal parts and the codomain
/// into R(A)^perp, R(B)^perp (a non-orthogonal direct pair) plus their
/// orthogonal complement R(A) cap R(B).
struct RowDecomposition {
  Subspace x1;  ///< N(A)
  Subspace x2;  ///< N(A)^perp ominus X3
  Subspace x3;  ///< N(P_{R(B)^perp} A)^perp
  Subspace y1;  ///< N(B)
  Subspace y2;  ///< N(B)^perp ominus Y3
  Subspace y3;  ///< N(P_{R(A)^perp} B)^perp
  Subspace ra_perp;
  Subspace rb_perp;
  Subspace r_int;  ///< R(A) cap R(B)
};

RowDecomposition decompose_row(const Matrix& a, const Matrix& b,
                               const ToleranceConfig& tol = {});

/// Coordinates of the row operator against the decomposition bases. Each
/// block is the orthogonal projection onto its codomain piece expressed in
/// that piece's basis: block = U_piece^H * Op * U_part. zero_residual is
/// the largest norm among the structurally-zero slots of the pattern
///   [ 0  0  0  B3 0  0 ]      rows: R(A)^perp, R(B)^perp, R_int
///   [ 0  0  A3 0  0  0 ]      cols: X1 X2 X3 Y3 Y2 Y1
///   [ 0  A2 A0 B0 B2 0 ]
struct BlockForm {
  Matrix a0, a2, a3, b0, b2, b3;
  double zero_residual;
};

BlockForm block_form(const Matrix& a, const Matrix& b,
                     const RowDecomposition& dec,
                     const ToleranceConfig& tol = {});

/// P_X(N((A B))): image of the row kernel under projection onto the first
/// component. Coincides with X1 + X2 and with N(P_{R(B)^perp} A).
Subspace projected_kernel(const Matrix& a, const Matrix& b,
                          const ToleranceConfig& tol = {});

/// The map B2^{-1} Atilde2 on the projected kernel, materialized column by
/// column through a least-squares solve against B2. membership_residual
/// records the worst defect of Atilde2 x from R(B2).
struct ReducedTransfer {
  Subspace domain;  ///< projected kernel
  Matrix map;       ///< dim(Y2) x dim(domain), coordinates into Y2
  double membership_residual = 0.0;
};

ReducedTransfer reduced_transfer(const Matrix& a, const Matrix& b,
                                 const RowDecomposition& dec,
                                 const BlockForm& blocks,
                                 const ToleranceConfig& tol = {});

}  // namespace opmat
