#pragma once

#include "opmat/types.hpp"

namespace opmat {

/// Full SVD m = u * diag(sigma) * v^H with square unitary factors.
/// Shapes with zero rows or columns yield identity factors and an empty
/// sigma, so callers never special-case empty operators.
struct SvdResult {
  Matrix u;           ///< rows x rows
  RealVector sigma;   ///< min(rows, cols), descending
  Matrix v;           ///< cols x cols
};

SvdResult svd_full(const Matrix& m);

/// Largest singular value; 0 for empty shapes.
double sigma_max_of(const Matrix& m);

/// Smallest singular value; +infinity for empty shapes (vacuous operators
/// between trivial spaces count as isomorphisms).
double sigma_min_of(const Matrix& m);

/// Scale-aware cutoff: rank_coeff * max(rows, cols) * eps * sigma_max.
double rank_threshold(Index rows, Index cols, double sigma_max,
                      const ToleranceConfig& tol);

/// Number of singular values strictly above tau.
Index numerical_rank(const RealVector& sigma, double tau);

/// Rotates each column so its largest-magnitude entry is real positive
/// (ties broken by lowest index). Zero columns are left untouched.
void fix_column_phases(Matrix& columns);

/// Tri-state decision on a decisive singular value against the band
/// (tau, borderline_factor * tau].
Verdict band_verdict(double sigma_min, double tau, double borderline_factor);

}  // namespace opmat
