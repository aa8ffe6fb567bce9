#pragma once

#include <ostream>

#include "opmat/hamiltonian.hpp"

namespace opmat {
namespace fixtures {

/// A = diag(1, 0), B = diag(0, 1): complementary split ranges, trivial
/// intersection. C, D free 2x2 blocks.
Instance split_diag(const Matrix& c, const Matrix& d,
                    const ToleranceConfig& tol = {});

/// n = 2, p = 1: A = I, B = e1, C = (c1 c2), D = (d). The assembled 3x3
/// matrix has determinant d - c1.
Instance unit_row(Complex c1, Complex c2, Complex d,
                  const ToleranceConfig& tol = {});

/// Hamiltonian over the split-diagonal row; invertible exactly when
/// c22 != 0.
HamiltonianInstance split_diag_hamiltonian(Complex c11, Complex c12,
                                           Complex c22,
                                           const ToleranceConfig& tol = {});

/// p = 0: the matrix is A itself.
Instance square_only(const Matrix& a, const ToleranceConfig& tol = {});

}  // namespace fixtures

/// Fixture families plus per-module invariant sweeps; one line per group.
bool run_selftest(std::ostream& log);

}  // namespace opmat
