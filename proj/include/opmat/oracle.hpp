#pragma once

#include <optional>

#include "opmat/svd.hpp"

namespace opmat {

/// Brute-force ground truth: verdict from the full SVD of the assembled
/// square matrix, banded exactly like the certificate.
struct OracleResult {
  Verdict verdict;
  double sigma_min;
  double sigma_max;
  double tau;
  std::optional<Vector> kernel_witness;  ///< right singular vector of sigma_min when Singular
};

OracleResult oracle_invertible(const Matrix& m, const ToleranceConfig& tol = {});

}  // namespace opmat
