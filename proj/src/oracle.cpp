#include "opmat/oracle.hpp"

namespace opmat {

OracleResult oracle_invertible(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols())
    throw NonSquare("oracle_invertible: matrix is not square");
  OracleResult out;
  if (m.rows() == 0) {
    out.verdict = Verdict::Invertible;
    out.sigma_min = std::numeric_limits<double>::infinity();
    out.sigma_max = 0.0;
    out.tau = 0.0;
    return out;
  }
  const SvdResult svd = svd_full(m);
  out.sigma_max = svd.sigma(0);
  out.sigma_min = svd.sigma(svd.sigma.size() - 1);
  out.tau = rank_threshold(m.rows(), m.cols(), out.sigma_max, tol);
  out.verdict = band_verdict(out.sigma_min, out.tau, tol.borderline_factor);
  if (out.verdict == Verdict::Singular) {
    Matrix witness = svd.v.rightCols(1);
    fix_column_phases(witness);
    out.kernel_witness = witness.col(0);
  }
  return out;
}

}  // namespace opmat
