#include "opmat/hamiltonian.hpp"

namespace opmat {

Instance HamiltonianInstance::as_general() const {
  return Instance::validated(a, b, c, d(), tol);
}

HamiltonianInstance HamiltonianInstance::validated(Matrix a, Matrix b,
                                                   Matrix c,
                                                   ToleranceConfig tol) {
  tol.validate();
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n ||
      c.cols() != n)
    throw ShapeError("HamiltonianInstance: A, B, C must all be n x n");
  if (!all_finite(a) || !all_finite(b) || !all_finite(c))
    throw ShapeError("HamiltonianInstance: non-finite entries");
  const double b_defect = (b - b.adjoint()).norm();
  if (b_defect > 1e-10 * std::max(1.0, b.norm()))
    throw NotHermitian("HamiltonianInstance: B is not Hermitian");
  const double c_defect = (c - c.adjoint()).norm();
  if (c_defect > 1e-10 * std::max(1.0, c.norm()))
    throw NotHermitian("HamiltonianInstance: C is not Hermitian");
  return HamiltonianInstance{std::move(a), std::move(b), std::move(c), tol};
}

Certificate certify_hamiltonian(const HamiltonianInstance& inst) {
  const ToleranceConfig& tol = inst.tol;
  const Matrix d = inst.d();
  Certificate cert;

  Matrix h(2 * inst.n(), 2 * inst.n());
  h << inst.a, inst.b, inst.c, d;
  const OracleResult oracle = oracle_invertible(h, tol);
  cert.oracle_verdict = oracle.verdict;
  cert.oracle_sigma_min = oracle.sigma_min;
  cert.witness = oracle.kernel_witness;

  const auto finish = [&cert]() {
    if (cert.verdict == Verdict::Indeterminate ||
        cert.oracle_verdict == Verdict::Indeterminate)
      cert.agreement = true;
    else
      cert.agreement = cert.verdict == cert.oracle_verdict;
  };

  if (!is_right_invertible(hcat(inst.a, inst.b), tol)) {
    cert.verdict = Verdict::Singular;
    cert.reason = Reason::RowNotSurjective;
    finish();
    return cert;
  }

  const RowDecomposition dec = decompose_row(inst.a, inst.b, tol);
  const BlockForm blocks = block_form(inst.a, inst.b, dec, tol);
  cert.dims = DecompositionDims{dec.x1.dim(),      dec.x2.dim(),
                                dec.x3.dim(),      dec.y1.dim(),
                                dec.y2.dim(),      dec.y3.dim(),
                                dec.ra_perp.dim(), dec.rb_perp.dim(),
                                dec.r_int.dim()};
  cert.zero_residual = blocks.zero_residual;

  // Left invertibility of -A^H on N(B) is forced by row surjectivity here;
  // assert it numerically instead of re-deriving it.
  const Matrix dnb = d * dec.y1.basis();
  cert.cond_i.holds = is_left_invertible(dnb, tol);
  if (dec.y1.dim() > 0) cert.cond_i.sigma_min = sigma_min_of(dnb);
  if (!cert.cond_i.holds) {
    cert.verdict = Verdict::Singular;
    cert.reason = Reason::CondIFailed;
    finish();
    return cert;
  }

  // The codomain is taken in the form N(P_{R(B)^perp} A); the adjoint-range
  // identity makes it coincide with (R(D|N(B)))^perp.
  const Subspace w =
      kernel_of(dec.rb_perp.projector() * inst.a, tol);
  const Subspace pk = projected_kernel(inst.a, inst.b, tol);
  ReducedTransfer rt;
  try {
    rt = reduced_transfer(inst.a, inst.b, dec, blocks, tol);
  } catch (const MembershipViolated&) {
    cert.verdict = Verdict::Indeterminate;
    cert.reason = Reason::TransferInconsistent;
    finish();
    return cert;
  }

  const Matrix c2 = w.basis().adjoint() * inst.c * pk.basis();
  const Matrix d2 = w.basis().adjoint() * d * dec.y2.basis();
  cert.reduced = c2 - d2 * rt.map;
  cert.reduced_sigma_min = sigma_min_of(cert.reduced);
  if (cert.reduced.rows() != cert.reduced.cols()) {
    cert.verdict = Verdict::Singular;
    cert.reason = Reason::ReducedNotSquare;
  } else {
    cert.verdict = band_verdict(cert.reduced_sigma_min, oracle.tau,
                                tol.borderline_factor);
    cert.reason = cert.verdict == Verdict::Singular ? Reason::ReducedSingular
                  : cert.verdict == Verdict::Indeterminate
                      ? Reason::ReducedBorderline
                      : Reason::None;
  }
  finish();
  return cert;
}

RangeIdentityResult verify_range_identity(const Matrix& a, const Matrix& b,
                                          const ToleranceConfig& tol) {
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n)
    throw ShapeError("verify_range_identity: A, B must be n x n");
  if ((b - b.adjoint()).norm() > 1e-10 * std::max(1.0, b.norm()))
    throw NotHermitian("verify_range_identity: B is not Hermitian");
  if (!is_right_invertible(hcat(a, b), tol))
    throw NotRightInvertible(
        "verify_range_identity: row operator is not surjective");

  const Subspace nb = kernel_of(b, tol);
  const Subspace lhs =
      complement(range_of(Matrix(-a.adjoint() * nb.basis()), tol), tol);
  const Subspace rb_perp = complement(range_of(b, tol), tol);
  const Subspace rhs = kernel_of(rb_perp.projector() * a, tol);
  const SubspaceEquality eq = subspace_equals(lhs, rhs, tol);
  return {eq.equal, eq.residual};
}

}  // namespace opmat
