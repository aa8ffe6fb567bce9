#include "opmat/certificate.hpp"

#include <algorithm>
#include <array>

namespace opmat {

Matrix Instance::assemble() const {
  Matrix m(n() + p(), n() + p());
  m << a, b, c, d;
  return m;
}

Instance Instance::validated(Matrix a, Matrix b, Matrix c, Matrix d,
                             ToleranceConfig tol) {
  tol.validate();
  const Index n = a.rows();
  const Index p = d.rows();
  if (a.cols() != n) throw ShapeError("Instance: A must be square");
  if (b.rows() != n || b.cols() != p)
    throw ShapeError("Instance: B must be n x p");
  if (c.rows() != p || c.cols() != n)
    throw ShapeError("Instance: C must be p x n");
  if (d.cols() != p) throw ShapeError("Instance: D must be square");
  if (!all_finite(a) || !all_finite(b) || !all_finite(c) || !all_finite(d))
    throw ShapeError("Instance: non-finite entries");
  return Instance{std::move(a), std::move(b), std::move(c), std::move(d), tol};
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::RowNotSurjective: return "RowNotSurjective";
    case Reason::CondIFailed: return "CondIFailed";
    case Reason::ReducedNotSquare: return "ReducedNotSquare";
    case Reason::ReducedSingular: return "ReducedSingular";
    case Reason::ReducedBorderline: return "ReducedBorderline";
    case Reason::TransferInconsistent: return "TransferInconsistent";
  }
  return "?";
}

namespace {

DecompositionDims dims_of(const RowDecomposition& dec) {
  return {dec.x1.dim(),      dec.x2.dim(),      dec.x3.dim(),
          dec.y1.dim(),      dec.y2.dim(),      dec.y3.dim(),
          dec.ra_perp.dim(), dec.rb_perp.dim(), dec.r_int.dim()};
}

void finish_agreement(Certificate& cert) {
  if (cert.verdict == Verdict::Indeterminate ||
      cert.oracle_verdict == Verdict::Indeterminate) {
    cert.agreement = true;  // vacuous
  } else {
    cert.agreement = cert.verdict == cert.oracle_verdict;
  }
}

// Embeds an X-side (top) or Y-side (bottom) basis into C^{n+p}.
Matrix embed_top(const Subspace& s, Index p) {
  Matrix out = Matrix::Zero(s.ambient() + p, s.dim());
  out.topRows(s.ambient()) = s.basis();
  return out;
}

Matrix embed_bottom(const Subspace& s, Index n) {
  Matrix out = Matrix::Zero(n + s.ambient(), s.dim());
  out.bottomRows(s.ambient()) = s.basis();
  return out;
}

struct BlockLayout {
  // Row offsets in coordinate space: ra_perp, rb_perp, r_int, w, r_dnb.
  std::array<Index, 5> row_off, row_dim;
  // Column offsets: pk, x3, y3, y2, y1.
  std::array<Index, 5> col_off, col_dim;
};

BlockLayout layout_of(const FullBlockForm& f) {
  BlockLayout l;
  l.row_dim = {f.row.ra_perp.dim(), f.row.rb_perp.dim(), f.row.r_int.dim(),
               f.w.dim(), f.r_dnb.dim()};
  l.col_dim = {f.pk.dim(), f.row.x3.dim(), f.row.y3.dim(), f.row.y2.dim(),
               f.row.y1.dim()};
  Index at = 0;
  for (int i = 0; i < 5; ++i) { l.row_off[i] = at; at += l.row_dim[i]; }
  at = 0;
  for (int i = 0; i < 5; ++i) { l.col_off[i] = at; at += l.col_dim[i]; }
  return l;
}

UmvReduction build_umv(const Instance& inst, const RowDecomposition& dec,
                       const Subspace& pk, const Subspace& w,
                       const Subspace& r_dnb) {
  const Index n = inst.n();
  const Index p = inst.p();
  if (pk.dim() + dec.x3.dim() != n)
    throw MembershipViolated(
        "umv_reduce: projected kernel does not complement X3; rank structure "
        "misclassified upstream");

  UmvReduction red;
  FullBlockForm& f = red.blocks;
  f.row = dec;
  f.pk = pk;
  f.w = w;
  f.r_dnb = r_dnb;

  // Coordinate maps: stacked piece-projections on the codomain side,
  // orthonormal group bases on the domain side.
  Matrix phi(n + p, n + p);
  phi << hcat(hcat(dec.ra_perp.basis(), dec.rb_perp.basis()),
              dec.r_int.basis()).adjoint(),
      Matrix::Zero(n, p), Matrix::Zero(p, n),
      hcat(w.basis(), r_dnb.basis()).adjoint();
  Matrix psi(n + p, n + p);
  {
    Index at = 0;
    const auto put = [&](const Matrix& cols) {
      psi.middleCols(at, cols.cols()) = cols;
      at += cols.cols();
    };
    put(embed_top(pk, p));
    put(embed_top(dec.x3, p));
    put(embed_bottom(dec.y3, n));
    put(embed_bottom(dec.y2, n));
    put(embed_bottom(dec.y1, n));
  }
  red.m_coords = phi * inst.assemble() * psi;

  const BlockLayout l = layout_of(f);
  const auto slice = [&](int ri, int ci) {
    return red.m_coords.block(l.row_off[ri], l.col_off[ci], l.row_dim[ri],
                              l.col_dim[ci]);
  };
  f.b3 = slice(0, 2);
  f.a3 = slice(1, 1);
  f.a_t2 = slice(2, 0);
  f.a0 = slice(2, 1);
  f.b0 = slice(2, 2);
  f.b2 = slice(2, 3);
  f.c2 = slice(3, 0);
  f.c3 = slice(3, 1);
  f.d1 = slice(3, 2);
  f.d2 = slice(3, 3);
  f.c4 = slice(4, 0);
  f.c5 = slice(4, 1);
  f.d3 = slice(4, 2);
  f.d4 = slice(4, 3);
  f.d5 = slice(4, 4);

  double zr = 0.0;
  const int zero_slots[10][2] = {{0, 0}, {0, 1}, {0, 3}, {0, 4}, {1, 0},
                                 {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  for (const auto& s : zero_slots)
    zr = std::max(zr, slice(s[0], s[1]).norm());
  f.zero_residual = zr;

  const Matrix a3_inv =
      f.a3.colPivHouseholderQr().solve(Matrix::Identity(f.a3.rows(), f.a3.rows()));
  const Matrix b3_inv =
      f.b3.colPivHouseholderQr().solve(Matrix::Identity(f.b3.rows(), f.b3.rows()));
  const Matrix d5_inv =
      f.d5.colPivHouseholderQr().solve(Matrix::Identity(f.d5.rows(), f.d5.rows()));

  red.u = Matrix::Identity(n + p, n + p);
  const auto put_u = [&](int ri, int ci, const Matrix& blockval) {
    red.u.block(l.row_off[ri], l.row_off[ci], l.row_dim[ri], l.row_dim[ci]) =
        blockval;
  };
  put_u(2, 0, -f.b0 * b3_inv);
  put_u(2, 1, -f.a0 * a3_inv);
  put_u(3, 0, -f.d1 * b3_inv);
  put_u(3, 1, -f.c3 * a3_inv);

  red.v = Matrix::Identity(n + p, n + p);
  const auto put_v = [&](int ri, int ci, const Matrix& blockval) {
    red.v.block(l.col_off[ri], l.col_off[ci], l.col_dim[ri], l.col_dim[ci]) =
        blockval;
  };
  put_v(4, 0, -d5_inv * f.c4);
  put_v(4, 1, -d5_inv * f.c5);
  put_v(4, 2, -d5_inv * f.d3);
  put_v(4, 3, -d5_inv * f.d4);

  red.target = Matrix::Zero(n + p, n + p);
  const auto put_t = [&](int ri, int ci, const Matrix& blockval) {
    red.target.block(l.row_off[ri], l.col_off[ci], l.row_dim[ri],
                     l.col_dim[ci]) = blockval;
  };
  put_t(0, 2, f.b3);
  put_t(1, 1, f.a3);
  put_t(2, 0, f.a_t2);
  put_t(2, 3, f.b2);
  put_t(3, 0, f.c2);
  put_t(3, 3, f.d2);
  put_t(4, 4, f.d5);

  red.residual = (red.u * red.m_coords * red.v - red.target).norm();
  return red;
}

}  // namespace

Analysis analyze(const Instance& inst) {
  const ToleranceConfig& tol = inst.tol;
  Analysis out;
  Certificate& cert = out.certificate;

  const OracleResult oracle = oracle_invertible(inst.assemble(), tol);
  cert.oracle_verdict = oracle.verdict;
  cert.oracle_sigma_min = oracle.sigma_min;
  cert.witness = oracle.kernel_witness;
  const double tau_m = oracle.tau;

  if (!is_right_invertible(hcat(inst.a, inst.b), tol)) {
    cert.verdict = Verdict::Singular;
    cert.reason = Reason::RowNotSurjective;
    finish_agreement(cert);
    return out;
  }

  const RowDecomposition dec = decompose_row(inst.a, inst.b, tol);
  const BlockForm blocks = block_form(inst.a, inst.b, dec, tol);
  cert.dims = dims_of(dec);
  cert.zero_residual = blocks.zero_residual;

  const Matrix dnb = inst.d * dec.y1.basis();
  cert.cond_i.holds = is_left_invertible(dnb, tol);
  if (dec.y1.dim() > 0) cert.cond_i.sigma_min = sigma_min_of(dnb);
  if (!cert.cond_i.holds) {
    cert.verdict = Verdict::Singular;
    cert.reason = Reason::CondIFailed;
    finish_agreement(cert);
    return out;
  }

  const Subspace r_dnb = range_of(dnb, tol);
  const Subspace w = complement(r_dnb, tol);
  const Subspace pk = projected_kernel(inst.a, inst.b, tol);
  ReducedTransfer rt;
  try {
    rt = reduced_transfer(inst.a, inst.b, dec, blocks, tol);
  } catch (const MembershipViolated&) {
    cert.verdict = Verdict::Indeterminate;
    cert.reason = Reason::TransferInconsistent;
    finish_agreement(cert);
    return out;
  }

  const Matrix c2 = w.basis().adjoint() * inst.c * pk.basis();
  const Matrix d2 = w.basis().adjoint() * inst.d * dec.y2.basis();
  cert.reduced = c2 - d2 * rt.map;
  cert.reduced_sigma_min = sigma_min_of(cert.reduced);

  if (cert.reduced.rows() != cert.reduced.cols()) {
    cert.verdict = Verdict::Singular;
    cert.reason = Reason::ReducedNotSquare;
  } else {
    cert.verdict =
        band_verdict(cert.reduced_sigma_min, tau_m, tol.borderline_factor);
    cert.reason = cert.verdict == Verdict::Singular ? Reason::ReducedSingular
                  : cert.verdict == Verdict::Indeterminate
                      ? Reason::ReducedBorderline
                      : Reason::None;
  }
  finish_agreement(cert);

  try {
    out.umv = build_umv(inst, dec, pk, w, r_dnb);
    cert.umv_residual = out.umv->residual;
    const FullBlockForm& f = out.umv->blocks;
    Matrix delta(f.row.r_int.dim() + w.dim(), pk.dim() + f.row.y2.dim());
    delta << f.a_t2, f.b2, f.c2, f.d2;
    out.delta = std::move(delta);
  } catch (const MembershipViolated&) {
    // rank misclassification; the certificate stands, the transforms do not
  }
  return out;
}

Certificate certify(const Instance& inst) { return analyze(inst).certificate; }

UmvReduction umv_reduce(const Instance& inst) {
  if (!is_right_invertible(hcat(inst.a, inst.b), inst.tol))
    throw NotRightInvertible("umv_reduce: row operator is not surjective");
  Analysis full = analyze(inst);
  if (!full.certificate.cond_i.holds)
    throw DLeftInvertibilityFailed("umv_reduce: D|N(B) is not left invertible");
  if (!full.umv)
    throw MembershipViolated("umv_reduce: decomposition inconsistent");
  return std::move(*full.umv);
}

Matrix delta_operator(const Instance& inst) {
  if (!is_right_invertible(hcat(inst.a, inst.b), inst.tol))
    throw NotRightInvertible("delta_operator: row operator is not surjective");
  Analysis full = analyze(inst);
  if (!full.certificate.cond_i.holds)
    throw DLeftInvertibilityFailed(
        "delta_operator: D|N(B) is not left invertible");
  if (!full.delta)
    throw MembershipViolated("delta_operator: decomposition inconsistent");
  return std::move(*full.delta);
}

Certificate special_certify(const Matrix& a, const Matrix& b, const Matrix& c,
                            const Matrix& d, const Subspace& xp,
                            const Subspace& xpp, const ToleranceConfig& tol) {
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n ||
      c.cols() != n || d.rows() != n || d.cols() != n)
    throw ShapeError("special_certify: all blocks must be n x n");
  if (xp.ambient() != n || xpp.ambient() != n)
    throw ShapeError("special_certify: subspace ambient mismatch");

  const bool structure_ok =
      subspace_equals(range_of(a, tol), xp, tol).equal &&
      subspace_equals(kernel_of(a, tol), xpp, tol).equal &&
      subspace_equals(range_of(b, tol), xpp, tol).equal &&
      subspace_equals(kernel_of(b, tol), xp, tol).equal &&
      subspace_equals(complement(xp, tol), xpp, tol).equal;
  if (!structure_ok)
    throw StructureViolated(
        "special_certify: ranges/kernels do not match the X' + X'' structure");

  const Matrix dxp = d * xp.basis();
  if (!is_left_invertible(dxp, tol))
    throw DLeftInvertibilityFailed(
        "special_certify: D|X' is not left invertible");

  Certificate cert;
  const Instance inst = Instance::validated(a, b, c, d, tol);
  const OracleResult oracle = oracle_invertible(inst.assemble(), tol);
  cert.oracle_verdict = oracle.verdict;
  cert.oracle_sigma_min = oracle.sigma_min;
  cert.witness = oracle.kernel_witness;

  const RowDecomposition dec = decompose_row(a, b, tol);
  cert.dims = dims_of(dec);
  cert.zero_residual = block_form(a, b, dec, tol).zero_residual;

  cert.cond_i.holds = true;
  if (xp.dim() > 0) cert.cond_i.sigma_min = sigma_min_of(dxp);

  const Subspace w = complement(range_of(dxp, tol), tol);
  cert.reduced = w.basis().adjoint() * c * xpp.basis();
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
  finish_agreement(cert);
  return cert;
}

}  // namespace opmat
