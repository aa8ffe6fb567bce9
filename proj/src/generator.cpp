#include "opmat/generator.hpp"

#include <string>

#include "opmat/row_decomposition.hpp"

namespace opmat {

const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::Dense: return "dense";
    case GenKind::RankStructured: return "rank_structured";
    case GenKind::Hamiltonian: return "hamiltonian";
    case GenKind::Special: return "special";
    case GenKind::SingularPlanted: return "singular_planted";
  }
  return "?";
}

std::optional<GenKind> gen_kind_from(const std::string& name) {
  if (name == "dense") return GenKind::Dense;
  if (name == "rank_structured") return GenKind::RankStructured;
  if (name == "hamiltonian") return GenKind::Hamiltonian;
  if (name == "special") return GenKind::Special;
  if (name == "singular_planted") return GenKind::SingularPlanted;
  return std::nullopt;
}

void GeneratorSpec::validate() const {
  tol.validate();
  if (n < 0 || p < 0) throw SpecInconsistent("generator: negative dimension");
  switch (kind) {
    case GenKind::Dense:
      break;
    case GenKind::RankStructured: {
      if (rank_a < 0 || rank_b < 0 || dim_intersection < 0)
        throw SpecInconsistent("rank_structured: ranks must be given");
      if (rank_a > n || rank_b > std::min(n, p))
        throw SpecInconsistent("rank_structured: rank exceeds shape");
      if (dim_intersection > std::min(rank_a, rank_b))
        throw SpecInconsistent("rank_structured: intersection exceeds a rank");
      if (rank_a + rank_b - dim_intersection != n)
        throw SpecInconsistent(
            "rank_structured: rank_a + rank_b - dim_intersection must equal n");
      break;
    }
    case GenKind::Hamiltonian:
      if (p != n) throw SpecInconsistent("hamiltonian: requires p == n");
      break;
    case GenKind::Special:
      if (p != n) throw SpecInconsistent("special: requires p == n");
      if (rank_a < 0 || rank_a > n)
        throw SpecInconsistent("special: rank_a (dim X') out of range");
      break;
    case GenKind::SingularPlanted:
      if (n < 1 || p < 1)
        throw SpecInconsistent("singular_planted: requires n, p >= 1");
      break;
  }
}

namespace {

constexpr int kMaxAttempts = 256;

Matrix conditioned_gaussian(Rng& rng, Index rows, Index cols,
                            double max_cond) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    Matrix g = rng.gaussian(rows, cols);
    if (rows == 0 || cols == 0) return g;
    const SvdResult svd = svd_full(g);
    const double smin = svd.sigma(svd.sigma.size() - 1);
    if (smin > 0.0 && svd.sigma(0) / smin <= max_cond) return g;
  }
  throw SpecInconsistent("generator: could not draw a well-conditioned factor");
}

Instance make_dense(Rng& rng, const GeneratorSpec& spec) {
  return Instance::validated(rng.gaussian(spec.n, spec.n),
                             rng.gaussian(spec.n, spec.p),
                             rng.gaussian(spec.p, spec.n),
                             rng.gaussian(spec.p, spec.p), spec.tol);
}

bool row_ok(const Instance& inst) {
  return is_right_invertible(hcat(inst.a, inst.b), inst.tol);
}

Instance make_rank_structured(Rng& rng, const GeneratorSpec& spec) {
  const Index n = spec.n, p = spec.p;
  const Index ra = spec.rank_a, rb = spec.rank_b, ri = spec.dim_intersection;
  // Frame columns: [0, ri) shared, [ri, ra) A-only, [ra, n) B-only.
  const Matrix frame = conditioned_gaussian(rng, n, n, 1e4);
  const Matrix a_cols = frame.leftCols(ra);
  Matrix b_cols(n, rb);
  if (ri > 0) b_cols.leftCols(ri) = frame.leftCols(ri);
  if (n - ra > 0) b_cols.rightCols(n - ra) = frame.rightCols(n - ra);
  const Subspace qa = range_of(a_cols, spec.tol);
  const Subspace qb = range_of(b_cols, spec.tol);
  const Matrix a = qa.basis() * rng.gaussian(ra, n);
  const Matrix b = qb.basis() * rng.gaussian(rb, p);
  return Instance::validated(a, b, rng.gaussian(p, n), rng.gaussian(p, p),
                             spec.tol);
}

bool rank_structured_ok(const Instance& inst, const GeneratorSpec& spec) {
  if (!row_ok(inst)) return false;
  const Subspace ra = range_of(inst.a, inst.tol);
  const Subspace rb = range_of(inst.b, inst.tol);
  return ra.dim() == spec.rank_a && rb.dim() == spec.rank_b &&
         subspace_intersect(ra, rb, inst.tol).dim() == spec.dim_intersection;
}

Instance make_hamiltonian(Rng& rng, const GeneratorSpec& spec) {
  const Matrix a = rng.gaussian(spec.n, spec.n);
  const Matrix b = rng.hermitian_gaussian(spec.n);
  const Matrix c = rng.hermitian_gaussian(spec.n);
  return Instance::validated(a, b, c, -a.adjoint(), spec.tol);
}

Instance make_special(Rng& rng, const GeneratorSpec& spec) {
  const Index n = spec.n;
  const Index np = spec.rank_a;
  const Index npp = n - np;
  const Subspace q = range_of(conditioned_gaussian(rng, n, n, 1e4), spec.tol);
  const Matrix u_xp = q.basis().leftCols(np);
  const Matrix u_xpp = q.basis().rightCols(npp);
  const Matrix a =
      u_xp * conditioned_gaussian(rng, np, np, 1e4) * u_xp.adjoint();
  const Matrix b =
      u_xpp * conditioned_gaussian(rng, npp, npp, 1e4) * u_xpp.adjoint();
  return Instance::validated(a, b, rng.gaussian(n, n), rng.gaussian(n, n),
                             spec.tol);
}

bool special_ok(const Instance& inst) {
  const ToleranceConfig& tol = inst.tol;
  const Subspace xp = range_of(inst.a, tol);
  const Subspace xpp = kernel_of(inst.a, tol);
  if (!subspace_equals(range_of(inst.b, tol), xpp, tol).equal) return false;
  if (!subspace_equals(kernel_of(inst.b, tol), xp, tol).equal) return false;
  if (!subspace_equals(complement(xp, tol), xpp, tol).equal) return false;
  return is_left_invertible(inst.d * xp.basis(), tol);
}

Instance make_singular_planted(Rng& rng, const GeneratorSpec& spec) {
  const Index n = spec.n, p = spec.p;
  const ToleranceConfig& tol = spec.tol;
  const Matrix a = rng.gaussian(n, n);
  const Matrix b = rng.gaussian(n, p);
  const Matrix d = rng.gaussian(p, p);
  if (!is_right_invertible(hcat(a, b), tol))
    throw SpecInconsistent("singular_planted: base row degenerate");

  const RowDecomposition dec = decompose_row(a, b, tol);
  const BlockForm blocks = block_form(a, b, dec, tol);
  const Matrix dnb = d * dec.y1.basis();
  if (!is_left_invertible(dnb, tol))
    throw SpecInconsistent("singular_planted: D|N(B) degenerate");
  const Subspace w = complement(range_of(dnb, tol), tol);
  const Subspace pk = projected_kernel(a, b, tol);
  const ReducedTransfer rt = reduced_transfer(a, b, dec, blocks, tol);
  const Index k = pk.dim();
  if (k == 0 || w.dim() != k)
    throw SpecInconsistent("singular_planted: no room to plant");

  // Reduced operator forced to R0, which annihilates a random direction.
  Matrix r0 = rng.gaussian(k, k);
  Matrix dir = rng.gaussian(k, 1);
  dir /= dir.norm();
  r0 -= (r0 * dir) * dir.adjoint();

  const Matrix d2 = w.basis().adjoint() * d * dec.y2.basis();
  const Subspace pk_perp = complement(pk, tol);
  const Subspace r_dnb = complement(w, tol);
  Matrix c = w.basis() * (r0 + d2 * rt.map) * pk.basis().adjoint();
  c += w.basis() * rng.gaussian(k, pk_perp.dim()) * pk_perp.basis().adjoint();
  c += r_dnb.basis() * rng.gaussian(r_dnb.dim(), n);
  return Instance::validated(a, b, c, d, tol);
}

Instance build(const GeneratorSpec& spec, std::uint64_t attempt_seed) {
  Rng rng(attempt_seed);
  switch (spec.kind) {
    case GenKind::Dense: return make_dense(rng, spec);
    case GenKind::RankStructured: return make_rank_structured(rng, spec);
    case GenKind::Hamiltonian: return make_hamiltonian(rng, spec);
    case GenKind::Special: return make_special(rng, spec);
    case GenKind::SingularPlanted: return make_singular_planted(rng, spec);
  }
  throw SpecInconsistent("generator: unknown kind");
}

bool posts_ok(const Instance& inst, const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GenKind::Dense: return row_ok(inst);
    case GenKind::RankStructured: return rank_structured_ok(inst, spec);
    case GenKind::Hamiltonian: return row_ok(inst);
    case GenKind::Special: return row_ok(inst) && special_ok(inst);
    case GenKind::SingularPlanted:
      return row_ok(inst) &&
             oracle_invertible(inst.assemble(), inst.tol).verdict ==
                 Verdict::Singular;
  }
  return false;
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  spec.validate();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      Instance inst = build(spec, mix_seed(spec.seed, attempt));
      if (posts_ok(inst, spec)) return inst;
    } catch (const SpecInconsistent&) {
      // degenerate draw; re-mix and retry
    }
  }
  throw SpecInconsistent("generate: structural post-conditions unreachable");
}

Instance generate_conditioned(const GeneratorSpec& spec) {
  spec.validate();
  GeneratorSpec attempt = spec;
  for (int i = 0; i < kMaxAttempts; ++i) {
    attempt.seed = i == 0 ? spec.seed : mix_seed(spec.seed, 0xC0DEBEEFULL + i);
    Instance inst = generate(attempt);
    const Verdict v = oracle_invertible(inst.assemble(), inst.tol).verdict;
    if (v == Verdict::Indeterminate) continue;
    if (spec.kind == GenKind::SingularPlanted && v != Verdict::Singular)
      continue;
    return inst;
  }
  throw SpecInconsistent("generate_conditioned: no decisive instance found");
}

}  // namespace opmat
