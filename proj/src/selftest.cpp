#include "opmat/selftest.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "opmat/batch.hpp"

namespace opmat {

namespace fixtures {

namespace {
Matrix diag2(Complex a11, Complex a22) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a11;
  m(1, 1) = a22;
  return m;
}
}  // namespace

Instance split_diag(const Matrix& c, const Matrix& d,
                    const ToleranceConfig& tol) {
  return Instance::validated(diag2(1, 0), diag2(0, 1), c, d, tol);
}

Instance unit_row(Complex c1, Complex c2, Complex d,
                  const ToleranceConfig& tol) {
  Matrix b(2, 1);
  b << Complex(1), Complex(0);
  Matrix c(1, 2);
  c << c1, c2;
  Matrix dd(1, 1);
  dd << d;
  return Instance::validated(Matrix::Identity(2, 2), b, c, dd, tol);
}

HamiltonianInstance split_diag_hamiltonian(Complex c11, Complex c12,
                                           Complex c22,
                                           const ToleranceConfig& tol) {
  Matrix c(2, 2);
  c << c11, c12, std::conj(c12), c22;
  return HamiltonianInstance::validated(diag2(1, 0), diag2(0, 1), c, tol);
}

Instance square_only(const Matrix& a, const ToleranceConfig& tol) {
  const Index n = a.rows();
  return Instance::validated(a, Matrix(n, 0), Matrix(0, n), Matrix(0, 0), tol);
}

}  // namespace fixtures

namespace {

struct Checker {
  bool ok = true;
  int checks = 0;
  std::ostream& log;

  explicit Checker(std::ostream& l) : log(l) {}

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

Subspace random_subspace(Rng& rng, Index ambient, Index dim) {
  if (dim == 0) return Subspace::zero(ambient);
  for (;;) {
    const Subspace s = range_of(rng.gaussian(ambient, dim));
    if (s.dim() == dim) return s;
  }
}

// Cross-check route for intersections: null space of the stacked
// complementary projectors.
Subspace intersect_stacked(const Subspace& s1, const Subspace& s2) {
  const Index n = s1.ambient();
  Matrix stacked(2 * n, n);
  stacked << Matrix::Identity(n, n) - s1.projector(),
      Matrix::Identity(n, n) - s2.projector();
  return kernel_of(stacked);
}

bool group_split_diag(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  const Instance base = fixtures::split_diag(Matrix::Zero(2, 2),
                                             Matrix::Identity(2, 2), tol);
  const RowDecomposition dec = decompose_row(base.a, base.b, tol);
  c.expect(dec.x1.dim() == 1 && dec.x2.dim() == 0 && dec.x3.dim() == 1,
           "X dims (1,0,1)");
  c.expect(dec.y1.dim() == 1 && dec.y2.dim() == 0 && dec.y3.dim() == 1,
           "Y dims (1,0,1)");
  c.expect(dec.r_int.dim() == 0, "trivial range intersection");
  const BlockForm blocks = block_form(base.a, base.b, dec, tol);
  c.expect(blocks.a3.rows() == 1 && std::abs(blocks.a3(0, 0) - 1.0) < 1e-12,
           "A3 = (1)");
  c.expect(blocks.b3.rows() == 1 && std::abs(blocks.b3(0, 0) - 1.0) < 1e-12,
           "B3 = (1)");
  c.expect(blocks.zero_residual < 1e-12, "exact zero pattern");

  Matrix cc = Matrix::Zero(2, 2);
  cc(1, 1) = 3;
  Certificate good =
      certify(fixtures::split_diag(cc, Matrix::Identity(2, 2), tol));
  c.expect(good.verdict == Verdict::Invertible && good.agreement,
           "c22 = 3 invertible");
  Matrix cs(2, 2);
  cs << Complex(7), Complex(7), Complex(7), Complex(0);
  Certificate bad =
      certify(fixtures::split_diag(cs, Matrix::Identity(2, 2), tol));
  c.expect(bad.verdict == Verdict::Singular && bad.agreement,
           "c22 = 0 singular");

  const Subspace xp = range_of(base.a, tol);
  const Subspace xpp = kernel_of(base.a, tol);
  Certificate special = special_certify(base.a, base.b, cc,
                                        Matrix::Identity(2, 2), xp, xpp, tol);
  c.expect(special.verdict == Verdict::Invertible, "special case agrees");
  return c.ok;
}

bool group_unit_row(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const Complex c1 = rng.cnormal(), c2 = rng.cnormal();
    const Complex d = i % 4 == 0 ? c1 : rng.cnormal();
    const Instance inst = fixtures::unit_row(c1, c2, d, tol);
    const Certificate cert = certify(inst);
    const bool singular = std::abs(d - c1) == 0.0;
    c.expect(cert.verdict ==
                 (singular ? Verdict::Singular : Verdict::Invertible),
             "verdict follows |d - c1|");
    c.expect(cert.agreement, "oracle agreement");
    if (!singular)
      c.expect(std::abs(cert.reduced(0, 0) - (c1 - d)) < 1e-10,
               "reduced value c1 - d");
  }
  const Subspace pk =
      projected_kernel(Matrix::Identity(2, 2), fixtures::unit_row(0, 0, 1).b);
  Matrix e1 = Matrix::Zero(2, 1);
  e1(0, 0) = 1;
  c.expect(subspace_equals(pk, range_of(e1)).equal, "projected kernel span e1");
  return c.ok;
}

bool group_hamiltonian_fixture(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  for (double c22 : {0.0, 1e-3, -1e-3, 1.0, -1.0, 1e3, -1e3}) {
    const HamiltonianInstance ham =
        fixtures::split_diag_hamiltonian(0.7, Complex(0.2, -0.4), c22, tol);
    const Certificate hcert = certify_hamiltonian(ham);
    const Certificate gcert = certify(ham.as_general());
    c.expect(hcert.verdict == gcert.verdict, "matches general certificate");
    c.expect(hcert.verdict ==
                 (c22 == 0.0 ? Verdict::Singular : Verdict::Invertible),
             "verdict follows c22");
    c.expect(hcert.agreement && gcert.agreement, "oracle agreement");
    const RangeIdentityResult ri = verify_range_identity(ham.a, ham.b, tol);
    c.expect(ri.equal && ri.residual < 1e-8, "adjoint-range identity");
  }
  return c.ok;
}

bool group_square_only(std::ostream& log) {
  Checker c(log);
  const Certificate inv = certify(fixtures::square_only(Matrix::Identity(3, 3)));
  c.expect(inv.verdict == Verdict::Invertible && inv.agreement, "A = I");
  Matrix a = Matrix::Identity(3, 3);
  a(2, 2) = 0;
  const Certificate sing = certify(fixtures::square_only(a));
  c.expect(sing.verdict == Verdict::Singular &&
               sing.reason == Reason::RowNotSurjective && sing.agreement,
           "rank-deficient A");
  return c.ok;
}

bool group_subspace_properties(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  Rng rng(1234);
  for (int i = 0; i < 100; ++i) {
    const Index n = rng.uniform_index(1, 8);
    const Subspace s1 = random_subspace(rng, n, rng.uniform_index(0, n));
    const Subspace s2 = random_subspace(rng, n, rng.uniform_index(0, n));
    const Subspace meet = subspace_intersect(s1, s2, tol);
    const Subspace join = subspace_sum(s1, s2, tol);
    c.expect(subspace_equals(meet, intersect_stacked(s1, s2), tol).equal,
             "intersection matches stacked-projector route");
    c.expect(subspace_equals(complement(join, tol),
                             subspace_intersect(complement(s1, tol),
                                                complement(s2, tol), tol),
                             tol)
                 .equal,
             "sum/complement duality");
    c.expect(join.dim() + meet.dim() == s1.dim() + s2.dim(), "dimension law");
    c.expect(subspace_equals(complement(complement(s1, tol), tol), s1, tol)
                 .equal,
             "complement involution");
  }
  return c.ok;
}

bool group_one_sided(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const Index rows = rng.uniform_index(1, 8);
    const Index cols = rng.uniform_index(rows, 10);
    const Matrix t = rng.gaussian(rows, cols);
    if (!is_right_invertible(t, tol)) continue;
    const SidedInverseResult s = right_inverse(t, tol);
    c.expect(s.residual <= 1e-8, "right composition residual");
    c.expect(s.range_check_residual <= 1e-8, "range(S) = kernel(T)^perp");
    const Matrix u = t.adjoint();
    const SidedInverseResult l = left_inverse(u, tol);
    c.expect(l.residual <= 1e-8, "left composition residual");
  }
  return c.ok;
}

bool group_certificates(std::ostream& log) {
  Checker c(log);
  for (GenKind kind : {GenKind::Dense, GenKind::RankStructured,
                       GenKind::SingularPlanted}) {
    BatchSpec spec;
    spec.kind = kind;
    spec.count = 40;
    spec.seed = 2024;
    spec.max_dim = 8;
    const std::vector<Report> reports = run_batch_serial(spec);
    for (const Report& r : reports) {
      c.expect(r.agreement, std::string("agreement (") + to_string(kind) + ")");
      c.expect(r.verdict != Verdict::Indeterminate,
               "decisive after conditioning");
      if (kind == GenKind::SingularPlanted)
        c.expect(r.verdict == Verdict::Singular, "planted verdict singular");
    }
  }
  return c.ok;
}

bool group_hamiltonian_random(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  for (int i = 0; i < 30; ++i) {
    GeneratorSpec g;
    g.kind = GenKind::Hamiltonian;
    g.n = g.p = 2 + (i % 7);
    g.seed = mix_seed(777, static_cast<std::uint64_t>(i));
    g.tol = tol;
    const Instance inst = generate_conditioned(g);
    const HamiltonianInstance ham =
        HamiltonianInstance::validated(inst.a, inst.b, inst.c, tol);
    const Certificate hcert = certify_hamiltonian(ham);
    const Certificate gcert = certify(inst);
    c.expect(hcert.verdict == gcert.verdict, "specialized = general verdict");
    c.expect(hcert.agreement, "oracle agreement");
    const RangeIdentityResult ri = verify_range_identity(inst.a, inst.b, tol);
    c.expect(ri.equal && ri.residual <= 1e-8, "adjoint-range identity");
  }
  return c.ok;
}

bool group_special_random(std::ostream& log) {
  Checker c(log);
  const ToleranceConfig tol;
  for (int i = 0; i < 20; ++i) {
    GeneratorSpec g;
    g.kind = GenKind::Special;
    g.n = g.p = 2 + (i % 5);
    g.rank_a = 1 + (i % g.n);
    g.seed = mix_seed(31337, static_cast<std::uint64_t>(i));
    g.tol = tol;
    const Instance inst = generate_conditioned(g);
    const Subspace xp = range_of(inst.a, tol);
    const Subspace xpp = kernel_of(inst.a, tol);
    const Certificate sp =
        special_certify(inst.a, inst.b, inst.c, inst.d, xp, xpp, tol);
    const Certificate full = certify(inst);
    if (sp.verdict != Verdict::Indeterminate &&
        full.verdict != Verdict::Indeterminate)
      c.expect(sp.verdict == full.verdict, "special = general verdict");
    c.expect(sp.agreement, "oracle agreement");
  }
  return c.ok;
}

}  // namespace

bool run_selftest(std::ostream& log) {
  struct Entry {
    const char* name;
    bool (*fn)(std::ostream&);
  };
  const Entry groups[] = {
      {"split-diag fixture", group_split_diag},
      {"unit-row fixture", group_unit_row},
      {"hamiltonian fixture", group_hamiltonian_fixture},
      {"square-only fixture", group_square_only},
      {"subspace properties", group_subspace_properties},
      {"one-sided inverses", group_one_sided},
      {"certificate agreement", group_certificates},
      {"hamiltonian agreement", group_hamiltonian_random},
      {"special-case agreement", group_special_random},
  };
  bool all = true;
  for (const Entry& g : groups) {
    const bool ok = g.fn(log);
    log << (ok ? "ok   " : "FAIL ") << g.name << "\n";
    all = all && ok;
  }
  log << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all;
}

}  // namespace opmat
