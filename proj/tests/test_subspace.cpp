#include <doctest.h>

#include "test_support.hpp"

using namespace opmat;
using namespace opmat::test;

TEST_CASE("range: diagonal, zero and single-column operators") {
  CHECK(subspace_equals(range_of(diag2(1, 0)), span_of(unit(2, 0))).equal);
  CHECK(range_of(Matrix::Zero(2, 2)).dim() == 0);
  Matrix b(2, 1);
  b << Complex(1), Complex(0);
  CHECK(subspace_equals(range_of(b), span_of(unit(2, 0))).equal);
}

TEST_CASE("kernel: diagonal, identity and a 1x3 row") {
  CHECK(subspace_equals(kernel_of(diag2(1, 0)), span_of(unit(2, 1))).equal);
  CHECK(kernel_of(Matrix::Identity(3, 3)).dim() == 0);

  // Exact solve of x1 + x3 = 0: kernel = span{(-1,0,1)/sqrt2, e2}.
  Matrix row(1, 3);
  row << Complex(1), Complex(0), Complex(1);
  const Subspace k = kernel_of(row);
  CHECK(k.dim() == 2);
  Vector v(3);
  v << Complex(-1), Complex(0), Complex(1);
  v /= std::sqrt(2.0);
  CHECK((k.projector() * v - v).norm() < 1e-12);
}

TEST_CASE("complement: coordinate and tilted lines") {
  CHECK(subspace_equals(complement(span_of(unit(2, 0))), span_of(unit(2, 1)))
            .equal);
  CHECK(complement(Subspace::full(3)).dim() == 0);
  Vector diag_line(2), anti_line(2);
  diag_line << Complex(1), Complex(1);
  anti_line << Complex(1), Complex(-1);
  CHECK(subspace_equals(complement(span_of(Vector(diag_line / std::sqrt(2.0)))),
                        span_of(Vector(anti_line / std::sqrt(2.0))))
            .equal);
}

TEST_CASE("sum and intersection") {
  const Subspace e1 = span_of(unit(2, 0));
  const Subspace e2 = span_of(unit(2, 1));
  CHECK(subspace_sum(e1, e2).dim() == 2);
  CHECK(subspace_intersect(e1, e2).dim() == 0);
  CHECK(subspace_equals(subspace_sum(e1, e1), e1).equal);
  CHECK(subspace_equals(subspace_intersect(e1, e1), e1).equal);

  Matrix first_two(3, 2), last_two(3, 2);
  first_two << Complex(1), Complex(0), Complex(0), Complex(1), Complex(0),
      Complex(0);
  last_two << Complex(0), Complex(0), Complex(1), Complex(0), Complex(0),
      Complex(1);
  const Subspace meet = subspace_intersect(span_of(first_two), span_of(last_two));
  CHECK(meet.dim() == 1);
  CHECK(subspace_equals(meet, span_of(unit(3, 1))).equal);
}

TEST_CASE("sum rejects mismatched ambients") {
  CHECK_THROWS_AS(subspace_sum(Subspace::full(2), Subspace::full(3)),
                  AmbientMismatch);
  CHECK_THROWS_AS(subspace_equals(Subspace::zero(2), Subspace::zero(4)),
                  AmbientMismatch);
}

TEST_CASE("ominus: coordinate splits and a Gram-Schmidt step") {
  CHECK(subspace_equals(subspace_ominus(Subspace::full(2), span_of(unit(2, 0))),
                        span_of(unit(2, 1)))
            .equal);
  const Subspace s = span_of(unit(3, 2));
  CHECK(subspace_ominus(s, s).dim() == 0);

  Matrix plane(3, 2);
  plane << Complex(1), Complex(0), Complex(0), Complex(1), Complex(0),
      Complex(0);
  Vector diag_line(3), anti_line(3);
  diag_line << Complex(1), Complex(1), Complex(0);
  anti_line << Complex(1), Complex(-1), Complex(0);
  const Subspace rest = subspace_ominus(
      span_of(plane), span_of(Vector(diag_line / std::sqrt(2.0))));
  CHECK(rest.dim() == 1);
  CHECK(subspace_equals(rest, span_of(Vector(anti_line / std::sqrt(2.0)))).equal);

  CHECK_THROWS_AS(subspace_ominus(span_of(unit(3, 0)), span_of(unit(3, 1))),
                  ContainmentViolated);
}

TEST_CASE("equality is basis independent and angle sensitive") {
  Rng rng(5);
  const Subspace s = random_subspace(rng, 4, 2);
  // Rotate the basis by a random unitary; the subspace is unchanged.
  const SvdResult mix = svd_full(rng.gaussian(2, 2));
  const Subspace rotated =
      Subspace::from_orthonormal(4, Matrix(s.basis() * (mix.u * mix.v.adjoint())));
  const SubspaceEquality same = subspace_equals(s, rotated);
  CHECK(same.equal);
  CHECK(same.residual <= 1e-12);

  const SubspaceEquality different =
      subspace_equals(span_of(unit(2, 0)), span_of(unit(2, 1)));
  CHECK_FALSE(different.equal);
  CHECK(different.residual == doctest::Approx(1.0).epsilon(1e-12));

  // Tilting the line by eps makes the projector distance sin(angle).
  const double eps = 1e-3;
  Vector tilted(2);
  tilted << Complex(1), Complex(eps);
  tilted /= tilted.norm();
  const SubspaceEquality tilt =
      subspace_equals(span_of(unit(2, 0)), span_of(tilted));
  CHECK_FALSE(tilt.equal);
  CHECK(std::abs(tilt.residual - eps / std::sqrt(1.0 + eps * eps)) < 1e-9);
}

TEST_CASE("oblique components") {
  SUBCASE("orthogonal parts reduce to projections") {
    Rng rng(17);
    const Subspace s = random_subspace(rng, 5, 2);
    const Subspace t = complement(s);
    const Matrix v = rng.gaussian(5, 3);
    const auto parts = oblique_components({s, t}, v);
    CHECK((parts[0] - s.basis().adjoint() * v).norm() < 1e-10);
    CHECK((parts[1] - t.basis().adjoint() * v).norm() < 1e-10);
  }

  SUBCASE("tilted pair solves the 2x2 system") {
    Vector diag_line(2);
    diag_line << Complex(1), Complex(1);
    const auto parts = oblique_components(
        {span_of(unit(2, 0)), span_of(Vector(diag_line / std::sqrt(2.0)))},
        Matrix(unit(2, 1)));
    REQUIRE(parts[0].rows() == 1);
    REQUIRE(parts[1].rows() == 1);
    CHECK(std::abs(parts[0](0, 0) - Complex(-1)) < 1e-12);
    CHECK(std::abs(parts[1](0, 0) - Complex(std::sqrt(2.0))) < 1e-12);
  }

  SUBCASE("repeated part is degenerate") {
    CHECK_THROWS_AS(oblique_components({span_of(unit(2, 0)), span_of(unit(2, 0))},
                                       Matrix(unit(2, 1))),
                    DirectSumDegenerate);
  }
}

TEST_CASE("duality identities, dimension law, involution") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const Index n = rng.uniform_index(1, 12);
    const Subspace s1 = random_subspace(rng, n, rng.uniform_index(0, n));
    const Subspace s2 = random_subspace(rng, n, rng.uniform_index(0, n));

    const Subspace meet = subspace_intersect(s1, s2);
    CHECK(subspace_equals(meet, intersect_via_projectors(s1, s2)).equal);

    const Subspace join = subspace_sum(s1, s2);
    CHECK(subspace_equals(complement(join),
                          subspace_intersect(complement(s1), complement(s2)))
              .equal);

    CHECK(join.dim() + meet.dim() == s1.dim() + s2.dim());
    CHECK(subspace_equals(complement(complement(s1)), s1).equal);
  }
}

TEST_CASE("determinism and the phase convention") {
  Rng rng(123);
  for (int i = 0; i < 25; ++i) {
    const Matrix m = rng.gaussian(rng.uniform_index(1, 9),
                                  rng.uniform_index(1, 9));
    const Subspace a = range_of(m);
    const Subspace b = range_of(m);
    REQUIRE(a.dim() == b.dim());
    CHECK(a.basis() == b.basis());  // bit identical

    for (Index j = 0; j < a.dim(); ++j) {
      Index at = 0;
      double best = -1;
      for (Index r = 0; r < a.basis().rows(); ++r) {
        if (std::abs(a.basis()(r, j)) > best) {
          best = std::abs(a.basis()(r, j));
          at = r;
        }
      }
      CHECK(a.basis()(at, j).imag() == doctest::Approx(0.0).epsilon(1e-15));
      CHECK(a.basis()(at, j).real() > 0.0);
    }
  }
}
