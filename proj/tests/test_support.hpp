#pragma once

#include "opmat/rng.hpp"
#include "opmat/subspace.hpp"

namespace opmat::test {

inline Vector unit(Index n, Index at) {
  Vector v = Vector::Zero(n);
  v(at) = 1;
  return v;
}

inline Subspace span_of(const Matrix& columns) { return range_of(columns); }

inline Subspace span_of(const Vector& column) {
  return range_of(Matrix(column));
}

inline Matrix diag2(Complex a11, Complex a22) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a11;
  m(1, 1) = a22;
  return m;
}

inline Subspace random_subspace(Rng& rng, Index ambient, Index dim) {
  if (dim == 0) return Subspace::zero(ambient);
  for (;;) {
    const Subspace s = range_of(rng.gaussian(ambient, dim));
    if (s.dim() == dim) return s;
  }
}

// Independent route for intersections, used to cross-check the duality
// implementation: null space of the stacked complementary projectors.
inline Subspace intersect_via_projectors(const Subspace& s1,
                                         const Subspace& s2) {
  const Index n = s1.ambient();
  Matrix stacked(2 * n, n);
  stacked << Matrix::Identity(n, n) - s1.projector(),
      Matrix::Identity(n, n) - s2.projector();
  return kernel_of(stacked);
}

}  // namespace opmat::test
