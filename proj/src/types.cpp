#include "opmat/types.hpp"

#include <cmath>

namespace opmat {

void ToleranceConfig::validate() const {
  if (!(rank_coeff > 0.0) || !(subspace_eq_tol > 0.0) || !(borderline_factor >= 1.0)) {
    throw std::invalid_argument(
        "ToleranceConfig: rank_coeff and subspace_eq_tol must be positive, "
        "borderline_factor must be >= 1");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Invertible: return "Invertible";
    case Verdict::Singular: return "Singular";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

Matrix hcat(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows())
    throw ShapeError("hcat: row counts differ");
  Matrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

Matrix vcat(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols())
    throw ShapeError("vcat: column counts differ");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

}  // namespace opmat
