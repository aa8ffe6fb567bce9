#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opmat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thresholds steering every rank decision and verdict band.
struct ToleranceConfig {
  double rank_coeff = 1.0;          ///< scales the numerical-rank cutoff
  double subspace_eq_tol = 1e-8;    ///< projector-distance bound for subspace equality
  double borderline_factor = 100.0; ///< width of the Indeterminate band, in units of the cutoff

  /// Throws std::invalid_argument unless all fields are positive and
  /// borderline_factor >= 1.
  void validate() const;
};

enum class Verdict { Invertible, Singular, Indeterminate };

const char* to_string(Verdict v);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AmbientMismatch : Error { using Error::Error; };
struct ContainmentViolated : Error { using Error::Error; };
struct DirectSumDegenerate : Error { using Error::Error; };
struct NotRightInvertible : Error { using Error::Error; };
struct NotLeftInvertible : Error { using Error::Error; };
struct PivotSingular : Error { using Error::Error; };
struct MembershipViolated : Error { using Error::Error; };
struct StructureViolated : Error { using Error::Error; };
struct DLeftInvertibilityFailed : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NonSquare : Error { using Error::Error; };
struct SpecInconsistent : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };

bool all_finite(const Matrix& m);

Matrix hcat(const Matrix& left, const Matrix& right);
Matrix vcat(const Matrix& top, const Matrix& bottom);

}  // namespace opmat
