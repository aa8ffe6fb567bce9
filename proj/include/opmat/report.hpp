#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "opmat/hamiltonian.hpp"

namespace opmat {

using Json = nlohmann::ordered_json;

/// A parsed instance file. kind "hamiltonian" carries the validated
/// Hamiltonian form alongside the assembled general instance.
struct ParsedInstance {
  bool hamiltonian = false;
  Instance instance;
  std::optional<HamiltonianInstance> ham;
};

/// Throws ParseError (malformed JSON, offending field named), ShapeError
/// (shape/finiteness violations) or NotHermitian.
ParsedInstance parse_instance_json(const Json& j,
                                   const std::optional<double>& rank_coeff_override = {},
                                   bool symmetrize = false);
ParsedInstance load_instance_file(const std::string& path,
                                  const std::optional<double>& rank_coeff_override = {},
                                  bool symmetrize = false);

Json instance_to_json(const Instance& inst, const std::string& kind = "general");
Json hamiltonian_to_json(const HamiltonianInstance& inst);

/// Flat result record with a fixed field order for diffable output.
struct Report {
  Verdict verdict = Verdict::Indeterminate;
  Reason reason = Reason::None;
  bool cond_i_holds = true;
  double cond_i_sigma_min = std::numeric_limits<double>::quiet_NaN();
  Index reduced_rows = 0, reduced_cols = 0;
  double reduced_sigma_min = std::numeric_limits<double>::quiet_NaN();
  double oracle_sigma_min = 0.0;
  bool agreement = true;
  std::optional<DecompositionDims> dims;
  double zero_residual = std::numeric_limits<double>::quiet_NaN();
  double umv_residual = std::numeric_limits<double>::quiet_NaN();
  std::optional<Vector> witness;
};

Report make_report(const Certificate& cert);
Json report_to_json(const Report& report);
Report report_from_json(const Json& j);
std::string render_text(const Report& report);

}  // namespace opmat
