#pragma once

#include <vector>

#include "opmat/generator.hpp"
#include "opmat/report.hpp"

namespace opmat {

struct BatchSpec {
  GenKind kind = GenKind::Dense;
  int count = 0;
  std::uint64_t seed = 0;
  Index max_dim = 8;
  ToleranceConfig tol;
};

/// Deterministic recipe for the index-th instance: shapes and ranks are
/// drawn from a per-index stream, so items are independent of evaluation
/// order.
GeneratorSpec batch_item_spec(const BatchSpec& spec, int index);

/// Evaluates one batch item (generation + certificate + oracle).
Report run_batch_item(const BatchSpec& spec, int index);

/// Reference runner: plain loop, reports ordered by index.
std::vector<Report> run_batch_serial(const BatchSpec& spec);

/// OpenMP runner over instance indices. Produces output identical to the
/// serial reference for any thread count.
std::vector<Report> run_batch_parallel(const BatchSpec& spec);

/// Verdict counts, agreement rate over decisive verdicts, dim histograms.
Json aggregate_reports(const BatchSpec& spec,
                       const std::vector<Report>& reports);

}  // namespace opmat
