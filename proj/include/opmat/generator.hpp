#pragma once

#include <optional>
#include <string>

#include "opmat/certificate.hpp"
#include "opmat/rng.hpp"

namespace opmat {

enum class GenKind { Dense, RankStructured, Hamiltonian, Special, SingularPlanted };

const char* to_string(GenKind k);
std::optional<GenKind> gen_kind_from(const std::string& name);

/// Recipe for one deterministic instance. rank_a / rank_b /
/// dim_intersection drive rank_structured (the constraint
/// rank_a + rank_b - dim_intersection = n forces row surjectivity);
/// for the special kind rank_a is dim X'.
struct GeneratorSpec {
  GenKind kind = GenKind::Dense;
  Index n = 0;
  Index p = 0;
  Index rank_a = -1;
  Index rank_b = -1;
  Index dim_intersection = -1;
  std::uint64_t seed = 0;
  ToleranceConfig tol;

  void validate() const;  ///< throws SpecInconsistent
};

/// Deterministic for a fixed spec. Every output has passed its structural
/// post-conditions (row surjectivity; prescribed ranks and intersection
/// dimension; special-case structure; planted instances oracle-Singular).
Instance generate(const GeneratorSpec& spec);

/// Batch/acceptance variant: additionally re-mixes the seed until the
/// oracle verdict is decisive, so agreement checks are never vacuous.
Instance generate_conditioned(const GeneratorSpec& spec);

}  // namespace opmat
