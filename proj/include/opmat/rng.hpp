#pragma once

#include <cstdint>
#include <random>

#include "opmat/types.hpp"

namespace opmat {

/// splitmix64 step; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Stream seed for (seed, salt) pairs: two splitmix64 steps past the salt.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Deterministic draws on top of mt19937_64. The engine's integer stream is
/// fixed by the C++ standard; uniforms use the top 53 bits, normals a plain
/// Box-Muller transform, so draws replay across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();  ///< [0, 1)
  double normal();
  Complex cnormal();   ///< independent standard normal re and im
  Index uniform_index(Index lo, Index hi);  ///< inclusive bounds

  Matrix gaussian(Index rows, Index cols);  ///< row-major fill order
  Matrix hermitian_gaussian(Index n);       ///< (G + G^H) / 2

 private:
  std::mt19937_64 engine_;
};

}  // namespace opmat
