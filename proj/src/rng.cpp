#include "opmat/rng.hpp"

#include <cmath>

namespace opmat {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (salt + 1));
  splitmix64(state);
  return splitmix64(state);
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // Box-Muller, cosine branch only; u1 kept away from zero.
  const double u1 = std::max(uniform01(), 0x1.0p-60);
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Index Rng::uniform_index(Index lo, Index hi) {
  if (hi < lo) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Index>(engine_() % span);
}

Matrix Rng::gaussian(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = cnormal();
  return m;
}

Matrix Rng::hermitian_gaussian(Index n) {
  const Matrix g = gaussian(n, n);
  return 0.5 * (g + g.adjoint());
}

}  // namespace opmat
