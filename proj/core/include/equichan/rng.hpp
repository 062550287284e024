// Copyright 2026 the equichan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQUICHAN_RNG_HPP
#define EQUICHAN_RNG_HPP

#include <cstdint>
#include <random>

#include "equichan/linalg.hpp"

namespace equichan {

/// splitmix64 step; used to derive independent per-task seeds so that
/// parallel scans stay byte-identical regardless of the thread count.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic random source. Distributions are implemented directly on
/// the mt19937_64 bit stream (the standard pins the engine but not the
/// library distributions), so identical seeds give identical streams.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gauss() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Standard complex normal (independent N(0, 1/2) parts scaled to unit
  /// variance overall is not needed here; plain N(0,1) + i N(0,1) is fine
  /// for direction sampling).
  Complex complex_gauss() {
    const double re = gauss();
    const double im = gauss();
    return {re, im};
  }

  /// Ginibre matrix rescaled to unit Frobenius norm.
  ComplexMatrix unit_ginibre(int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        m(i, j) = complex_gauss();
      }
    }
    const double norm = m.norm();
    if (norm > 0.0) m /= norm;
    return m;
  }

  /// Unit vector with complex Gaussian entries.
  Eigen::VectorXcd unit_vector(int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_gauss();
    const double norm = v.norm();
    if (norm > 0.0) v /= norm;
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace equichan

#endif  // EQUICHAN_RNG_HPP
