// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <random>

#include "boundent/linalg.hpp"

namespace boundent::testing {

/// Random Hermitian matrix with Gaussian entries.
inline linalg::MatrixC random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  linalg::MatrixC m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = {re, im};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline double max_entry_distance(const linalg::MatrixC& x, const linalg::MatrixC& y) {
  return (x - y).max_abs();
}

}  // namespace boundent::testing
