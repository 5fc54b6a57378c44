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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "boundent/linalg.hpp"

namespace boundent::chessboard {

using linalg::Complex;
using linalg::MatrixC;
using linalg::VectorC;

inline constexpr std::size_t kLocalDim = 3;
inline constexpr std::size_t kDim = kLocalDim * kLocalDim;

/// Magnitude below which a parameter counts as zero for genericity checks.
inline constexpr double kGenericTol = 1e-12;

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// canonicalize() needs all of |a|,|b|,|c|,|d|,|m|,|n| nonzero.
class DegenerateGauge : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// The eight family parameters in an arbitrary local phase gauge.
struct RawParams {
  Complex a, b, c, d, m, n, s, t;

  friend bool operator==(const RawParams&, const RawParams&) = default;
};

/// Parameters in the gauge where a, b, c, d, m, n are nonnegative reals and
/// the two gauge-invariant phases live on s and t.
struct CanonicalParams {
  double a = 0, b = 0, c = 0, d = 0, m = 0, n = 0;
  Complex s, t;

  RawParams to_raw() const { return {a, b, c, d, m, n, s, t}; }

  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

/// Local diagonal phases U_A = diag(e^{i alpha}), U_B = diag(e^{i beta}) and
/// per-vector phases gamma (V_j -> e^{i gamma_j} V_j). All in (-pi, pi].
struct GaugeTransform {
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};
  std::array<double, 4> gamma{};

  /// U_A (x) U_B in the joint index convention.
  MatrixC local_unitary() const;
};

struct StateMatrix {
  MatrixC rho;
  double norm_constant = 0.0;
  RawParams params;
};

using ChessboardVectors = std::array<VectorC, 4>;

/// The four mutually orthogonal unnormalized eigenvectors:
///   V1 = (m, 0, s; 0, n, 0; 0, 0, 0)
///   V2 = (0, a, 0; b, 0, c; 0, 0, 0)
///   V3 = (n*, 0, 0; 0, -m*, 0; t, 0, 0)
///   V4 = (0, b*, 0; -a*, 0, 0; 0, d, 0)
ChessboardVectors build_vectors(const RawParams& p);
inline ChessboardVectors build_vectors(const CanonicalParams& p) { return build_vectors(p.to_raw()); }

/// rho = N * sum_j |V_j><V_j| with N = 1 / sum_j <V_j|V_j>.
/// Throws ParameterError when every V_j vanishes.
StateMatrix build_rho(const RawParams& p);
inline StateMatrix build_rho(const CanonicalParams& p) { return build_rho(p.to_raw()); }

/// Real sub-family with sigma == rho: s = ac/n, t = ad/m.
CanonicalParams family_a(double a, double b, double c, double d, double m, double n);

/// Modulus-constrained sub-family: |s| = ac/n, |t| = ad/m with free phases.
CanonicalParams family_b(double a, double b, double c, double d, double m, double n, double phi_s, double phi_t);

struct Canonicalized {
  CanonicalParams params;
  GaugeTransform transform;
};

/// Moves the raw parameters to the canonical gauge.
///
/// The returned transform satisfies
///   build_rho(params).rho == U rho_raw U^dagger,  U = transform.local_unitary(),
/// and rescales each V_j by e^{i gamma_j}. Throws DegenerateGauge when any of
/// |a|, |b|, |c|, |d|, |m|, |n| is below kGenericTol.
Canonicalized canonicalize(const RawParams& raw);

/// The two phase-gauge invariants (c m / (b s), conj(b) t / (conj(n) d)).
/// Throws ParameterError when b, s, n or d vanishes.
std::pair<Complex, Complex> invariants(const RawParams& p);
inline std::pair<Complex, Complex> invariants(const CanonicalParams& p) { return invariants(p.to_raw()); }

/// (e (x) f)[joint_index(k, l)] = e[k] * f[l].
VectorC product_vector(std::span<const Complex> first, std::span<const Complex> second);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phi);

}  // namespace boundent::chessboard
