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

#include "boundent/chessboard.hpp"

#include <cmath>
#include <numbers>

namespace boundent::chessboard {

using linalg::joint_index;

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(phi, two_pi);  // [-pi, pi]
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

MatrixC GaugeTransform::local_unitary() const {
  std::array<Complex, kDim> diag{};
  for (std::size_t k = 0; k < kLocalDim; ++k)
    for (std::size_t l = 0; l < kLocalDim; ++l) diag[joint_index(k, l)] = std::polar(1.0, alpha[k] + beta[l]);
  return MatrixC::diagonal(diag);
}

ChessboardVectors build_vectors(const RawParams& p) {
  ChessboardVectors v;
  for (auto& x : v) x.assign(kDim, Complex{});

  v[0][joint_index(0, 0)] = p.m;
  v[0][joint_index(2, 0)] = p.s;
  v[0][joint_index(1, 1)] = p.n;

  v[1][joint_index(1, 0)] = p.a;
  v[1][joint_index(0, 1)] = p.b;
  v[1][joint_index(2, 1)] = p.c;

  v[2][joint_index(0, 0)] = std::conj(p.n);
  v[2][joint_index(1, 1)] = -std::conj(p.m);
  v[2][joint_index(0, 2)] = p.t;

  v[3][joint_index(1, 0)] = std::conj(p.b);
  v[3][joint_index(0, 1)] = -std::conj(p.a);
  v[3][joint_index(1, 2)] = p.d;
  return v;
}

StateMatrix build_rho(const RawParams& p) {
  const auto vs = build_vectors(p);
  double weight = 0.0;
  for (const auto& v : vs) weight += std::norm(linalg::norm(v));
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw ParameterError("build_rho: parameters give a zero (or non-finite) state");

  const double norm_constant = 1.0 / weight;
  MatrixC rho(kDim, kDim);
  // Entries outside each vector's support stay exact zeros.
  for (const auto& v : vs)
    for (std::size_t i = 0; i < kDim; ++i) {
      if (v[i] == Complex{}) continue;
      for (std::size_t j = 0; j < kDim; ++j)
        if (v[j] != Complex{}) rho(i, j) += v[i] * std::conj(v[j]);
    }
  rho *= norm_constant;
  return {std::move(rho), norm_constant, p};
}

namespace {

void require_positive_denominators(double m, double n, const char* who) {
  if (!(m > 0.0) || !(n > 0.0))
    throw ParameterError(std::string(who) + ": m and n must be positive");
}

}  // namespace

CanonicalParams family_a(double a, double b, double c, double d, double m, double n) {
  require_positive_denominators(m, n, "family_a");
  return {a, b, c, d, m, n, Complex{a * c / n, 0.0}, Complex{a * d / m, 0.0}};
}

CanonicalParams family_b(double a, double b, double c, double d, double m, double n, double phi_s, double phi_t) {
  require_positive_denominators(m, n, "family_b");
  return {a, b, c, d, m, n, std::polar(a * c / n, phi_s), std::polar(a * d / m, phi_t)};
}

Canonicalized canonicalize(const RawParams& raw) {
  for (const Complex z : {raw.a, raw.b, raw.c, raw.d, raw.m, raw.n})
    if (!(std::abs(z) > kGenericTol))
      throw DegenerateGauge("canonicalize: a, b, c, d, m, n must all be nonzero");

  const double th_a = std::arg(raw.a), th_b = std::arg(raw.b), th_c = std::arg(raw.c);
  const double th_d = std::arg(raw.d), th_m = std::arg(raw.m), th_n = std::arg(raw.n);

  // Entry (k, l) of V_j picks up alpha_k + beta_l + gamma_j. V3 and V4 carry
  // conj(m), conj(n), conj(a), conj(b), which ties their phases to V1, V2:
  //   gamma_3 = -gamma_1 - (alpha_0 + alpha_1 + beta_0 + beta_1)
  //   gamma_4 = -gamma_2 - (alpha_0 + alpha_1 + beta_0 + beta_1)
  // With alpha_0 = beta_0 = 0, zeroing arg m, n, a, b, c, d leaves six
  // equations in gamma_1, gamma_2, alpha_1, alpha_2, beta_1, beta_2.
  GaugeTransform g;
  const double gamma1 = -th_m;
  const double alpha1 = 0.5 * ((th_m - th_n) + (th_b - th_a));
  const double beta1 = 0.5 * ((th_m - th_n) - (th_b - th_a));
  const double gamma2 = -th_a - alpha1;
  const double alpha2 = -th_c - beta1 - gamma2;
  const double beta2 = gamma2 + beta1 - th_d;
  const double gamma3 = -gamma1 - alpha1 - beta1;
  const double gamma4 = -gamma2 - alpha1 - beta1;

  g.alpha = {0.0, alpha1, alpha2};
  g.beta = {0.0, beta1, beta2};
  g.gamma = {gamma1, gamma2, gamma3, gamma4};

  CanonicalParams out;
  out.a = std::abs(raw.a);
  out.b = std::abs(raw.b);
  out.c = std::abs(raw.c);
  out.d = std::abs(raw.d);
  out.m = std::abs(raw.m);
  out.n = std::abs(raw.n);
  out.s = raw.s * std::polar(1.0, alpha2 + gamma1);
  out.t = raw.t * std::polar(1.0, beta2 + gamma3);

  for (auto* arr : {g.alpha.data(), g.beta.data()})
    for (int k = 0; k < 3; ++k) arr[k] = wrap_phase(arr[k]);
  for (auto& x : g.gamma) x = wrap_phase(x);
  return {out, g};
}

std::pair<Complex, Complex> invariants(const RawParams& p) {
  for (const Complex z : {p.b, p.s, p.n, p.d})
    if (!(std::abs(z) > kGenericTol)) throw ParameterError("invariants: b, s, n and d must be nonzero");
  return {p.c * p.m / (p.b * p.s), std::conj(p.b) * p.t / (std::conj(p.n) * p.d)};
}

VectorC product_vector(std::span<const Complex> first, std::span<const Complex> second) {
  VectorC out(first.size() * second.size());
  for (std::size_t l = 0; l < second.size(); ++l)
    for (std::size_t k = 0; k < first.size(); ++k) out[joint_index(k, l, first.size())] = first[k] * second[l];
  return out;
}

}  // namespace boundent::chessboard
