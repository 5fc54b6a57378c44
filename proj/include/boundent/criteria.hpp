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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boundent/chessboard.hpp"

namespace boundent::criteria {

using chessboard::CanonicalParams;
using chessboard::RawParams;
using chessboard::StateMatrix;
using linalg::Complex;
using linalg::MatrixC;
using linalg::VectorC;

enum class VerdictKind { BoundEntangled, NptEntangled, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string reason;
};

enum class RangeAnalytic { NoProductInRange, DegenerateMcBs, DegenerateBtNd, NonGeneric };

std::string_view to_string(VerdictKind v);
std::string_view to_string(RangeAnalytic r);
std::optional<VerdictKind> parse_verdict(std::string_view s);
std::optional<RangeAnalytic> parse_range_analytic(std::string_view s);

struct RangeSearchConfig {
  int restarts = 200;
  int max_iters = 500;
  double tol_converge = 1e-12;
  std::uint64_t seed = 0;
};

/// Decision thresholds used by certify().
struct Tolerances {
  double ppt = 1e-10;              ///< NPT when min eig(sigma) < -ppt
  double search_residual = 1e-8;   ///< below this the search found a product vector
  double generic = 1e-12;          ///< parameter magnitude treated as zero
  double degenerate_rel = 1e-10;   ///< relative tolerance for mc == bs, b*t == n*d
  double sigma_equals_rho = 1e-12; ///< Frobenius distance
};

struct RangeSearchResult {
  double residual = 0.0;
  VectorC witness;  ///< unit product vector achieving `residual`
  VectorC first;    ///< unit first-subsystem factor
  VectorC second;   ///< unit second-subsystem factor
  int restart = -1; ///< index of the winning restart
  int iterations = 0;
};

struct CertificationReport {
  RawParams params;
  std::vector<double> spectrum;  ///< eigenvalues of rho, descending
  double pt_min_eigenvalue = 0.0;
  bool sigma_equals_rho = false;
  RangeAnalytic analytic_range = RangeAnalytic::NonGeneric;
  double search_residual = 0.0;
  std::optional<VectorC> witness;
  Verdict verdict;
};

/// Smallest eigenvalue of the partial transpose of rho.
double ppt_min_eigenvalue(const StateMatrix& state);

/// Analytic range criterion: a product vector can lie in range(rho) only when
/// mc == bs (branch with vanishing last second-subsystem component) or
/// conj(b) t == conj(n) d (branch with vanishing last first-subsystem
/// component). Both ratios are gauge invariant, so raw parameters are fine.
RangeAnalytic range_analytic(const RawParams& p, const Tolerances& tol = {});
inline RangeAnalytic range_analytic(const CanonicalParams& p, const Tolerances& tol = {}) {
  return range_analytic(p.to_raw(), tol);
}

/// Orthogonal projector onto span of eigenvectors of rho with eigenvalue
/// above `threshold`.
MatrixC range_projector(const MatrixC& rho, double threshold = 1e-10);

/// <v|(I - P)|v> / <v|v> for the projector P; 0 for the zero vector.
double range_residual(const MatrixC& range, std::span<const Complex> v);

/// <e (x) f | Q | e (x) f>
double product_expectation(const MatrixC& q, std::span<const Complex> e, std::span<const Complex> f);

/// One restart of the alternating minimization of <e (x) f|Q|e (x) f>
/// starting from second-subsystem vector `f0`. Each half-step takes the
/// lowest eigenvector of the 3x3 effective matrix, so the objective never
/// increases. When `history` is non-null it receives the objective after
/// every half-step.
RangeSearchResult alternating_minimization(const MatrixC& complement, std::span<const Complex> f0,
                                           const RangeSearchConfig& cfg, std::vector<double>* history = nullptr);

/// Random unit start vector for restart `index`.
VectorC restart_start(std::uint64_t seed, int index);

/// Best product vector over cfg.restarts random starts for the range
/// projector `range`. Restarts run in parallel; the reduction picks the
/// lowest residual, ties broken by restart index.
RangeSearchResult product_in_range_search(const MatrixC& range, const RangeSearchConfig& cfg);
/// Serial reference for product_in_range_search; results are identical.
RangeSearchResult product_in_range_search_serial(const MatrixC& range, const RangeSearchConfig& cfg);

/// Search over range(rho) = span{V_1..V_4} built from state.params.
RangeSearchResult product_in_range_search(const StateMatrix& state, const RangeSearchConfig& cfg);

/// Explicit product vector in span{V_1, V_2} for the mc == bs case:
///   (m, k a, s) (x) (1, k b / m, 0),  k = sqrt(mn / ab).
/// Throws chessboard::ParameterError if mc != bs or a, b, m, n are not positive.
VectorC degenerate_witness(const CanonicalParams& p, const Tolerances& tol = {});

CertificationReport certify(const RawParams& p, const RangeSearchConfig& cfg, const Tolerances& tol = {});
inline CertificationReport certify(const CanonicalParams& p, const RangeSearchConfig& cfg,
                                   const Tolerances& tol = {}) {
  return certify(p.to_raw(), cfg, tol);
}

/// certify() for each parameter set, fanned out over OpenMP threads. Item k
/// uses search seed chessboard::item_seed(cfg.seed, k); output order matches
/// input order.
std::vector<CertificationReport> certify_batch(std::span<const RawParams> params, const RangeSearchConfig& cfg,
                                               const Tolerances& tol = {});
/// Serial reference for certify_batch.
std::vector<CertificationReport> certify_batch_serial(std::span<const RawParams> params,
                                                      const RangeSearchConfig& cfg, const Tolerances& tol = {});

}  // namespace boundent::criteria
