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

#include "boundent/criteria.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

#include "boundent/sampling.hpp"

namespace boundent::criteria {

using chessboard::kDim;
using chessboard::kLocalDim;
using linalg::joint_index;

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::BoundEntangled: return "BoundEntangled";
    case VerdictKind::NptEntangled: return "NptEntangled";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(RangeAnalytic r) {
  switch (r) {
    case RangeAnalytic::NoProductInRange: return "NoProductInRange";
    case RangeAnalytic::DegenerateMcBs: return "DegenerateMcBs";
    case RangeAnalytic::DegenerateBtNd: return "DegenerateBtNd";
    case RangeAnalytic::NonGeneric: return "NonGeneric";
  }
  return "?";
}

std::optional<VerdictKind> parse_verdict(std::string_view s) {
  for (auto v : {VerdictKind::BoundEntangled, VerdictKind::NptEntangled, VerdictKind::Inconclusive})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::optional<RangeAnalytic> parse_range_analytic(std::string_view s) {
  for (auto r : {RangeAnalytic::NoProductInRange, RangeAnalytic::DegenerateMcBs, RangeAnalytic::DegenerateBtNd,
                 RangeAnalytic::NonGeneric})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

double ppt_min_eigenvalue(const StateMatrix& state) {
  const auto sigma = linalg::partial_transpose_first(state.rho, kLocalDim, kLocalDim);
  return linalg::hermitian_eigen(sigma).eigenvalues.back();
}

namespace {

bool nearly_equal(Complex x, Complex y, double rel) { return std::abs(x - y) <= rel * (std::abs(x) + std::abs(y)); }

}  // namespace

RangeAnalytic range_analytic(const RawParams& p, const Tolerances& tol) {
  for (const Complex z : {p.a, p.b, p.c, p.d, p.m, p.n, p.s, p.t})
    if (std::abs(z) < tol.generic) return RangeAnalytic::NonGeneric;
  if (nearly_equal(p.m * p.c, p.b * p.s, tol.degenerate_rel)) return RangeAnalytic::DegenerateMcBs;
  if (nearly_equal(std::conj(p.b) * p.t, std::conj(p.n) * p.d, tol.degenerate_rel))
    return RangeAnalytic::DegenerateBtNd;
  return RangeAnalytic::NoProductInRange;
}

MatrixC range_projector(const MatrixC& rho, double threshold) {
  const auto eig = linalg::hermitian_eigen(rho);
  std::vector<VectorC> support;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
    if (eig.eigenvalues[k] > threshold) support.push_back(eig.eigenvector(k));
  if (support.empty()) return MatrixC(rho.rows(), rho.cols());
  return linalg::projector_from_vectors(support);
}

double range_residual(const MatrixC& range, std::span<const Complex> v) {
  const double nv = linalg::norm(v);
  if (nv == 0.0) return 0.0;
  const VectorC w(v.begin(), v.end());
  const VectorC pv = range * w;
  return (std::norm(nv) - linalg::inner(w, pv).real()) / std::norm(nv);
}

double product_expectation(const MatrixC& q, std::span<const Complex> e, std::span<const Complex> f) {
  const VectorC v = chessboard::product_vector(e, f);
  return linalg::inner(v, q * v).real();
}

namespace {

using Vec3 = std::array<Complex, kLocalDim>;
using Mat3 = std::array<Complex, kLocalDim * kLocalDim>;

// M[k][k'] = sum_{l,l'} conj(f_l) f_l' Q[(k,l),(k',l')]
Mat3 reduce_over_second(const MatrixC& q, const Vec3& f) {
  Mat3 out{};
  for (std::size_t k = 0; k < kLocalDim; ++k)
    for (std::size_t kp = 0; kp < kLocalDim; ++kp) {
      Complex acc{};
      for (std::size_t l = 0; l < kLocalDim; ++l)
        for (std::size_t lp = 0; lp < kLocalDim; ++lp)
          acc += std::conj(f[l]) * f[lp] * q(joint_index(k, l), joint_index(kp, lp));
      out[k * kLocalDim + kp] = acc;
    }
  return out;
}

// N[l][l'] = sum_{k,k'} conj(e_k) e_k' Q[(k,l),(k',l')]
Mat3 reduce_over_first(const MatrixC& q, const Vec3& e) {
  Mat3 out{};
  for (std::size_t l = 0; l < kLocalDim; ++l)
    for (std::size_t lp = 0; lp < kLocalDim; ++lp) {
      Complex acc{};
      for (std::size_t k = 0; k < kLocalDim; ++k)
        for (std::size_t kp = 0; kp < kLocalDim; ++kp)
          acc += std::conj(e[k]) * e[kp] * q(joint_index(k, l), joint_index(kp, lp));
      out[l * kLocalDim + lp] = acc;
    }
  return out;
}

MatrixC complement_of(const MatrixC& range) { return MatrixC::identity(range.rows()) - range; }

bool better(const RangeSearchResult& x, const RangeSearchResult& y) {
  return x.residual < y.residual || (x.residual == y.residual && x.restart < y.restart);
}

RangeSearchResult run_restart(const MatrixC& complement, const RangeSearchConfig& cfg, int index) {
  const VectorC f0 = restart_start(cfg.seed, index);
  auto r = alternating_minimization(complement, f0, cfg);
  r.restart = index;
  return r;
}

void check_search_input(const MatrixC& range, const RangeSearchConfig& cfg) {
  if (range.rows() != kDim || range.cols() != kDim)
    throw linalg::LinalgError("product_in_range_search: range projector must be 9x9");
  if (cfg.restarts < 1) throw std::invalid_argument("product_in_range_search: restarts must be >= 1");
}

}  // namespace

RangeSearchResult alternating_minimization(const MatrixC& complement, std::span<const Complex> f0,
                                           const RangeSearchConfig& cfg, std::vector<double>* history) {
  if (f0.size() != kLocalDim) throw std::invalid_argument("alternating_minimization: start vector must have 3 entries");
  Vec3 f{};
  const double fn = linalg::norm(f0);
  for (std::size_t i = 0; i < kLocalDim; ++i) f[i] = f0[i] / fn;
  Vec3 e{};

  double value = std::numeric_limits<double>::infinity();
  int it = 0;
  while (it < cfg.max_iters) {
    ++it;
    const auto pe = linalg::lowest_eigenpair3(reduce_over_second(complement, f));
    e = pe.vector;
    if (history) history->push_back(pe.value);
    const auto pf = linalg::lowest_eigenpair3(reduce_over_first(complement, e));
    f = pf.vector;
    if (history) history->push_back(pf.value);
    const double improvement = value - pf.value;
    value = pf.value;
    if (improvement < cfg.tol_converge) break;
  }

  RangeSearchResult out;
  out.residual = value;
  out.first.assign(e.begin(), e.end());
  out.second.assign(f.begin(), f.end());
  out.witness = chessboard::product_vector(out.first, out.second);
  out.iterations = it;
  return out;
}

VectorC restart_start(std::uint64_t seed, int index) {
  std::mt19937_64 rng(chessboard::item_seed(seed, static_cast<std::uint64_t>(index)));
  std::normal_distribution<double> gauss;
  VectorC f(kLocalDim);
  for (auto& z : f) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex{re, im};
  }
  const double n = linalg::norm(f);
  for (auto& z : f) z /= n;
  return f;
}

RangeSearchResult product_in_range_search_serial(const MatrixC& range, const RangeSearchConfig& cfg) {
  check_search_input(range, cfg);
  const MatrixC q = complement_of(range);
  RangeSearchResult best = run_restart(q, cfg, 0);
  for (int r = 1; r < cfg.restarts; ++r) {
    auto cand = run_restart(q, cfg, r);
    if (better(cand, best)) best = std::move(cand);
  }
  return best;
}

RangeSearchResult product_in_range_search(const MatrixC& range, const RangeSearchConfig& cfg) {
  check_search_input(range, cfg);
  const MatrixC q = complement_of(range);
  std::vector<RangeSearchResult> results(static_cast<std::size_t>(cfg.restarts));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) {
    try {
      results[static_cast<std::size_t>(r)] = run_restart(q, cfg, r);
    } catch (...) {
#pragma omp critical(boundent_search_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (better(results[r], results[best])) best = r;
  return std::move(results[best]);
}

RangeSearchResult product_in_range_search(const StateMatrix& state, const RangeSearchConfig& cfg) {
  const auto vs = chessboard::build_vectors(state.params);
  return product_in_range_search(linalg::projector_from_vectors(vs), cfg);
}

VectorC degenerate_witness(const CanonicalParams& p, const Tolerances& tol) {
  for (double x : {p.a, p.b, p.m, p.n})
    if (!(x > tol.generic)) throw chessboard::ParameterError("degenerate_witness: a, b, m, n must be positive");
  const Complex mc = p.m * p.c;
  const Complex bs = p.b * p.s;
  if (!nearly_equal(mc, bs, tol.degenerate_rel)) throw chessboard::ParameterError("degenerate_witness: mc != bs");

  const double k = std::sqrt(p.m * p.n / (p.a * p.b));
  const VectorC first{p.m, k * p.a, p.s};
  const VectorC second{1.0, k * p.b / p.m, 0.0};
  return chessboard::product_vector(first, second);
}

namespace {

CertificationReport certify_impl(const RawParams& p, const RangeSearchConfig& cfg, const Tolerances& tol,
                                 bool parallel_search) {
  const StateMatrix state = chessboard::build_rho(p);
  CertificationReport report;
  report.params = p;
  report.spectrum = linalg::hermitian_eigen(state.rho).eigenvalues;

  const MatrixC sigma = linalg::partial_transpose_first(state.rho, kLocalDim, kLocalDim);
  report.pt_min_eigenvalue = linalg::hermitian_eigen(sigma).eigenvalues.back();
  report.sigma_equals_rho = (sigma - state.rho).frobenius_norm() <= tol.sigma_equals_rho;
  report.analytic_range = range_analytic(p, tol);

  const MatrixC range = linalg::projector_from_vectors(chessboard::build_vectors(p));
  const auto search =
      parallel_search ? product_in_range_search(range, cfg) : product_in_range_search_serial(range, cfg);
  report.search_residual = search.residual;
  const bool product_found = search.residual < tol.search_residual;
  if (product_found) report.witness = search.witness;

  auto& v = report.verdict;
  if (report.pt_min_eigenvalue < -tol.ppt) {
    v = {VerdictKind::NptEntangled, "partial transpose has a negative eigenvalue"};
  } else if (report.analytic_range == RangeAnalytic::NoProductInRange && !product_found) {
    v = {VerdictKind::BoundEntangled, "PPT and range contains no product vector"};
  } else if (report.analytic_range == RangeAnalytic::DegenerateMcBs) {
    v = {VerdictKind::Inconclusive, "DegenerateMcBs: mc = bs admits a product vector in range"};
  } else if (report.analytic_range == RangeAnalytic::DegenerateBtNd) {
    v = {VerdictKind::Inconclusive, "DegenerateBtNd: conj(b)t = conj(n)d admits a product vector in range"};
  } else if (report.analytic_range == RangeAnalytic::NonGeneric) {
    v = {VerdictKind::Inconclusive, "NonGeneric: a parameter vanishes"};
  } else {
    v = {VerdictKind::Inconclusive, "numerical search found a near-product vector in range"};
  }
  return report;
}

}  // namespace

CertificationReport certify(const RawParams& p, const RangeSearchConfig& cfg, const Tolerances& tol) {
  return certify_impl(p, cfg, tol, true);
}

std::vector<CertificationReport> certify_batch(std::span<const RawParams> params, const RangeSearchConfig& cfg,
                                               const Tolerances& tol) {
  const auto count = static_cast<std::ptrdiff_t>(params.size());
  std::vector<CertificationReport> out(params.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      RangeSearchConfig item = cfg;
      item.seed = chessboard::item_seed(cfg.seed, static_cast<std::uint64_t>(k));
      out[static_cast<std::size_t>(k)] = certify_impl(params[static_cast<std::size_t>(k)], item, tol, false);
    } catch (...) {
#pragma omp critical(boundent_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<CertificationReport> certify_batch_serial(std::span<const RawParams> params,
                                                      const RangeSearchConfig& cfg, const Tolerances& tol) {
  std::vector<CertificationReport> out;
  out.reserve(params.size());
  for (std::size_t k = 0; k < params.size(); ++k) {
    RangeSearchConfig item = cfg;
    item.seed = chessboard::item_seed(cfg.seed, k);
    out.push_back(certify_impl(params[k], item, tol, false));
  }
  return out;
}

}  // namespace boundent::criteria
