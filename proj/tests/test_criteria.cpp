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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "boundent/sampling.hpp"

using namespace boundent::criteria;
using boundent::chessboard::build_rho;
using boundent::chessboard::build_vectors;
using boundent::chessboard::Family;
using boundent::chessboard::family_a;
using boundent::chessboard::family_b;
using boundent::chessboard::ParameterError;
using boundent::chessboard::product_vector;
using boundent::chessboard::sample_params;
using boundent::linalg::projector_from_vectors;

namespace {

const CanonicalParams kAllOnes = family_a(1, 1, 1, 1, 1, 1);
const CanonicalParams kReference = family_a(1, 2, 3, 1, 1, 1);

MatrixC range_of(const RawParams& p) { return projector_from_vectors(build_vectors(p)); }

RangeSearchConfig quick(int restarts = 20, std::uint64_t seed = 1) {
  RangeSearchConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(PptMinEigenvalue, FamilyAIsZero) {
  EXPECT_NEAR(ppt_min_eigenvalue(build_rho(kReference)), 0.0, 1e-12);
}

TEST(PptMinEigenvalue, DoubledModulusBreaksPositivity) {
  int negative = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto p = sample_params(Family::B, boundent::chessboard::item_seed(99, k));
    p.s *= 2.0;
    if (ppt_min_eigenvalue(build_rho(p)) < -1e-8) ++negative;
  }
  EXPECT_GT(negative, 0);
}

TEST(PptMinEigenvalue, FamilyBAtRealPhasesIsPpt) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = sample_params(Family::A, seed);
    p.s = -p.s;
    p.t = -p.t;
    EXPECT_GE(ppt_min_eigenvalue(build_rho(p)), -1e-10) << seed;
  }
}

TEST(RangeAnalytic, Examples) {
  EXPECT_EQ(range_analytic(kReference), RangeAnalytic::NoProductInRange);
  EXPECT_EQ(range_analytic(kAllOnes), RangeAnalytic::DegenerateMcBs);
  auto p = kReference;
  p.c = 0.0;
  EXPECT_EQ(range_analytic(p), RangeAnalytic::NonGeneric);
}

TEST(RangeAnalytic, BtNdBranch) {
  // b = 2, n = 1, d = 2 forces t = n d / b = 1; mc = 3 != bs = 2*s.
  CanonicalParams p{1, 2, 3, 2, 1, 1, {5, 0}, {1, 0}};
  EXPECT_EQ(range_analytic(p), RangeAnalytic::DegenerateBtNd);
  // r = 0 branch witness: (1, k b / n, 0) (x) (n, -k a, t), k = sqrt(mn/ab).
  const double k = std::sqrt(p.m * p.n / (p.a * p.b));
  const VectorC e{1.0, k * p.b / p.n, 0.0};
  const VectorC f{p.n, -k * p.a, p.t};
  EXPECT_LE(range_residual(range_of(p.to_raw()), product_vector(e, f)), 1e-12);
}

TEST(DegenerateWitness, AllOnes) {
  const auto w = degenerate_witness(kAllOnes);
  EXPECT_EQ(w, product_vector(VectorC{1, 1, 1}, VectorC{1, 1, 0}));
  EXPECT_LE(range_residual(range_of(kAllOnes.to_raw()), w), 1e-10);
}

TEST(DegenerateWitness, NonTrivialPoint) {
  // mc = 1*2 = bs = 1*2
  const CanonicalParams p{2, 1, 2, 1, 1, 2, {2, 0}, {1, 0}};
  ASSERT_EQ(range_analytic(p), RangeAnalytic::DegenerateMcBs);
  EXPECT_LE(range_residual(range_of(p.to_raw()), degenerate_witness(p)), 1e-10);
}

TEST(DegenerateWitness, ComplexS) {
  // s = mc/b with a complex c phase moved onto s keeps mc == bs.
  CanonicalParams p{0.7, 1.3, 2.0, 0.5, 0.9, 1.1, {}, {0.3, -0.4}};
  p.s = p.m * p.c / p.b;
  EXPECT_LE(range_residual(range_of(p.to_raw()), degenerate_witness(p)), 1e-10);
}

TEST(DegenerateWitness, RejectsGenericParams) { EXPECT_THROW(degenerate_witness(kReference), ParameterError); }

TEST(RangeResidual, ProductExpectationAgrees) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  const MatrixC range = range_of(kReference.to_raw());
  const MatrixC q = MatrixC::identity(9) - range;
  for (int trial = 0; trial < 20; ++trial) {
    VectorC e(3), f(3);
    for (auto& z : e) z = {g(rng), g(rng)};
    for (auto& z : f) z = {g(rng), g(rng)};
    const auto v = product_vector(e, f);
    const double nv = std::norm(boundent::linalg::norm(v));
    EXPECT_NEAR(product_expectation(q, e, f) / nv, range_residual(range, v), 1e-12);
  }
}

TEST(AlternatingMinimization, ResidualMatchesDirectEvaluationAndIsMonotone) {
  const MatrixC q = MatrixC::identity(9) - range_of(kReference.to_raw());
  RangeSearchConfig cfg;
  for (int r = 0; r < 30; ++r) {
    std::vector<double> history;
    const auto res = alternating_minimization(q, restart_start(17, r), cfg, &history);
    EXPECT_NEAR(res.residual, product_expectation(q, res.first, res.second), 1e-12);
    EXPECT_NEAR(boundent::linalg::norm(res.witness), 1.0, 1e-12);
    for (std::size_t k = 1; k < history.size(); ++k) EXPECT_LE(history[k], history[k - 1] + 1e-14);
  }
}

TEST(ProductSearch, AllOnesFindsProductVector) {
  const auto res = product_in_range_search(build_rho(kAllOnes), quick(20));
  EXPECT_LE(res.residual, 1e-8);
  EXPECT_LE(range_residual(range_of(kAllOnes.to_raw()), res.witness), 1e-8);
}

TEST(ProductSearch, ReferenceHasNoProductVector) {
  RangeSearchConfig cfg;
  cfg.seed = 3;
  const auto res = product_in_range_search(build_rho(kReference), cfg);
  EXPECT_GE(res.residual, 1e-6);
}

TEST(ProductSearch, FullRangeIsZero) {
  const MatrixC rho = MatrixC::identity(9) * Complex{1.0 / 9.0};
  const auto res = product_in_range_search(range_projector(rho), quick(5));
  EXPECT_LE(std::abs(res.residual), 1e-12);
}

TEST(ProductSearch, ParallelMatchesSerialReference) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = sample_params(Family::A, seed);
    const auto range = range_of(p);
    const auto cfg = quick(40, seed);
    const auto par = product_in_range_search(range, cfg);
    const auto ser = product_in_range_search_serial(range, cfg);
    EXPECT_EQ(par.residual, ser.residual);
    EXPECT_EQ(par.restart, ser.restart);
    EXPECT_EQ(par.witness, ser.witness);
  }
}

TEST(ProductSearch, McBsImpliesSmallResidual) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> mag(0.3, 3.0), ph(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    CanonicalParams p{mag(rng), mag(rng), mag(rng), mag(rng), mag(rng), mag(rng), {}, std::polar(mag(rng), ph(rng))};
    p.s = p.m * p.c / p.b;
    ASSERT_EQ(range_analytic(p), RangeAnalytic::DegenerateMcBs);
    EXPECT_LE(product_in_range_search(build_rho(p), quick(50, trial)).residual, 1e-8) << trial;
  }
}

TEST(Certify, ReferenceIsBoundEntangled) {
  RangeSearchConfig cfg;
  const auto r = certify(kReference, cfg);
  EXPECT_EQ(r.verdict.kind, VerdictKind::BoundEntangled);
  EXPECT_TRUE(r.sigma_equals_rho);
  EXPECT_EQ(r.analytic_range, RangeAnalytic::NoProductInRange);
  EXPECT_FALSE(r.witness.has_value());
  ASSERT_EQ(r.spectrum.size(), 9u);
  EXPECT_NEAR(r.spectrum[0], 14.0 / 34, 1e-12);
}

TEST(Certify, AllOnesIsInconclusive) {
  const auto r = certify(kAllOnes, quick(50));
  EXPECT_EQ(r.verdict.kind, VerdictKind::Inconclusive);
  EXPECT_NE(r.verdict.reason.find("DegenerateMcBs"), std::string::npos);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Certify, DoubledModulusIsNpt) {
  int npt = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    auto p = sample_params(Family::B, k);
    p.s *= 2.0;
    const auto r = certify(p, quick(5));
    EXPECT_EQ(r.verdict.kind == VerdictKind::NptEntangled, r.pt_min_eigenvalue < -1e-10);
    npt += r.verdict.kind == VerdictKind::NptEntangled;
  }
  EXPECT_GT(npt, 0);
}

TEST(Certify, VerdictRulesAreConsistent) {
  for (auto family : {Family::A, Family::B, Family::Raw})
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto r = certify(sample_params(family, seed), quick(10, seed));
      switch (r.verdict.kind) {
        case VerdictKind::NptEntangled: EXPECT_LT(r.pt_min_eigenvalue, -1e-10); break;
        case VerdictKind::BoundEntangled:
          EXPECT_GE(r.pt_min_eigenvalue, -1e-10);
          EXPECT_EQ(r.analytic_range, RangeAnalytic::NoProductInRange);
          EXPECT_GE(r.search_residual, 1e-8);
          break;
        case VerdictKind::Inconclusive: EXPECT_GE(r.pt_min_eigenvalue, -1e-10); break;
      }
      if (family == Family::A) {
        EXPECT_TRUE(r.sigma_equals_rho);
        EXPECT_NE(r.verdict.kind, VerdictKind::NptEntangled);
      }
    }
}

TEST(Certify, InvariantUnderCanonicalizeAndScaling) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto raw = sample_params(Family::Raw, seed);
    const auto canon = boundent::chessboard::canonicalize(raw).params;
    RawParams scaled = raw;
    for (Complex* z : {&scaled.a, &scaled.b, &scaled.c, &scaled.d, &scaled.m, &scaled.n, &scaled.s, &scaled.t})
      *z *= 3.5;
    const auto r0 = certify(raw, quick(5));
    const auto r1 = certify(canon, quick(5));
    const auto r2 = certify(scaled, quick(5));
    EXPECT_EQ(r0.verdict.kind, r1.verdict.kind);
    EXPECT_EQ(r0.verdict.kind, r2.verdict.kind);
    EXPECT_NEAR(r0.pt_min_eigenvalue, r1.pt_min_eigenvalue, 1e-10);
    for (int k = 0; k < 9; ++k) EXPECT_NEAR(r0.spectrum[k], r1.spectrum[k], 1e-10);
  }
}

TEST(CertifyBatch, ParallelMatchesSerialReference) {
  std::vector<RawParams> params;
  for (std::uint64_t seed = 0; seed < 12; ++seed) params.push_back(sample_params(Family::A, seed));
  const auto cfg = quick(8, 21);
  const auto par = certify_batch(params, cfg);
  const auto ser = certify_batch_serial(params, cfg);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    EXPECT_EQ(par[k].params, params[k]);
    EXPECT_EQ(par[k].search_residual, ser[k].search_residual);
    EXPECT_EQ(par[k].pt_min_eigenvalue, ser[k].pt_min_eigenvalue);
    EXPECT_EQ(par[k].verdict.kind, ser[k].verdict.kind);
  }
}

TEST(Names, RoundTrip) {
  for (auto v : {VerdictKind::BoundEntangled, VerdictKind::NptEntangled, VerdictKind::Inconclusive})
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  for (auto r : {RangeAnalytic::NoProductInRange, RangeAnalytic::DegenerateMcBs, RangeAnalytic::DegenerateBtNd,
                 RangeAnalytic::NonGeneric})
    EXPECT_EQ(parse_range_analytic(to_string(r)), r);
  EXPECT_FALSE(parse_verdict("Separable").has_value());
}
