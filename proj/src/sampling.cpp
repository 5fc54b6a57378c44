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

#include "boundent/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace boundent::chessboard {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::Raw: return "raw";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "a" || name == "A") return Family::A;
  if (name == "b" || name == "B") return Family::B;
  if (name == "raw") return Family::Raw;
  return std::nullopt;
}

std::uint64_t item_seed(std::uint64_t master_seed, std::uint64_t index) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = master_seed * 0x9E3779B97F4A7C15ULL + index + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  double magnitude() {
    std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
    return std::exp(u(rng_));
  }

  double phase() {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return std::numbers::pi - u(rng_);
  }

  Complex complex_value() {
    const double r = magnitude();
    return std::polar(r, phase());
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

RawParams sample_params(Family family, std::uint64_t seed) {
  ParamSampler draw(seed);
  switch (family) {
    case Family::A: {
      std::array<double, 6> x{};
      for (auto& v : x) v = draw.magnitude();
      return family_a(x[0], x[1], x[2], x[3], x[4], x[5]).to_raw();
    }
    case Family::B: {
      std::array<double, 6> x{};
      for (auto& v : x) v = draw.magnitude();
      const double phi_s = draw.phase();
      const double phi_t = draw.phase();
      return family_b(x[0], x[1], x[2], x[3], x[4], x[5], phi_s, phi_t).to_raw();
    }
    case Family::Raw: {
      RawParams p;
      for (Complex* z : {&p.a, &p.b, &p.c, &p.d, &p.m, &p.n, &p.s, &p.t}) *z = draw.complex_value();
      return p;
    }
  }
  return {};
}

}  // namespace boundent::chessboard
