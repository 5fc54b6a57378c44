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

#include "boundent/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <utility>

namespace boundent::io {

using chessboard::RawParams;
using linalg::Complex;
using nlohmann::json;

namespace {

constexpr std::array<std::pair<const char*, Complex RawParams::*>, 8> kFields{{
    {"a", &RawParams::a},
    {"b", &RawParams::b},
    {"c", &RawParams::c},
    {"d", &RawParams::d},
    {"m", &RawParams::m},
    {"n", &RawParams::n},
    {"s", &RawParams::s},
    {"t", &RawParams::t},
}};

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("expected a [re, im] pair");
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw FormatError("non-finite complex value");
  return z;
}

json vector_to_json(const linalg::VectorC& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

}  // namespace

json params_to_json(const RawParams& p) {
  json out = json::object();
  for (const auto& [name, field] : kFields) out[name] = complex_to_json(p.*field);
  return out;
}

RawParams params_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("params must be an object");
  RawParams p;
  for (const auto& [name, field] : kFields) {
    if (!j.contains(name)) throw FormatError(std::string("params missing field '") + name + "'");
    p.*field = complex_from_json(j.at(name));
  }
  return p;
}

json state_to_json(const chessboard::StateMatrix& state) {
  json matrix = json::array();
  for (std::size_t i = 0; i < state.rho.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < state.rho.cols(); ++j) row.push_back(complex_to_json(state.rho(i, j)));
    matrix.push_back(std::move(row));
  }
  return json{{"params", params_to_json(state.params)},
              {"norm_constant", state.norm_constant},
              {"matrix", std::move(matrix)},
              {"index_convention", kIndexConvention}};
}

chessboard::StateMatrix state_from_json(const json& j, double tol) {
  if (!j.is_object()) throw FormatError("state document must be an object");
  for (const char* key : {"params", "norm_constant", "matrix", "index_convention"})
    if (!j.contains(key)) throw FormatError(std::string("state document missing '") + key + "'");
  if (!j.at("index_convention").is_string() || j.at("index_convention").get<std::string>() != kIndexConvention)
    throw FormatError("unsupported index convention");

  chessboard::StateMatrix state;
  try {
    state = chessboard::build_rho(params_from_json(j.at("params")));
  } catch (const chessboard::ParameterError& e) {
    throw FormatError(e.what());
  }

  const json& m = j.at("matrix");
  if (!m.is_array() || m.size() != chessboard::kDim) throw FormatError("matrix must have 9 rows");
  for (std::size_t r = 0; r < chessboard::kDim; ++r) {
    if (!m[r].is_array() || m[r].size() != chessboard::kDim) throw FormatError("matrix rows must have 9 entries");
    for (std::size_t c = 0; c < chessboard::kDim; ++c)
      if (std::abs(complex_from_json(m[r][c]) - state.rho(r, c)) > tol)
        throw FormatError("matrix does not match params");
  }
  return state;
}

json report_to_json(const criteria::CertificationReport& r) {
  return json{{"params", params_to_json(r.params)},
              {"spectrum", r.spectrum},
              {"pt_min_eigenvalue", r.pt_min_eigenvalue},
              {"sigma_equals_rho", r.sigma_equals_rho},
              {"analytic_range", std::string(criteria::to_string(r.analytic_range))},
              {"search_residual", r.search_residual},
              {"witness", r.witness ? vector_to_json(*r.witness) : json(nullptr)},
              {"verdict", std::string(criteria::to_string(r.verdict.kind))},
              {"reason", r.verdict.reason}};
}

std::string format_double(double x) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

}  // namespace boundent::io
