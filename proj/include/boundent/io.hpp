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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "boundent/chessboard.hpp"
#include "boundent/criteria.hpp"

namespace boundent::io {

inline constexpr const char* kIndexConvention = "i = m + 3*mu";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"a": [re, im], ..., "t": [re, im]}
nlohmann::json params_to_json(const chessboard::RawParams& p);
chessboard::RawParams params_from_json(const nlohmann::json& j);

/// {"params", "norm_constant", "matrix" (9x9 of [re, im]), "index_convention"}
nlohmann::json state_to_json(const chessboard::StateMatrix& state);

/// Parses a state document and rebuilds it from its params. Throws
/// FormatError if the document is malformed or its matrix disagrees with the
/// params by more than `tol` (max entry deviation).
chessboard::StateMatrix state_from_json(const nlohmann::json& j, double tol = 1e-12);

nlohmann::json report_to_json(const criteria::CertificationReport& r);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

}  // namespace boundent::io
