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
#include <string_view>

#include "boundent/chessboard.hpp"

namespace boundent::chessboard {

enum class Family { A, B, Raw };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Seed for item `index` of a batch drawn from `master_seed`. Independent of
/// how the batch is split across workers.
std::uint64_t item_seed(std::uint64_t master_seed, std::uint64_t index);

/// One parameter draw. Magnitudes are log-uniform on [0.1, 10] and phases
/// uniform on (-pi, pi].
///   A   : family_a of six magnitudes
///   B   : family_b of six magnitudes and two phases
///   Raw : eight complex values with independent magnitudes and phases
RawParams sample_params(Family family, std::uint64_t seed);

}  // namespace boundent::chessboard
