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
#include <string>
#include <vector>

namespace boundent::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
///
///   construct --family a|b|raw --params ... [--phi-s X --phi-t Y]
///   certify   (--input state.json | --family ... --params ...)
///   sample    --family a|b|raw --count N --seed S
///   sweep     --var NAME --range lo,hi,steps --base a,b,c,d,m,n
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boundent::cli
