// Copyright 2026 The digitbf Authors
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
#include <string>
#include <vector>

#include "digitbf/runner.hpp"

namespace digitbf::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // argument errors
inline constexpr int kExitParse = 3;       // digit-file parse errors
inline constexpr int kExitGeneration = 4;  // generation-ceiling refusals

// Prior specification grammar, comma-separated:
//   a<value>                symmetric Dirichlet, e.g. a1, a50, a0.5
//   mix:<a1>:<a2>:<w>       two-component symmetric Dirichlet mixture
// Throws std::invalid_argument on malformed specs.
std::vector<runner::ConfiguredPrior> parse_priors(const std::string& spec);

// Bias specification: comma-separated digit:probability pairs, e.g.
// "0:0.11"; the remaining probability mass is spread evenly over the
// unmentioned digits.  Throws std::invalid_argument on malformed input.
std::array<double, 10> parse_bias(const std::string& spec);

// Entry point used by the digitbf binary; argv[0] is the program name.
int run(int argc, const char* const* argv);

}  // namespace digitbf::cli
