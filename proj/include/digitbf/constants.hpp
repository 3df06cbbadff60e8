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
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "digitbf/stream.hpp"

// Digit acquisition: exact self-generated decimal expansions of pi, e,
// sqrt(2) and ln(2), ingestion of externally supplied digit files, and
// seeded biased digit sampling for simulation studies.
//
// Digit convention: streams carry the digits of the decimal expansion AFTER
// the decimal point, excluding the integer part (pi -> 1415926535...,
// e -> 7182818284..., sqrt2 -> 4142135623..., ln2 -> 6931471805...).

namespace digitbf::constants {

enum class Constant { pi, e, sqrt2, ln2 };

const char* name_of(Constant c);
std::optional<Constant> constant_from_name(const std::string& name);

// Default cap on self-generation, guarding runtime; longer analyses should
// ingest a downloaded digit file instead.
inline constexpr std::uint64_t kDefaultGenerationCeiling = 10'000'000;

// First `length` fractional digits as ASCII characters, computed with
// fixed-point big-integer arithmetic carrying 10 guard digits beyond the
// requested window.  Series evaluation uses binary splitting:
//   e      = sum 1/k!
//   pi     = 16 atan(1/5) - 4 atan(1/239)
//   sqrt2  = isqrt(2 * 10^(2 (length+10)))
//   ln2    = sum 1/(k 2^k)
// Throws generation_limit_error when length > ceiling.
std::string generate_digit_string(Constant c, std::uint64_t length,
                                  std::uint64_t ceiling = kDefaultGenerationCeiling);

// generate_digit_string wrapped as a stream of digit values.
std::unique_ptr<DigitStream> generate_digits(Constant c, std::uint64_t length,
                                             std::uint64_t ceiling = kDefaultGenerationCeiling);

// Streams digits from an ASCII file in constant memory.  Whitespace is
// skipped; at most one leading "<integer-part>." prefix is dropped.  Any
// other character raises parse_error with its byte offset, as does a file
// containing no digits.
std::unique_ptr<DigitStream> ingest_digit_file(const std::filesystem::path& path);

// Reproducible pseudo-random digits from the given occurrence probabilities
// (must sum to 1 within 1e-12).  Identical seeds produce identical streams.
std::unique_ptr<DigitStream> sample_biased_digits(const std::array<double, 10>& probabilities,
                                                  std::uint64_t length, std::uint64_t seed);

// Cache-file writer: pure digit characters, newline every 100 digits.
void write_digit_file(const std::filesystem::path& path, const std::string& digits);

}  // namespace digitbf::constants
