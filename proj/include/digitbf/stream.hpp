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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace digitbf {

// A sequential source of decimal digits, delivered as values 0..9.  A stream
// is consumed by exactly one reader; distinct streams are independent.
class DigitStream {
public:
    virtual ~DigitStream() = default;

    // Fills `out` from the front, returning the number of digits written.
    // Returns 0 exactly once, at end of stream.  May throw parse_error for
    // file-backed sources.
    virtual std::size_t read(std::span<std::uint8_t> out) = 0;
};

// Malformed digit file; `byte_offset` is the 0-based position of the
// offending byte (or the file size for truncation-style errors).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::uint64_t byte_offset)
        : std::runtime_error(message + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::uint64_t byte_offset() const { return byte_offset_; }

private:
    std::uint64_t byte_offset_;
};

// Request above the configured generation ceiling.
class generation_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace digitbf
