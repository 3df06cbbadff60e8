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

#include <cstddef>
#include <cstdint>
#include <span>

#include "digitbf/types.hpp"

// Digit tallying: the one data-parallel inner loop of the engine.  Input
// buffers hold digit values 0..9 (not ASCII).  A scalar reference kernel is
// always available; AVX2 and NEON variants are selected at runtime and must
// produce bit-identical tallies (equivalence-tested).  Bytes outside 0..9
// are ignored by every kernel.

namespace digitbf::tally {

using Kernel = void (*)(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]);

void tally_scalar(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]);

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define DIGITBF_TALLY_HAVE_AVX2 1
void tally_avx2(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]);
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define DIGITBF_TALLY_HAVE_NEON 1
void tally_neon(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]);
#endif

// Best kernel the running CPU supports; resolved once.
Kernel active_kernel();
const char* active_kernel_name();  // "avx2", "neon", or "scalar"

// Adds the block's tallies into `counts` and advances the total by the block
// length.  Precondition: every byte is a valid digit value 0..9.
void accumulate(std::span<const std::uint8_t> digits, DigitCounts& counts);

}  // namespace digitbf::tally
