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

#include "digitbf/tally.hpp"

#if defined(DIGITBF_TALLY_HAVE_NEON)

#include <arm_neon.h>

namespace digitbf::tally {

// NEON mirror of the AVX2 kernel: vceqq yields all-ones lanes, subtracted
// into byte accumulators and flushed via widening pairwise adds before
// saturation (at most 1 per lane per 16-byte block).
void tally_neon(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]) {
    constexpr std::size_t kBlock = 16;
    constexpr std::size_t kFlushEvery = 240;

    uint8x16_t needles[10];
    for (int d = 0; d < 10; ++d) needles[d] = vdupq_n_u8(static_cast<std::uint8_t>(d));

    std::size_t i = 0;
    while (i + kBlock <= n) {
        uint8x16_t acc[10];
        for (int d = 0; d < 10; ++d) acc[d] = vdupq_n_u8(0);

        std::size_t blocks = (n - i) / kBlock;
        if (blocks > kFlushEvery) blocks = kFlushEvery;
        for (std::size_t b = 0; b < blocks; ++b, i += kBlock) {
            const uint8x16_t bytes = vld1q_u8(data + i);
            for (int d = 0; d < 10; ++d)
                acc[d] = vsubq_u8(acc[d], vceqq_u8(bytes, needles[d]));
        }
        for (int d = 0; d < 10; ++d) counts[d] += vaddlvq_u8(acc[d]);
    }
    tally_scalar(data + i, n - i, counts);
}

}  // namespace digitbf::tally

#endif  // DIGITBF_TALLY_HAVE_NEON
