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

#if defined(DIGITBF_TALLY_HAVE_AVX2)

#include <immintrin.h>

namespace digitbf::tally {

// Compare-and-count histogram over the ten digit values.  Per 32-byte block,
// one cmpeq per digit adds 1 (as -(-1)) into a per-digit byte accumulator;
// accumulators are flushed through psadbw before they can saturate (a byte
// lane grows by at most 1 per block, so 255 blocks is the hard limit).
void tally_avx2(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]) {
    constexpr std::size_t kBlock = 32;
    constexpr std::size_t kFlushEvery = 240;

    __m256i needles[10];
    for (int d = 0; d < 10; ++d) needles[d] = _mm256_set1_epi8(static_cast<char>(d));

    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    while (i + kBlock <= n) {
        __m256i acc[10];
        for (int d = 0; d < 10; ++d) acc[d] = zero;

        std::size_t blocks = (n - i) / kBlock;
        if (blocks > kFlushEvery) blocks = kFlushEvery;
        for (std::size_t b = 0; b < blocks; ++b, i += kBlock) {
            const __m256i bytes =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
            for (int d = 0; d < 10; ++d)
                acc[d] = _mm256_sub_epi8(acc[d], _mm256_cmpeq_epi8(bytes, needles[d]));
        }
        for (int d = 0; d < 10; ++d) {
            const __m256i sums = _mm256_sad_epu8(acc[d], zero);
            counts[d] += static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 0)) +
                         static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 1)) +
                         static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 2)) +
                         static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 3));
        }
    }
    tally_scalar(data + i, n - i, counts);
}

}  // namespace digitbf::tally

#endif  // DIGITBF_TALLY_HAVE_AVX2
