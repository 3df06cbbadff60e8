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

namespace digitbf::tally {

void tally_scalar(const std::uint8_t* data, std::size_t n, std::uint64_t counts[10]) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t v = data[i];
        if (v <= 9) ++counts[v];
    }
}

namespace {

Kernel detect() {
#if defined(DIGITBF_TALLY_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return tally_avx2;
#endif
#if defined(DIGITBF_TALLY_HAVE_NEON)
    return tally_neon;
#endif
    return tally_scalar;
}

}  // namespace

Kernel active_kernel() {
    static const Kernel kernel = detect();
    return kernel;
}

const char* active_kernel_name() {
    const Kernel k = active_kernel();
#if defined(DIGITBF_TALLY_HAVE_AVX2)
    if (k == tally_avx2) return "avx2";
#endif
#if defined(DIGITBF_TALLY_HAVE_NEON)
    if (k == tally_neon) return "neon";
#endif
    return "scalar";
}

void accumulate(std::span<const std::uint8_t> digits, DigitCounts& counts) {
    active_kernel()(digits.data(), digits.size(), counts.counts.data());
    counts.total += digits.size();
}

}  // namespace digitbf::tally
