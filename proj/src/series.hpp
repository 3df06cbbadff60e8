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

// Binary splitting over series of the form
//   sum_{k=0}^{K-1} prod_{i=0}^{k} p_i / q_i  =  T(0,K) / Q(0,K)
// with per-term integer factors p_i, q_i.  Merge rule:
//   T(a,b) = T(a,m) Q(m,b) + P(a,m) T(m,b),  P and Q multiplicative.
//
// Internal header; included by the constants implementation and by its
// tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>

namespace digitbf::constants::series {

using TermFn = std::function<void(std::uint64_t k, mpz_class& p, mpz_class& q)>;

struct PQT {
    mpz_class p, q, t;
};

inline mpz_class pow10(std::uint64_t exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    return p;
}

inline mpz_class floor_div(const mpz_class& num, const mpz_class& den) {
    mpz_class out;
    mpz_tdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline void binsplit(std::uint64_t a, std::uint64_t b, const TermFn& term, PQT& out) {
    if (b - a <= 8) {
        term(a, out.p, out.q);
        out.t = out.p;
        mpz_class p, q;
        for (std::uint64_t k = a + 1; k < b; ++k) {
            term(k, p, q);
            out.t = out.t * q + out.p * p;
            out.p *= p;
            out.q *= q;
        }
        return;
    }
    const std::uint64_t m = a + (b - a) / 2;
    PQT left, right;
    binsplit(a, m, term, left);
    binsplit(m, b, term, right);
    out.t = left.t * right.q + left.p * right.t;
    out.p = left.p * right.p;
    out.q = left.q * right.q;
}

// floor(sum * 10^prec), truncated toward zero.  Very long series are folded
// in segments: a running scaled prefix product replaces the one huge
// top-level merge, capping peak operand size at roughly 1/segments of the
// full denominator.  Each segment contributes at most a few units of error
// at the last guard digit.  segments == 0 picks automatically.
inline mpz_class scaled_series(std::uint64_t terms, const TermFn& term, std::uint64_t prec,
                               std::uint64_t segments = 0) {
    if (segments == 0)
        segments = std::min<std::uint64_t>(32, std::max<std::uint64_t>(1, terms >> 24));

    const mpz_class scale = pow10(prec);
    if (segments <= 1 || terms < 2 * segments) {
        PQT top;
        binsplit(0, terms, term, top);
        return floor_div(top.t * scale, top.q);
    }

    mpz_class total = 0;
    mpz_class prefix = scale;  // 10^prec * prod_{i<a} p_i/q_i, truncated
    std::uint64_t a = 0;
    const std::uint64_t step = terms / segments;
    for (std::uint64_t segment = 0; segment < segments; ++segment) {
        const std::uint64_t b = (segment + 1 == segments) ? terms : a + step;
        PQT part;
        binsplit(a, b, term, part);
        total += floor_div(prefix * part.t, part.q);
        if (segment + 1 < segments) prefix = floor_div(prefix * part.p, part.q);
        a = b;
    }
    return total;
}

}  // namespace digitbf::constants::series
