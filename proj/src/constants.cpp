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

#include "digitbf/constants.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <vector>

#include "digitbf/rng.hpp"
#include "series.hpp"

namespace digitbf::constants {

const char* name_of(Constant c) {
    switch (c) {
        case Constant::pi: return "pi";
        case Constant::e: return "e";
        case Constant::sqrt2: return "sqrt2";
        case Constant::ln2: return "ln2";
    }
    return "?";
}

std::optional<Constant> constant_from_name(const std::string& name) {
    if (name == "pi") return Constant::pi;
    if (name == "e") return Constant::e;
    if (name == "sqrt2") return Constant::sqrt2;
    if (name == "ln2") return Constant::ln2;
    return std::nullopt;
}

namespace {

constexpr std::uint64_t kGuardDigits = 10;

using series::TermFn;
using series::pow10;
using series::scaled_series;

// e = sum_{k>=0} 1/k!
mpz_class scaled_e(std::uint64_t prec) {
    std::uint64_t terms = 2;
    {
        double log_factorial = 0.0;
        const double target = static_cast<double>(prec + 2) * std::log(10.0);
        std::uint64_t k = 1;
        while (log_factorial < target) {
            ++k;
            log_factorial += std::log(static_cast<double>(k));
        }
        terms = k + 1;
    }
    return scaled_series(
        terms,
        [](std::uint64_t k, mpz_class& p, mpz_class& q) {
            p = 1;
            q = (k == 0) ? 1 : static_cast<unsigned long>(k);
        },
        prec);
}

// atan(1/base) = sum_{k>=0} (-1)^k / ((2k+1) base^(2k+1))
mpz_class scaled_atan_inv(unsigned long base, std::uint64_t prec) {
    const double ln10 = std::log(10.0);
    const auto terms = static_cast<std::uint64_t>(
                           static_cast<double>(prec + 4) * ln10 /
                           (2.0 * std::log(static_cast<double>(base)))) +
                       2;
    const unsigned long base_sq = base * base;
    return scaled_series(
        terms,
        [base, base_sq](std::uint64_t k, mpz_class& p, mpz_class& q) {
            if (k == 0) {
                p = 1;
                q = base;
            } else {
                p = -static_cast<long>(2 * k - 1);
                q = static_cast<unsigned long>(2 * k + 1);
                q *= base_sq;
            }
        },
        prec);
}

// pi via the arctangent identity pi = 16 atan(1/5) - 4 atan(1/239).
mpz_class scaled_pi(std::uint64_t prec) {
    return 16 * scaled_atan_inv(5, prec) - 4 * scaled_atan_inv(239, prec);
}

mpz_class scaled_sqrt2(std::uint64_t prec) {
    mpz_class x = 2 * pow10(2 * prec);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
    return root;
}

// ln 2 = sum_{k>=1} 1/(k 2^k); consecutive-term ratio k/(2(k+1)).
mpz_class scaled_ln2(std::uint64_t prec) {
    const auto terms = static_cast<std::uint64_t>(static_cast<double>(prec + 4) *
                                                  std::log(10.0) / std::log(2.0)) +
                       2;
    return scaled_series(
        terms,
        [](std::uint64_t k, mpz_class& p, mpz_class& q) {
            if (k == 0) {
                p = 1;
                q = 2;
            } else {
                p = static_cast<unsigned long>(k);
                q = static_cast<unsigned long>(2 * (k + 1));
            }
        },
        prec);
}

std::string fraction_digits(const mpz_class& scaled, std::uint64_t prec) {
    mpz_class frac;
    const mpz_class p10 = pow10(prec);
    mpz_tdiv_r(frac.get_mpz_t(), scaled.get_mpz_t(), p10.get_mpz_t());
    std::string digits = frac.get_str();
    if (digits.size() < prec) digits.insert(0, static_cast<std::size_t>(prec) - digits.size(), '0');
    return digits;
}

// ---------------------------------------------------------------------------
// Streams
// ---------------------------------------------------------------------------

class MemoryDigitStream final : public DigitStream {
public:
    explicit MemoryDigitStream(std::string ascii_digits) : digits_(std::move(ascii_digits)) {}

    std::size_t read(std::span<std::uint8_t> out) override {
        const std::size_t n = std::min(out.size(), digits_.size() - position_);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = static_cast<std::uint8_t>(digits_[position_ + i] - '0');
        position_ += n;
        return n;
    }

private:
    std::string digits_;
    std::size_t position_ = 0;
};

class FileDigitStream final : public DigitStream {
public:
    explicit FileDigitStream(const std::filesystem::path& path)
        : file_(std::fopen(path.string().c_str(), "rb")) {
        if (file_ == nullptr)
            throw parse_error("cannot open digit file '" + path.string() + "'", 0);
    }

    ~FileDigitStream() override {
        if (file_ != nullptr) std::fclose(file_);
    }

    FileDigitStream(const FileDigitStream&) = delete;
    FileDigitStream& operator=(const FileDigitStream&) = delete;

    std::size_t read(std::span<std::uint8_t> out) override {
        std::size_t filled = 0;
        while (filled < out.size()) {
            if (pending_pos_ < pending_.size()) {
                out[filled++] = pending_[pending_pos_++];
                continue;
            }
            if (buf_pos_ == buf_len_ && !refill()) break;
            while (buf_pos_ < buf_len_ && filled < out.size()) {
                const unsigned char c = buffer_[buf_pos_++];
                ++offset_;
                if (c >= '0' && c <= '9') {
                    const auto digit = static_cast<std::uint8_t>(c - '0');
                    ++digits_seen_;
                    if (header_decided_) {
                        out[filled++] = digit;
                    } else {
                        hold_.push_back(digit);
                        if (hold_.size() > kMaxIntegerPartDigits) commit_no_header();
                        if (header_decided_) break;  // drain pending_ first
                    }
                } else if (c == '.') {
                    if (header_decided_ || dot_seen_)
                        throw parse_error("unexpected '.' in digit file", offset_ - 1);
                    // Everything held so far was the integer part; drop it.
                    dot_seen_ = true;
                    header_decided_ = true;
                    hold_.clear();
                } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
                           c == '\v') {
                    continue;
                } else {
                    throw parse_error(std::string("invalid character '") +
                                          static_cast<char>(c) + "' in digit file",
                                      offset_ - 1);
                }
            }
        }
        if (filled == 0 && !eof_reported_) {
            // End of file: flush an undecided hold (the file had no header).
            if (!header_decided_ && !hold_.empty()) {
                commit_no_header();
                return read(out);
            }
            eof_reported_ = true;
            if (digits_seen_ == 0) throw parse_error("digit file contains no digits", offset_);
        }
        return filled;
    }

private:
    // An integer part longer than this means the file has no header.
    static constexpr std::size_t kMaxIntegerPartDigits = 64;

    void commit_no_header() {
        header_decided_ = true;
        pending_ = std::move(hold_);
        hold_.clear();
        pending_pos_ = 0;
    }

    bool refill() {
        buf_len_ = std::fread(buffer_, 1, sizeof(buffer_), file_);
        buf_pos_ = 0;
        return buf_len_ > 0;
    }

    std::FILE* file_ = nullptr;
    unsigned char buffer_[1 << 16];
    std::size_t buf_pos_ = 0;
    std::size_t buf_len_ = 0;
    std::uint64_t offset_ = 0;
    std::uint64_t digits_seen_ = 0;
    bool dot_seen_ = false;
    bool header_decided_ = false;
    bool eof_reported_ = false;
    std::vector<std::uint8_t> hold_;     // digits in limbo before the header decision
    std::vector<std::uint8_t> pending_;  // decided digits awaiting delivery
    std::size_t pending_pos_ = 0;
};

class BiasedDigitStream final : public DigitStream {
public:
    BiasedDigitStream(const std::array<double, 10>& probabilities, std::uint64_t length,
                      std::uint64_t seed)
        : remaining_(length), rng_(seed) {
        double sum = 0.0;
        for (double p : probabilities) {
            if (!(p >= 0.0)) throw std::domain_error("sample_biased_digits: negative probability");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-12)
            throw std::domain_error("sample_biased_digits: probabilities must sum to 1");
        double acc = 0.0;
        for (int j = 0; j < 10; ++j) {
            acc += probabilities[j];
            cumulative_[j] = acc;
        }
        cumulative_[9] = 1.0;
    }

    std::size_t read(std::span<std::uint8_t> out) override {
        const std::size_t n =
            static_cast<std::size_t>(std::min<std::uint64_t>(out.size(), remaining_));
        for (std::size_t i = 0; i < n; ++i) {
            const double u = rng_.next_double();
            std::uint8_t d = 0;
            while (d < 9 && u >= cumulative_[d]) ++d;
            out[i] = d;
        }
        remaining_ -= n;
        return n;
    }

private:
    std::array<double, 10> cumulative_{};
    std::uint64_t remaining_;
    rng::Xoshiro256 rng_;
};

}  // namespace

std::string generate_digit_string(Constant c, std::uint64_t length, std::uint64_t ceiling) {
    if (length < 1) throw std::domain_error("generate_digit_string: length must be >= 1");
    if (length > ceiling)
        throw generation_limit_error(
            "generation request of " + std::to_string(length) + " digits exceeds the ceiling of " +
            std::to_string(ceiling) + "; supply a digit file instead");

    const std::uint64_t prec = length + kGuardDigits;
    mpz_class scaled;
    switch (c) {
        case Constant::pi: scaled = scaled_pi(prec); break;
        case Constant::e: scaled = scaled_e(prec); break;
        case Constant::sqrt2: scaled = scaled_sqrt2(prec); break;
        case Constant::ln2: scaled = scaled_ln2(prec); break;
    }
    std::string digits = fraction_digits(scaled, prec);
    digits.resize(static_cast<std::size_t>(length));
    return digits;
}

std::unique_ptr<DigitStream> generate_digits(Constant c, std::uint64_t length,
                                             std::uint64_t ceiling) {
    return std::make_unique<MemoryDigitStream>(generate_digit_string(c, length, ceiling));
}

std::unique_ptr<DigitStream> ingest_digit_file(const std::filesystem::path& path) {
    return std::make_unique<FileDigitStream>(path);
}

std::unique_ptr<DigitStream> sample_biased_digits(const std::array<double, 10>& probabilities,
                                                  std::uint64_t length, std::uint64_t seed) {
    return std::make_unique<BiasedDigitStream>(probabilities, length, seed);
}

void write_digit_file(const std::filesystem::path& path, const std::string& digits) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    for (std::size_t i = 0; i < digits.size(); i += 100) {
        out.write(digits.data() + i, static_cast<std::streamsize>(std::min<std::size_t>(100, digits.size() - i)));
        out.put('\n');
    }
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace digitbf::constants
