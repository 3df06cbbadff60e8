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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "digitbf/constants.hpp"
#include "digitbf/tally.hpp"
#include "series.hpp"
#include "support/golden_digits.hpp"

using namespace digitbf;
using namespace digitbf::constants;

namespace {

std::vector<std::uint8_t> drain(DigitStream& stream) {
    std::vector<std::uint8_t> digits;
    std::uint8_t buffer[256];
    while (true) {
        const std::size_t n = stream.read(buffer);
        if (n == 0) break;
        digits.insert(digits.end(), buffer, buffer + n);
    }
    return digits;
}

std::string drain_ascii(DigitStream& stream) {
    std::string out;
    for (std::uint8_t d : drain(stream)) out.push_back(static_cast<char>('0' + d));
    return out;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("digitbf_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt");
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

const char* golden_1000(Constant c) {
    switch (c) {
        case Constant::pi: return testing::kPi1000;
        case Constant::e: return testing::kE1000;
        case Constant::sqrt2: return testing::kSqrt21000;
        case Constant::ln2: return testing::kLn21000;
    }
    return "";
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("golden prefixes of all four constants") {
    for (Constant c : {Constant::pi, Constant::e, Constant::sqrt2, Constant::ln2}) {
        INFO("constant ", name_of(c));
        const std::string expected(golden_1000(c));
        CHECK(generate_digit_string(c, 50) == expected.substr(0, 50));
        CHECK(generate_digit_string(c, 1000) == expected);
    }
}

TEST_CASE("first fractional digit convention") {
    CHECK(generate_digit_string(Constant::pi, 1) == "1");
    CHECK(generate_digit_string(Constant::e, 1) == "7");
    CHECK(generate_digit_string(Constant::sqrt2, 1) == "4");
    CHECK(generate_digit_string(Constant::ln2, 1) == "6");
}

TEST_CASE("shorter generations are prefixes of longer ones") {
    for (Constant c : {Constant::pi, Constant::e, Constant::sqrt2, Constant::ln2}) {
        const std::string longer = generate_digit_string(c, 400);
        const std::string shorter = generate_digit_string(c, 300);
        INFO("constant ", name_of(c));
        CHECK(longer.substr(0, 300) == shorter);
        // guard-digit spot check: the tail agrees with a recomputation
        CHECK(shorter.substr(295, 5) == longer.substr(295, 5));
    }
}

TEST_CASE("generation respects the ceiling") {
    CHECK_THROWS_AS(generate_digit_string(Constant::pi, 101, 100), generation_limit_error);
    CHECK_THROWS_AS(generate_digit_string(Constant::pi, 0), std::domain_error);
    CHECK(generate_digit_string(Constant::pi, 100, 100).size() == 100);
}

TEST_CASE("generated stream delivers digit values") {
    auto stream = generate_digits(Constant::e, 10);
    const auto digits = drain(*stream);
    const std::vector<std::uint8_t> expected{7, 1, 8, 2, 8, 1, 8, 2, 8, 4};
    CHECK(digits == expected);
}

TEST_CASE("ingestion skips an integer-part header") {
    TempFile file("3.14159\n26");
    auto stream = ingest_digit_file(file.path);
    CHECK(drain_ascii(*stream) == "1415926");
}

TEST_CASE("ingestion without a header streams every digit") {
    TempFile file("0123456789");
    auto stream = ingest_digit_file(file.path);
    CHECK(drain_ascii(*stream) == "0123456789");
}

TEST_CASE("ingestion tolerates whitespace and bare fractions") {
    TempFile file(" \t.5 0\n1 ");
    auto stream = ingest_digit_file(file.path);
    CHECK(drain_ascii(*stream) == "501");
}

TEST_CASE("ingestion reports byte offsets for bad characters") {
    TempFile file("123x456");
    auto stream = ingest_digit_file(file.path);
    std::uint8_t buffer[16];
    try {
        stream->read(buffer);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 3);
    }
}

TEST_CASE("ingestion rejects a second dot") {
    TempFile file("1.2.3");
    auto stream = ingest_digit_file(file.path);
    std::uint8_t buffer[16];
    CHECK_THROWS_AS(stream->read(buffer), parse_error);
}

TEST_CASE("ingestion rejects digitless files") {
    for (const char* contents : {"", "   \n\t ", "."}) {
        TempFile file(contents);
        auto stream = ingest_digit_file(file.path);
        std::uint8_t buffer[16];
        CHECK_THROWS_AS(stream->read(buffer), parse_error);
    }
}

TEST_CASE("missing files raise parse errors") {
    CHECK_THROWS_AS(ingest_digit_file("/nonexistent/digits.txt"), parse_error);
}

TEST_CASE("header decision boundary at 64 integer digits") {
    {
        TempFile file(std::string(64, '7') + ".123");
        auto stream = ingest_digit_file(file.path);
        CHECK(drain_ascii(*stream) == "123");
    }
    {
        TempFile file(std::string(65, '7') + ".123");
        auto stream = ingest_digit_file(file.path);
        std::uint8_t buffer[256];
        bool threw = false;
        std::size_t streamed = 0;
        try {
            std::size_t n = 0;
            while ((n = stream->read(buffer)) > 0) streamed += n;
        } catch (const parse_error& e) {
            threw = true;
            CHECK(e.byte_offset() == 65);
        }
        CHECK(threw);
    }
}

TEST_CASE("a long headerless stream is delivered intact") {
    // the header decision commits after 64 digits; everything must arrive
    std::string contents;
    for (int i = 0; i < 500; ++i) contents.push_back(static_cast<char>('0' + i % 10));
    TempFile file(contents);
    auto stream = ingest_digit_file(file.path);
    CHECK(drain_ascii(*stream) == contents);
}

TEST_CASE("cache files round-trip through ingestion") {
    const std::string digits = generate_digit_string(Constant::sqrt2, 1234);
    const auto path = std::filesystem::temp_directory_path() / "digitbf_cache_test.txt";
    write_digit_file(path, digits);

    // format: pure digits, newline every 100
    std::ifstream in(path);
    std::string first_line;
    std::getline(in, first_line);
    CHECK(first_line.size() == 100);
    in.close();

    auto stream = ingest_digit_file(path);
    CHECK(drain_ascii(*stream) == digits);
    std::filesystem::remove(path);
}

TEST_CASE("ingestion and generation agree on pi tallies") {
    const std::uint64_t length = 100000;
    const std::string digits = generate_digit_string(Constant::pi, length);
    const auto path = std::filesystem::temp_directory_path() / "digitbf_pi_prefix.txt";
    write_digit_file(path, digits);

    DigitCounts from_file;
    auto stream = ingest_digit_file(path);
    std::vector<std::uint8_t> buffer(1 << 14);
    while (true) {
        const std::size_t n = stream->read(buffer);
        if (n == 0) break;
        tally::accumulate(std::span(buffer).first(n), from_file);
    }

    DigitCounts from_generator;
    for (char ch : digits) from_generator.add_digit(static_cast<unsigned>(ch - '0'));

    CHECK(from_file.counts == from_generator.counts);
    CHECK(from_file.total == length);
    std::filesystem::remove(path);
}

TEST_CASE("biased sampling is seed-deterministic") {
    const std::array<double, 10> uniform{0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    auto first = drain(*sample_biased_digits(uniform, 5000, 123));
    auto second = drain(*sample_biased_digits(uniform, 5000, 123));
    CHECK(first == second);
    auto third = drain(*sample_biased_digits(uniform, 5000, 124));
    CHECK(first != third);
}

TEST_CASE("uniform sampling lands near equal frequencies") {
    const std::array<double, 10> uniform{0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    const std::uint64_t n = 100000;
    auto digits = drain(*sample_biased_digits(uniform, n, 2024));
    DigitCounts counts;
    tally::accumulate(digits, counts);
    // 3 sigma of a binomial(n, 0.1)
    const double sigma = std::sqrt(n * 0.1 * 0.9);
    for (int j = 0; j < 10; ++j)
        CHECK(std::fabs(static_cast<double>(counts.counts[j]) - n * 0.1) <= 3.0 * sigma + 1);
}

TEST_CASE("biased sampling shifts the targeted digit") {
    std::array<double, 10> bias;
    bias.fill(0.89 / 9.0);
    bias[0] = 0.11;
    const std::uint64_t n = 1000000;
    auto digits = drain(*sample_biased_digits(bias, n, 77));
    DigitCounts counts;
    tally::accumulate(digits, counts);
    const double sigma = std::sqrt(n * 0.11 * 0.89);  // ~313
    CHECK(std::fabs(static_cast<double>(counts.counts[0]) - 110000.0) <= 3.0 * sigma);
}

TEST_CASE("invalid probability vectors are rejected") {
    std::array<double, 10> bad{0.2, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    CHECK_THROWS_AS(sample_biased_digits(bad, 10, 0), std::domain_error);
    std::array<double, 10> negative{1.1, -0.1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(sample_biased_digits(negative, 10, 0), std::domain_error);
}

TEST_CASE("constant names round-trip") {
    for (Constant c : {Constant::pi, Constant::e, Constant::sqrt2, Constant::ln2})
        CHECK(constant_from_name(name_of(c)) == c);
    CHECK(!constant_from_name("phi").has_value());
}

TEST_CASE("segmented series evaluation matches the direct path") {
    // ln2's term ratio, evaluated both ways at 2000 digits; segment folding
    // may differ only in the guard band
    const series::TermFn ln2_term = [](std::uint64_t k, mpz_class& p, mpz_class& q) {
        if (k == 0) {
            p = 1;
            q = 2;
        } else {
            p = static_cast<unsigned long>(k);
            q = static_cast<unsigned long>(2 * (k + 1));
        }
    };
    const std::uint64_t prec = 2000;
    const std::uint64_t terms =
        static_cast<std::uint64_t>(static_cast<double>(prec + 4) * std::log(10.0) /
                                   std::log(2.0)) +
        2;
    const mpz_class direct = series::scaled_series(terms, ln2_term, prec, 1);
    for (std::uint64_t segments : {2ull, 7ull, 32ull}) {
        const mpz_class segmented = series::scaled_series(terms, ln2_term, prec, segments);
        mpz_class difference = direct - segmented;
        CHECK(abs(difference) <= 4 * segments);
    }

    // alternating-sign series (atan) as well
    const series::TermFn atan5 = [](std::uint64_t k, mpz_class& p, mpz_class& q) {
        if (k == 0) {
            p = 1;
            q = 5;
        } else {
            p = -static_cast<long>(2 * k - 1);
            q = static_cast<unsigned long>(2 * k + 1);
            q *= 25;
        }
    };
    const std::uint64_t atan_terms = static_cast<std::uint64_t>(
                                         static_cast<double>(prec + 4) * std::log(10.0) /
                                         (2.0 * std::log(5.0))) +
                                     2;
    const mpz_class atan_direct = series::scaled_series(atan_terms, atan5, prec, 1);
    const mpz_class atan_segmented = series::scaled_series(atan_terms, atan5, prec, 9);
    mpz_class difference = atan_direct - atan_segmented;
    CHECK(abs(difference) <= 40);
}

}  // TEST_SUITE
