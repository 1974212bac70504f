#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "bel/codebook.hpp"

using bel::CodeKind;
using bel::CodeMatrix;

namespace {

std::string row_string(const CodeMatrix& code, int level) {
    std::string s;
    for (auto b : code.row(level)) s += b ? '1' : '0';
    return s;
}

}  // namespace

TEST_CASE("kind names round trip") {
    for (auto kind : {CodeKind::Unary, CodeKind::Johnson, CodeKind::B1JDJ,
                      CodeKind::B2JDJ, CodeKind::HEXJ, CodeKind::Hadamard}) {
        CHECK(bel::kind_from_name(bel::kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(bel::kind_from_name("gray"), std::invalid_argument);
}

TEST_CASE("unary staircase") {
    const auto code = bel::gen_unary(8);
    CHECK(code.bits == 7);
    CHECK(row_string(code, 1) == "0000000");
    CHECK(row_string(code, 4) == "1110000");
    CHECK(row_string(code, 8) == "1111111");

    const auto tiny = bel::gen_unary(2);
    CHECK(tiny.bits == 1);
    CHECK(row_string(tiny, 1) == "0");
    CHECK(row_string(tiny, 2) == "1");
}

TEST_CASE("unary hamming distance equals level gap") {
    const auto code = bel::gen_unary(64);
    for (int i = 1; i <= 64; ++i) {
        for (int j = 1; j <= 64; ++j) {
            CHECK(bel::hamming(code.row(i), code.row(j)) == std::abs(i - j));
        }
    }
}

TEST_CASE("johnson ring counter words") {
    const auto code = bel::gen_johnson(7);
    CHECK(code.bits == 4);
    CHECK(row_string(code, 1) == "0001");
    CHECK(row_string(code, 3) == "0111");
    CHECK(row_string(code, 4) == "1111");
    CHECK(row_string(code, 7) == "1000");

    const auto even = bel::gen_johnson(8);
    CHECK(even.bits == 4);
    CHECK(row_string(even, 8) == "0000");
}

TEST_CASE("johnson adjacency and column transitions") {
    for (int levels : {2, 3, 7, 8, 16, 63, 64, 255, 256}) {
        const auto code = bel::gen_johnson(levels);
        for (int q = 1; q < levels; ++q) {
            CHECK(bel::hamming(code.row(q), code.row(q + 1)) == 1);
        }
        const auto m = bel::metrics(code);
        for (int t : m.transitions_per_classifier) CHECK(t <= 2);
    }
}

TEST_CASE("base+displacement worked words at 16 levels") {
    const auto code = bel::gen_base_johnson(16, 2);
    CHECK(code.kind == CodeKind::B1JDJ);
    CHECK(code.bits == 5);
    CHECK(row_string(code, 1) == "00000");
    CHECK(row_string(code, 2) == "00001");
    CHECK(row_string(code, 3) == "10001");
}

TEST_CASE("base+displacement adjacency, with and without reflection") {
    for (int levels : {4, 5, 16, 64, 256}) {
        for (int base : {2, 4}) {
            const auto code = bel::gen_base_johnson(levels, base);
            for (int q = 1; q < levels; ++q) {
                CHECK(bel::hamming(code.row(q), code.row(q + 1)) == 1);
            }

            // The quotient-term columns inherit the staircase structure;
            // only the reflected displacement columns oscillate.
            const int disp_bits = bel::gen_johnson(base).bits;
            const auto counts = bel::metrics(code).transitions_per_classifier;
            for (std::size_t k = 0; k + disp_bits < counts.size(); ++k) {
                CHECK(counts[k] <= 2);
            }
        }
    }

    // Reflection is what makes consecutive words adjacent; without it the
    // displacement field jumps back to zero at every base-term carry.
    const auto raw = bel::gen_base_johnson(16, 2, false);
    bool violated = false;
    for (int q = 1; q < 16; ++q) {
        if (bel::hamming(raw.row(q), raw.row(q + 1)) != 1) violated = true;
    }
    CHECK(violated);
}

TEST_CASE("hex digit code") {
    const auto code = bel::gen_hexj(256);
    CHECK(code.bits == 16);
    CHECK(row_string(code, 48) == "0000011100000000");
    CHECK(row_string(code, 1) == "0000000100000001");

    const auto small = bel::gen_hexj(16);
    CHECK(small.bits == 8);
}

TEST_CASE("hadamard rows") {
    const auto code = bel::gen_hadamard(4);
    CHECK(code.bits == 4);
    CHECK(row_string(code, 1) == "1111");
    CHECK(row_string(code, 2) == "1010");
    CHECK(row_string(code, 3) == "1100");
    CHECK(row_string(code, 4) == "1001");
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i != j) CHECK(bel::hamming(code.row(i), code.row(j)) == 2);
        }
    }

    const auto padded = bel::gen_hadamard(5);
    CHECK(padded.bits == 8);
}

TEST_CASE("classifier counts at 256 levels") {
    CHECK(bel::gen_unary(256).bits == 255);
    CHECK(bel::gen_johnson(256).bits == 128);
    CHECK(bel::gen_base_johnson(256, 2).bits == 65);
    CHECK(bel::gen_base_johnson(256, 4).bits == 34);
    CHECK(bel::gen_hexj(256).bits == 16);
    CHECK(bel::gen_hadamard(256).bits == 256);
}

TEST_CASE("make_code dispatch matches the generators") {
    CHECK(bel::make_code(CodeKind::Unary, 16).bits == bel::gen_unary(16).bits);
    CHECK(bel::make_code(CodeKind::B1JDJ, 16).rows == bel::gen_base_johnson(16, 2).rows);
    CHECK(bel::make_code(CodeKind::B2JDJ, 16).rows == bel::gen_base_johnson(16, 4).rows);
    CHECK(bel::make_code(CodeKind::HEXJ, 300).bits == 24);
    CHECK(bel::make_code(CodeKind::Hadamard, 300).bits == 512);
}

TEST_CASE("metrics fields") {
    const auto code = bel::gen_unary(5);
    const auto m = bel::metrics(code);
    REQUIRE(m.transitions_per_classifier.size() == 4);
    for (int t : m.transitions_per_classifier) CHECK(t == 1);
    REQUIRE(m.adjacent_hamming.size() == 4);
    for (int h : m.adjacent_hamming) CHECK(h == 1);
    CHECK(m.pairwise_hamming[0][4] == 4);
    CHECK(m.pairwise_hamming[2][2] == 0);
}

TEST_CASE("level validation") {
    CHECK_THROWS_AS(bel::gen_unary(1), std::invalid_argument);
    CHECK_THROWS_AS(bel::gen_johnson(0), std::invalid_argument);
    CHECK_THROWS_AS(bel::gen_base_johnson(16, 3), std::invalid_argument);
    CHECK_THROWS_AS(bel::gen_base_johnson(2, 4), std::invalid_argument);
}
