#include <doctest.h>

#include <stdexcept>

#include "bel/quantizer.hpp"

using bel::QuantizationSpec;

TEST_CASE("quantize maps the range endpoints to the edge levels") {
    const QuantizationSpec spec(0.0, 1.0, 64);
    CHECK(bel::quantize(0.0, spec) == 1);
    CHECK(bel::quantize(1.0, spec) == 64);
}

TEST_CASE("zero lands on the middle level of a symmetric range") {
    const QuantizationSpec spec(-99.0, 99.0, 200);
    CHECK(bel::quantize(0.0, spec) == 101);
}

TEST_CASE("half-way points round up") {
    // With 3 levels on [0,2] the coordinate of y=0.5 is exactly 1.5.
    const QuantizationSpec spec(0.0, 2.0, 3);
    CHECK(bel::quantize(0.5, spec) == 2);
    CHECK(bel::quantize(1.5, spec) == 3);
}

TEST_CASE("dequantize inverts quantize on level centers") {
    const QuantizationSpec spec(-5.0, 7.0, 31);
    for (int q = 1; q <= 31; ++q) {
        const double y = bel::dequantize(q, spec);
        CHECK(bel::quantize(y, spec) == q);
    }
}

TEST_CASE("level_coordinate is linear and unclamped") {
    const QuantizationSpec spec(0.0, 1.0, 11);
    CHECK(bel::level_coordinate(0.0, spec) == doctest::Approx(1.0));
    CHECK(bel::level_coordinate(0.5, spec) == doctest::Approx(6.0));
    CHECK(bel::level_coordinate(1.0, spec) == doctest::Approx(11.0));
    CHECK(bel::level_coordinate(0.55, spec) == doctest::Approx(6.5));
}

TEST_CASE("labels outside the range are rejected") {
    const QuantizationSpec spec(0.0, 1.0, 4);
    CHECK_THROWS_AS(bel::quantize(-0.01, spec), std::out_of_range);
    CHECK_THROWS_AS(bel::level_coordinate(1.01, spec), std::out_of_range);
    CHECK_THROWS_AS(bel::dequantize(0.99, spec), std::out_of_range);
    CHECK_THROWS_AS(bel::dequantize(4.01, spec), std::out_of_range);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(QuantizationSpec(1.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(QuantizationSpec(2.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(QuantizationSpec(0.0, 1.0, 1), std::invalid_argument);
}
