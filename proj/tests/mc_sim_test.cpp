#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bel/bounds.hpp"
#include "bel/codebook.hpp"
#include "bel/error_model.hpp"
#include "bel/mc_sim.hpp"

namespace {

constexpr double kPhi0 = 0.3989422804014326779;

}  // namespace

TEST_CASE("decoder names round trip") {
    for (auto d : {bel::DecoderKind::Custom, bel::DecoderKind::GEN, bel::DecoderKind::GENEX}) {
        CHECK(bel::decoder_from_name(bel::decoder_name(d)) == d);
    }
    CHECK_THROWS_AS(bel::decoder_from_name("viterbi"), std::invalid_argument);
}

TEST_CASE("zero-scale models decode without error for every kind") {
    for (auto kind : {bel::CodeKind::Unary, bel::CodeKind::Johnson, bel::CodeKind::B1JDJ,
                      bel::CodeKind::B2JDJ, bel::CodeKind::HEXJ, bel::CodeKind::Hadamard}) {
        const auto code = bel::make_code(kind, 16);
        const auto m = bel::model_from_code(code, 0.0, 1.0);
        const auto rep = bel::simulate(code, bel::DecoderKind::GEN, m, 2000, 5);
        CHECK(rep.mean_abs_error == 0.0);
        CHECK(rep.std_error == 0.0);
    }
}

TEST_CASE("reports echo their configuration") {
    const auto code = bel::gen_johnson(15);
    const auto m = bel::model_from_code(code, 0.2, 1.0);
    const auto rep = bel::simulate(code, bel::DecoderKind::Custom, m, 1000, 42, 3);
    CHECK(rep.kind == bel::CodeKind::Johnson);
    CHECK(rep.decoder == bel::DecoderKind::Custom);
    CHECK(rep.levels == 15);
    CHECK(rep.samples == 1000);
    CHECK(rep.seed == 42);
    CHECK(rep.streams == 3);
    CHECK(rep.rng == "mt19937_64");
}

TEST_CASE("fixed seeds reproduce the estimate exactly") {
    const auto code = bel::gen_unary(15);
    const auto m = bel::model_from_code(code, 0.3, 1.0);
    const auto a = bel::simulate(code, bel::DecoderKind::GENEX, m, 20000, 9, 4);
    const auto b = bel::simulate(code, bel::DecoderKind::GENEX, m, 20000, 9, 4);
    CHECK(a.mean_abs_error == b.mean_abs_error);
    CHECK(a.std_error == b.std_error);
    const auto c = bel::simulate(code, bel::DecoderKind::GENEX, m, 20000, 10, 4);
    CHECK(a.mean_abs_error != c.mean_abs_error);
}

TEST_CASE("single-classifier unary estimate matches the exact value") {
    // e(1) = 0.1 and e(2) = 0.2 by center placement; exact mean error 0.15.
    bel::ClassifierErrorModel m;
    const double mu = 1.5 + std::log(2.0);
    m.centers = {{mu}};
    m.sigma = 1.0;
    m.r = 0.1 / (kPhi0 * std::exp(-0.5 * (1.0 - mu) * (1.0 - mu)));
    m.n_labels = 2;

    const auto code = bel::gen_unary(2);
    const auto rep = bel::simulate(code, bel::DecoderKind::Custom, m, 100000, 123);
    CHECK(std::fabs(rep.mean_abs_error - 0.15) <= 3.0 * rep.std_error);

    // single-bit codes decode identically under the correlation rule
    const auto gen = bel::simulate(code, bel::DecoderKind::GEN, m, 100000, 123);
    CHECK(std::fabs(gen.mean_abs_error - 0.15) <= 3.0 * gen.std_error);
}

TEST_CASE("std error shrinks like the square root of the sample count") {
    const auto code = bel::gen_johnson(15);
    const auto m = bel::model_from_code(code, 0.4, 1.0);
    const auto small = bel::simulate(code, bel::DecoderKind::Custom, m, 50000, 77);
    const auto big = bel::simulate(code, bel::DecoderKind::Custom, m, 100000, 77);
    const double ratio = small.std_error / big.std_error;
    CHECK(ratio > std::sqrt(2.0) * 0.9);
    CHECK(ratio < std::sqrt(2.0) * 1.1);
}

TEST_CASE("stream splitting keeps the estimate consistent") {
    const auto code = bel::gen_johnson(15);
    const auto m = bel::model_from_code(code, 0.4, 1.0);
    const auto one = bel::simulate(code, bel::DecoderKind::Custom, m, 60000, 31, 1);
    const auto four = bel::simulate(code, bel::DecoderKind::Custom, m, 60001, 31, 4);
    // different substreams, same distribution: means agree within noise
    CHECK(std::fabs(one.mean_abs_error - four.mean_abs_error) <=
          4.0 * (one.std_error + four.std_error));
    const auto four_again = bel::simulate(code, bel::DecoderKind::Custom, m, 60001, 31, 4);
    CHECK(four.mean_abs_error == four_again.mean_abs_error);
}

TEST_CASE("bound validation passes for unary and johnson") {
    for (int N : {8, 16}) {
        const auto ucode = bel::gen_unary(N - 1);
        const auto um = bel::model_from_code(ucode, 0.2, 1.0);
        const auto uv = bel::validate_bound(ucode, um, 100000, 5);
        CHECK(uv.pass);
        CHECK(uv.analytic >= uv.mc_mean - 3.0 * uv.std_error);

        const auto jcode = bel::gen_johnson(N - 1);
        const auto jm = bel::model_from_code(jcode, 0.5, 1.0);
        const auto jv = bel::validate_bound(jcode, jm, 100000, 5);
        CHECK(jv.pass);
    }
}

TEST_CASE("a halved analytic value would fail on a high-error model") {
    const auto code = bel::gen_johnson(15);
    const auto m = bel::model_from_code(code, 0.6, 1.0);
    const auto v = bel::validate_bound(code, m, 100000, 8);
    CHECK(v.pass);
    CHECK(v.mc_mean > 0.5 * v.analytic + 3.0 * v.std_error);
}

TEST_CASE("zero-error model validates trivially") {
    const auto code = bel::gen_unary(7);
    const auto m = bel::model_from_code(code, 0.0, 1.0);
    const auto v = bel::validate_bound(code, m, 10000, 1);
    CHECK(v.pass);
    CHECK(v.mc_mean == 0.0);
    CHECK(v.analytic == 0.0);
}

TEST_CASE("custom decoding rejects kinds without a custom rule") {
    const auto code = bel::gen_hadamard(8);
    const auto m = bel::model_from_code(code, 0.1, 1.0);
    CHECK_THROWS_AS(bel::simulate(code, bel::DecoderKind::Custom, m, 100, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(bel::validate_bound(code, m, 100, 1), std::invalid_argument);
}
