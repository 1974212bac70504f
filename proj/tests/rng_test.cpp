#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "bel/rng.hpp"

TEST_CASE("splitmix64 known-answer sequence from state 0") {
    std::uint64_t state = 0;
    CHECK(bel::splitmix64(state) == 0xE220A8397B1DCDAFULL);
    CHECK(bel::splitmix64(state) == 0x6E789E6AA1B965F4ULL);
    CHECK(bel::splitmix64(state) == 0x06C45D188009454FULL);
}

TEST_CASE("stream seeds are distinct and reproducible") {
    const auto s0 = bel::derive_stream_seed(42, 0);
    const auto s1 = bel::derive_stream_seed(42, 1);
    const auto s2 = bel::derive_stream_seed(42, 2);
    CHECK(s0 != s1);
    CHECK(s1 != s2);
    CHECK(s0 == bel::derive_stream_seed(42, 0));
    CHECK(s0 != bel::derive_stream_seed(43, 0));
}

TEST_CASE("identical seeds give identical draws") {
    bel::Rng a(7);
    bel::Rng b(7);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    bel::Rng c(7);
    bel::Rng d(7);
    for (int i = 0; i < 100; ++i) {
        CHECK(c.uniform() == d.uniform());
        CHECK(c.gaussian() == d.gaussian());
    }
}

TEST_CASE("uniform stays in the half-open unit interval") {
    bel::Rng rng(1);
    double lo = 1.0;
    double hi = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.05);
    CHECK(hi > 0.95);
}

TEST_CASE("uniform_index covers the whole range") {
    bel::Rng rng(3);
    int counts[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 5000; ++i) {
        const auto k = rng.uniform_index(5);
        REQUIRE(k < 5);
        ++counts[k];
    }
    for (int c : counts) CHECK(c > 800);
}

TEST_CASE("gaussian moments are roughly standard") {
    bel::Rng rng(11);
    const int n = 200000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.01);
    CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("engine name is reported") {
    CHECK(bel::Rng::name() == "mt19937_64");
}
