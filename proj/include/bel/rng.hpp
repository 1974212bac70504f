#ifndef BEL_RNG_HPP
#define BEL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace bel {

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is pinned by the standard, and every mapping from raw 64-bit
// words to a distribution is written out here rather than delegated to
// std::uniform_*_distribution, whose algorithms are implementation-defined.
// Identical seeds therefore produce identical streams on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in {0..n-1}. The modulo bias is below 2^-50 for any n
    // this library draws (levels, indices), far under statistical noise.
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller; the pair's second value is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    static std::string name() { return "mt19937_64"; }

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// SplitMix64 step, used to derive independent stream seeds from a base seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Seed for substream `index` of a base seed.
std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace bel

#endif
