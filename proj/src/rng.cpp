#include "bel/rng.hpp"

namespace bel {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index) {
    std::uint64_t state = base_seed;
    std::uint64_t seed = 0;
    for (std::uint64_t i = 0; i <= index; ++i) seed = splitmix64(state);
    return seed;
}

}  // namespace bel
