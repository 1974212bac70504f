#ifndef BEL_MC_SIM_HPP
#define BEL_MC_SIM_HPP

#include <cstdint>
#include <string>

#include "bel/bounds.hpp"
#include "bel/codebook.hpp"
#include "bel/error_model.hpp"

namespace bel {

enum class DecoderKind { Custom, GEN, GENEX };

std::string decoder_name(DecoderKind d);
DecoderKind decoder_from_name(const std::string& name);

struct SimulationReport {
    CodeKind kind;
    DecoderKind decoder;
    int levels = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int streams = 1;
    std::string rng;
    double mean_abs_error = 0.0;
    double std_error = 0.0;
};

// Draws levels uniformly from {1..L}, flips each codeword bit independently
// with probability e_k(n), decodes, and accumulates |decoded - n|. Custom
// decoders consume bits directly; GEN and GEN-EX consume the +-1 logit image
// 2b-1 of the flipped bits. Samples are split across `streams` substreams
// seeded from (seed, stream index) and merged in index order, so the report
// depends only on the configuration, never on scheduling.
SimulationReport simulate(const CodeMatrix& code, DecoderKind decoder,
                          const ClassifierErrorModel& m, std::uint64_t samples,
                          std::uint64_t seed, int streams = 1);

struct BoundValidation {
    bool pass = false;
    double mc_mean = 0.0;
    double std_error = 0.0;
    double analytic = 0.0;
};

// Simulates the custom decoder for a unary or Johnson code and checks the
// analytic expected-error value against the MC estimate:
// pass iff mc_mean <= analytic + 3 * std_error.
BoundValidation validate_bound(const CodeMatrix& code, const ClassifierErrorModel& m,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace bel

#endif
