#include "bel/mc_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bel/decoder.hpp"
#include "bel/rng.hpp"

namespace bel {

std::string decoder_name(DecoderKind d) {
    switch (d) {
        case DecoderKind::Custom: return "custom";
        case DecoderKind::GEN: return "gen";
        case DecoderKind::GENEX: return "gen-ex";
    }
    throw std::invalid_argument("unknown decoder kind");
}

DecoderKind decoder_from_name(const std::string& name) {
    if (name == "custom") return DecoderKind::Custom;
    if (name == "gen") return DecoderKind::GEN;
    if (name == "gen-ex") return DecoderKind::GENEX;
    throw std::invalid_argument("invalid-decoder: " + name);
}

namespace {

struct StreamAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
};

// One substream's share of the sampling loop. flip_prob is the L x M table
// of e_k(n) evaluated once up front.
StreamAccumulator run_stream(const CodeMatrix& code, DecoderKind decoder,
                             const std::vector<std::vector<double>>& flip_prob,
                             std::uint64_t samples, std::uint64_t stream_seed) {
    Rng rng(stream_seed);
    const int L = code.levels;
    const int M = code.bits;

    BitVector bits(M);
    LogitVector logits(M);
    StreamAccumulator acc;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const int n = static_cast<int>(rng.uniform_index(L)) + 1;
        const auto& row = code.row(n);
        const auto& probs = flip_prob[n - 1];
        for (int k = 0; k < M; ++k) {
            const bool flip = rng.uniform() < probs[k];
            bits[k] = row[k] ^ static_cast<uint8_t>(flip);
        }

        double err = 0.0;
        switch (decoder) {
            case DecoderKind::Custom: {
                int dec;
                if (code.kind == CodeKind::Unary) {
                    dec = decode_unary(bits);
                } else if (code.kind == CodeKind::Johnson) {
                    dec = decode_johnson(bits);
                } else {
                    throw std::invalid_argument(
                        "custom decoder supports only unary and johnson codes");
                }
                err = std::abs(dec - n);
                break;
            }
            case DecoderKind::GEN: {
                for (int k = 0; k < M; ++k) logits[k] = 2.0 * bits[k] - 1.0;
                err = std::abs(decode_gen(logits, code) - n);
                break;
            }
            case DecoderKind::GENEX: {
                for (int k = 0; k < M; ++k) logits[k] = 2.0 * bits[k] - 1.0;
                err = std::fabs(decode_gen_ex(logits, code) - n);
                break;
            }
        }
        acc.sum += err;
        acc.sum_sq += err * err;
    }
    return acc;
}

}  // namespace

SimulationReport simulate(const CodeMatrix& code, DecoderKind decoder,
                          const ClassifierErrorModel& m, std::uint64_t samples,
                          std::uint64_t seed, int streams) {
    if (samples == 0) throw std::invalid_argument("samples must be positive");
    if (streams < 1) throw std::invalid_argument("streams must be positive");
    if (m.classifiers() != code.bits) {
        throw std::invalid_argument("error model does not match code width");
    }

    // Precompute e_k(n); error_prob also rejects invalid models here, before
    // any sampling starts.
    std::vector<std::vector<double>> flip_prob(code.levels,
                                               std::vector<double>(code.bits));
    for (int n = 1; n <= code.levels; ++n) {
        for (int k = 0; k < code.bits; ++k) {
            flip_prob[n - 1][k] = error_prob(m, k, n);
        }
    }

    const std::uint64_t per = samples / static_cast<std::uint64_t>(streams);
    const std::uint64_t rem = samples % static_cast<std::uint64_t>(streams);

    StreamAccumulator total;
    for (int i = 0; i < streams; ++i) {
        const std::uint64_t share = per + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        if (share == 0) continue;
        const auto acc = run_stream(code, decoder, flip_prob, share,
                                    derive_stream_seed(seed, i));
        total.sum += acc.sum;
        total.sum_sq += acc.sum_sq;
    }

    SimulationReport rep;
    rep.kind = code.kind;
    rep.decoder = decoder;
    rep.levels = code.levels;
    rep.samples = samples;
    rep.seed = seed;
    rep.streams = streams;
    rep.rng = Rng::name();
    rep.mean_abs_error = total.sum / samples;
    if (samples > 1) {
        const double n = static_cast<double>(samples);
        const double var =
            std::max(0.0, (total.sum_sq - n * rep.mean_abs_error * rep.mean_abs_error) /
                              (n - 1.0));
        rep.std_error = std::sqrt(var / n);
    }
    return rep;
}

BoundValidation validate_bound(const CodeMatrix& code, const ClassifierErrorModel& m,
                               std::uint64_t samples, std::uint64_t seed) {
    const int N = code.levels + 1;
    BoundValidation v;
    if (code.kind == CodeKind::Unary) {
        v.analytic = bound_unary(m, N).aggregate;
    } else if (code.kind == CodeKind::Johnson) {
        v.analytic = expected_err_johnson(m, N).aggregate;
    } else {
        throw std::invalid_argument("validate_bound supports only unary and johnson codes");
    }
    const auto rep = simulate(code, DecoderKind::Custom, m, samples, seed);
    v.mc_mean = rep.mean_abs_error;
    v.std_error = rep.std_error;
    v.pass = v.mc_mean <= v.analytic + 3.0 * v.std_error;
    return v;
}

}  // namespace bel
