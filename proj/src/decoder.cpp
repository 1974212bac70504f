#include "bel/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bel {

namespace {

void require_width(const LogitVector& z, const CodeMatrix& code) {
    if (static_cast<int>(z.size()) != code.bits) {
        throw std::invalid_argument("logit width " + std::to_string(z.size()) +
                                    " does not match code bits " + std::to_string(code.bits));
    }
}

double correlation(const LogitVector& z, const std::vector<std::uint8_t>& row) {
    double dot = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (row[k]) dot += z[k];
    }
    return dot;
}

}  // namespace

BitVector threshold(const LogitVector& z) {
    BitVector bits(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) bits[k] = z[k] > 0.0 ? 1 : 0;
    return bits;
}

int decode_unary(const BitVector& b) {
    int ones = 0;
    for (auto bit : b) ones += bit;
    return ones + 1;
}

int decode_johnson(const BitVector& b) {
    const int m = static_cast<int>(b.size());
    int first = 0;
    int last = 0;
    for (int k = 1; k <= m; ++k) {
        if (b[k - 1]) {
            if (first == 0) first = k;
            last = k;
        }
    }
    if (first == 0) return 2 * m;  // all-zero pattern is the level-2M codeword
    const int tl = -last;
    const int tf = (m + 1) - first;
    int level = tl + tf + m;
    return std::clamp(level, 1, 2 * m);
}

int decode_gen(const LogitVector& z, const CodeMatrix& code) {
    require_width(z, code);
    int best = 1;
    double best_corr = correlation(z, code.rows[0]);
    for (int q = 2; q <= code.levels; ++q) {
        const double corr = correlation(z, code.rows[q - 1]);
        if (corr > best_corr) {
            best_corr = corr;
            best = q;
        }
    }
    return best;
}

double decode_gen_ex(const LogitVector& z, const CodeMatrix& code) {
    require_width(z, code);
    std::vector<double> corr(code.levels);
    for (int q = 1; q <= code.levels; ++q) corr[q - 1] = correlation(z, code.rows[q - 1]);
    const double peak = *std::max_element(corr.begin(), corr.end());
    double total = 0.0;
    double weighted = 0.0;
    for (int q = 1; q <= code.levels; ++q) {
        const double w = std::exp(corr[q - 1] - peak);
        total += w;
        weighted += q * w;
    }
    return weighted / total;
}

}  // namespace bel
