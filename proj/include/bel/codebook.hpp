#ifndef BEL_CODEBOOK_HPP
#define BEL_CODEBOOK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bel {

enum class CodeKind { Unary, Johnson, B1JDJ, B2JDJ, HEXJ, Hadamard };

std::string kind_name(CodeKind kind);
CodeKind kind_from_name(const std::string& name);

// Row q (0-based index q-1) is the codeword of quantization level q.
struct CodeMatrix {
    CodeKind kind;
    int levels = 0;
    int bits = 0;
    std::vector<std::vector<std::uint8_t>> rows;

    const std::vector<std::uint8_t>& row(int level) const { return rows[level - 1]; }
};

struct CodeMetrics {
    std::vector<int> transitions_per_classifier;
    std::vector<int> adjacent_hamming;
    std::vector<std::vector<int>> pairwise_hamming;
};

// Staircase code: bit k of level Q is 1 iff k < Q (bits 1-indexed), M = L-1.
CodeMatrix gen_unary(int levels);

// Twisted-ring-counter code with M = ceil(L/2) bits. With N = 2M, bit k of
// level Q is 1 iff M - Q < k <= N - Q; level 2M (when present) is all-zero.
CodeMatrix gen_johnson(int levels);

// Base+displacement code: value v = Q-1 splits as v = base*b + d; the base
// term is Johnson-coded over ceil(L/base) levels and the displacement over
// `base` levels. On odd base terms the displacement index is reflected
// (d -> base-1-d) so consecutive codewords differ in exactly one bit.
// `reflect` exists for the negative control; production callers leave it on.
CodeMatrix gen_base_johnson(int levels, int base, bool reflect = true);

// Per-hex-digit code: D = ceil(log16 L) digits, each encoded as an 8-bit
// Johnson word, most significant digit first. M = 8D.
CodeMatrix gen_hexj(int levels);

// First L rows of the Sylvester Hadamard matrix of order M (the smallest
// power of two >= L), with +1 -> 1 and -1 -> 0. Pairwise distance M/2.
CodeMatrix gen_hadamard(int levels);

CodeMatrix make_code(CodeKind kind, int levels);

CodeMetrics metrics(const CodeMatrix& code);

int hamming(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

}  // namespace bel

#endif
