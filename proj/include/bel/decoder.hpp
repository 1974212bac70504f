#ifndef BEL_DECODER_HPP
#define BEL_DECODER_HPP

#include <cstdint>
#include <vector>

#include "bel/codebook.hpp"

namespace bel {

using LogitVector = std::vector<double>;
using BitVector = std::vector<std::uint8_t>;

// bit_k = 1 iff z_k > 0 (exact zero maps to 0).
BitVector threshold(const LogitVector& z);

// Counting decoder for unary codes: sum of bits plus one.
int decode_unary(const BitVector& b);

// First/last-one decoder for Johnson codes:
//   Tl = -(largest index with a 1), Tf = (M+1) - (smallest index with a 1),
//   Tc = M, level = Tl + Tf + Tc.
// The all-zero pattern is the level-2M codeword and decodes to 2M. Garbled
// patterns can push the formula outside [1, 2M]; the result is clamped.
int decode_johnson(const BitVector& b);

// Correlation decoder: level with the highest dot(z, row), ties toward the
// smallest level.
int decode_gen(const LogitVector& z, const CodeMatrix& code);

// Expectation decoder: softmax over the correlations, then the expected
// level index. Returns a real coordinate in [1, L].
double decode_gen_ex(const LogitVector& z, const CodeMatrix& code);

}  // namespace bel

#endif
