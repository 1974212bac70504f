#ifndef BEL_LOSSES_HPP
#define BEL_LOSSES_HPP

#include <vector>

#include "bel/codebook.hpp"
#include "bel/decoder.hpp"

namespace bel {

struct LossResult {
    double value = 0.0;
    std::vector<double> grad;
};

enum class Norm { L1, L2 };

// Mean binary cross-entropy over bits with logistic activations,
// evaluated in softplus form. grad_k = (sigmoid(z_k) - t_k) / M.
LossResult bce_loss(const LogitVector& z, const BitVector& target_code);

// Cross-entropy over level logits u = C*z.
// grad = C^T (softmax(u) - onehot(target)).
LossResult ce_loss(const LogitVector& z, const CodeMatrix& code, int target_level);

// L1 or L2 distance between decode_gen_ex(z, C) and a real target level
// coordinate, with the gradient chained through the softmax expectation.
LossResult regression_loss(const LogitVector& z, const CodeMatrix& code,
                           double target, Norm norm);

}  // namespace bel

#endif
