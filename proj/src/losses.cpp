#include "bel/losses.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bel {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

std::vector<double> softmax_over_rows(const LogitVector& z, const CodeMatrix& code) {
    std::vector<double> u(code.levels, 0.0);
    for (int q = 0; q < code.levels; ++q) {
        const auto& row = code.rows[q];
        double dot = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (row[k]) dot += z[k];
        }
        u[q] = dot;
    }
    double peak = u[0];
    for (double v : u) peak = std::max(peak, v);
    double total = 0.0;
    for (double& v : u) {
        v = std::exp(v - peak);
        total += v;
    }
    for (double& v : u) v /= total;
    return u;
}

void require_width(const LogitVector& z, const CodeMatrix& code) {
    if (static_cast<int>(z.size()) != code.bits) {
        throw std::invalid_argument("logit width " + std::to_string(z.size()) +
                                    " does not match code bits " + std::to_string(code.bits));
    }
}

}  // namespace

LossResult bce_loss(const LogitVector& z, const BitVector& target_code) {
    if (z.size() != target_code.size()) {
        throw std::invalid_argument("bce: logit and target lengths differ");
    }
    const double m = static_cast<double>(z.size());
    LossResult out;
    out.grad.resize(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        const double t = target_code[k] ? 1.0 : 0.0;
        // -[t log s(z) + (1-t) log(1-s(z))] = softplus(z) - t*z
        out.value += softplus(z[k]) - t * z[k];
        out.grad[k] = (sigmoid(z[k]) - t) / m;
    }
    out.value /= m;
    return out;
}

LossResult ce_loss(const LogitVector& z, const CodeMatrix& code, int target_level) {
    require_width(z, code);
    if (target_level < 1 || target_level > code.levels) {
        throw std::invalid_argument("invalid-level: " + std::to_string(target_level));
    }
    const auto p = softmax_over_rows(z, code);
    LossResult out;
    out.value = -std::log(p[target_level - 1]);
    out.grad.assign(z.size(), 0.0);
    for (int q = 0; q < code.levels; ++q) {
        const double coeff = p[q] - (q == target_level - 1 ? 1.0 : 0.0);
        const auto& row = code.rows[q];
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (row[k]) out.grad[k] += coeff;
        }
    }
    return out;
}

LossResult regression_loss(const LogitVector& z, const CodeMatrix& code,
                           double target, Norm norm) {
    require_width(z, code);
    if (target < 1.0 || target > static_cast<double>(code.levels)) {
        throw std::invalid_argument("invalid-target: " + std::to_string(target));
    }
    const auto p = softmax_over_rows(z, code);
    double yhat = 0.0;
    for (int q = 0; q < code.levels; ++q) yhat += (q + 1) * p[q];

    const double diff = yhat - target;
    LossResult out;
    double dvalue_dyhat;
    if (norm == Norm::L1) {
        out.value = std::fabs(diff);
        dvalue_dyhat = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
    } else {
        out.value = diff * diff;
        dvalue_dyhat = 2.0 * diff;
    }

    // dyhat/dz_k = sum_q row_qk * p_q * (q+1 - yhat), via the softmax Jacobian.
    out.grad.assign(z.size(), 0.0);
    for (int q = 0; q < code.levels; ++q) {
        const double coeff = dvalue_dyhat * p[q] * ((q + 1) - yhat);
        const auto& row = code.rows[q];
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (row[k]) out.grad[k] += coeff;
        }
    }
    return out;
}

}  // namespace bel
