#include "bel/error_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bel {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double gaussian_density(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double mixture_value(const ClassifierErrorModel& m, int classifier, double y) {
    double total = 0.0;
    for (double mu : m.centers[classifier]) {
        total += m.r * gaussian_density((y - mu) / m.sigma) / m.sigma;
    }
    return total;
}

}  // namespace

ClassifierErrorModel model_from_code(const CodeMatrix& code, double r, double sigma) {
    if (!(r >= 0.0)) throw std::invalid_argument("invalid-r: " + std::to_string(r));
    if (!(sigma > 0.0)) throw std::invalid_argument("invalid-sigma: " + std::to_string(sigma));

    ClassifierErrorModel m;
    m.r = r;
    m.sigma = sigma;
    m.n_labels = code.levels;
    m.centers.assign(code.bits, {});
    for (int q = 1; q < code.levels; ++q) {
        const auto& lo = code.row(q);
        const auto& hi = code.row(q + 1);
        for (int k = 0; k < code.bits; ++k) {
            if (lo[k] != hi[k]) m.centers[k].push_back(q + 0.5);
        }
    }
    return m;
}

double error_prob(const ClassifierErrorModel& m, int classifier, double y) {
    if (classifier < 0 || classifier >= m.classifiers()) {
        throw std::out_of_range("classifier index " + std::to_string(classifier));
    }
    const double e = mixture_value(m, classifier, y);
    if (e > 1.0) {
        throw std::runtime_error("invalid-model: error probability " + std::to_string(e) +
                                 " exceeds 1 at y=" + std::to_string(y));
    }
    return e;
}

void check_model_peaks(const ClassifierErrorModel& m) {
    for (int k = 0; k < m.classifiers(); ++k) {
        for (double mu : m.centers[k]) {
            const double e = mixture_value(m, k, mu);
            if (e > 1.0) {
                throw std::runtime_error("invalid-model: error probability " +
                                         std::to_string(e) + " exceeds 1 at classifier " +
                                         std::to_string(k + 1) + " center " +
                                         std::to_string(mu));
            }
        }
    }
}

}  // namespace bel
