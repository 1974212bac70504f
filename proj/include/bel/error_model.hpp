#ifndef BEL_ERROR_MODEL_HPP
#define BEL_ERROR_MODEL_HPP

#include <vector>

#include "bel/codebook.hpp"

namespace bel {

// Per-classifier misclassification probability modeled as an r-scaled
// Gaussian mixture of width sigma with one component per bit transition.
struct ClassifierErrorModel {
    std::vector<std::vector<double>> centers;  // centers[k]: classifier k's transition midpoints
    double r = 0.0;
    double sigma = 1.0;
    int n_labels = 0;  // labels live on {1..n_labels}

    int classifiers() const { return static_cast<int>(centers.size()); }
};

// One component at q + 0.5 for every adjacent level pair (q, q+1) whose bit
// differs in the given code.
ClassifierErrorModel model_from_code(const CodeMatrix& code, double r, double sigma);

// e_k(y) = sum over components of r * phi((y - mu)/sigma) / sigma.
// Throws invalid-model when the computed value exceeds 1.
double error_prob(const ClassifierErrorModel& m, int classifier, double y);

// Evaluates every classifier's mixture at each of its component centers,
// where the density peaks. Throws invalid-model if any value exceeds 1.
// Integer-label queries can stay below 1 while the peaks do not, so callers
// that accept a model from user input should run this first.
void check_model_peaks(const ClassifierErrorModel& m);

}  // namespace bel

#endif
