#ifndef BEL_BOUNDS_HPP
#define BEL_BOUNDS_HPP

#include <string>
#include <vector>

#include "bel/error_model.hpp"

namespace bel {

// Expected-error reports use the derivation's convention: labels n in
// {1..N-1}, so a code with L levels pairs with N = L + 1. Unary needs N-2
// classifiers, Johnson N/2 with N even.
struct BoundReport {
    CodeKind kind;
    int N = 0;
    std::vector<double> per_label;  // index n-1 holds the value at label n
    double aggregate = 0.0;
};

enum class CellStatus { Ok, InvalidProb, Degenerate };

struct SweepGrid {
    std::vector<double> r_values;
    std::vector<double> sigma_values;
    std::vector<std::vector<double>> pct_increase;   // [r][sigma]; meaningful only where Ok
    std::vector<std::vector<CellStatus>> status;
};

// Sum of classifier error probabilities per label, averaged uniformly.
// A true upper bound on the unary decoder's expected absolute error.
BoundReport bound_unary(const ClassifierErrorModel& m, int N);

// Expected displacement of the first-one position for label n <= N/2.
double expected_tf(const ClassifierErrorModel& m, int n, int N);

// Expected displacement of the last-one position for label n <= N/2.
double expected_tl(const ClassifierErrorModel& m, int n, int N);

// Per-label expected_tf + expected_tl, mirrored onto the upper half of the
// label range (evaluate at N-n with the classifier order reversed).
BoundReport expected_err_johnson(const ClassifierErrorModel& m, int N);

// Formula comparison across an (r, sigma) grid at convention size N:
// pct = 100 * (unary aggregate - johnson aggregate) / johnson aggregate.
// Cells where any e_k(n) exceeds 1 are marked invalid; r = 0 is degenerate.
SweepGrid compare_sweep(int N, const std::vector<double>& r_grid,
                        const std::vector<double>& sigma_grid);

std::string cell_status_name(CellStatus s);

}  // namespace bel

#endif
