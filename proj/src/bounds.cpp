#include "bel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bel {

namespace {

// e_k(n) for k = 1..M at a fixed label, as a plain vector.
std::vector<double> error_vector(const ClassifierErrorModel& m, double y) {
    std::vector<double> e(m.classifiers());
    for (int k = 0; k < m.classifiers(); ++k) e[k] = error_prob(m, k, y);
    return e;
}

void require_convention(const ClassifierErrorModel& m, int N, int expected_m,
                        const char* which) {
    if (N < 3) throw std::invalid_argument("invalid-N: " + std::to_string(N));
    if (m.classifiers() != expected_m) {
        throw std::invalid_argument(std::string(which) + " expects " +
                                    std::to_string(expected_m) + " classifiers for N=" +
                                    std::to_string(N) + ", model has " +
                                    std::to_string(m.classifiers()));
    }
}

double tf_from_evec(const std::vector<double>& e, int n, int M) {
    double first = 0.0;
    for (int k = 1; k <= M - n; ++k) {
        double p = 1.0;
        for (int j = 1; j < k; ++j) p *= 1.0 - e[j - 1];
        first += (M - n + 1 - k) * e[k - 1] * p;
    }
    double second = 0.0;
    for (int k = M - n + 1; k <= M; ++k) {
        double p = 1.0;
        for (int j = M - n + 1; j <= k; ++j) p *= e[j - 1];
        second += p;
    }
    return first + second;
}

double tl_from_evec(const std::vector<double>& e, int n, int M) {
    double first = 0.0;
    for (int k = M - n + 1; k <= M; ++k) {
        double p = 1.0;
        for (int j = k; j <= M; ++j) p *= e[j - 1];
        first += p;
    }
    double all_ones = 1.0;
    for (int j = M - n + 1; j <= M; ++j) all_ones *= e[j - 1];
    double tail = 0.0;
    for (int k = 1; k <= M - n; ++k) {
        double p = 1.0;
        for (int j = k; j <= M - n; ++j) p *= 1.0 - e[j - 1];
        tail += p;
    }
    return first + all_ones * tail;
}

}  // namespace

BoundReport bound_unary(const ClassifierErrorModel& m, int N) {
    require_convention(m, N, N - 2, "bound_unary");
    BoundReport rep;
    rep.kind = CodeKind::Unary;
    rep.N = N;
    rep.per_label.resize(N - 1);
    for (int n = 1; n < N; ++n) {
        const auto e = error_vector(m, n);
        double total = 0.0;
        for (double v : e) total += v;
        rep.per_label[n - 1] = total;
        rep.aggregate += total;
    }
    rep.aggregate /= (N - 1);
    return rep;
}

double expected_tf(const ClassifierErrorModel& m, int n, int N) {
    const int M = N / 2;
    require_convention(m, N, M, "expected_tf");
    if (N % 2 != 0) throw std::invalid_argument("expected_tf requires even N");
    if (n < 1 || n > M) throw std::invalid_argument("expected_tf requires 1 <= n <= N/2");
    return tf_from_evec(error_vector(m, n), n, M);
}

double expected_tl(const ClassifierErrorModel& m, int n, int N) {
    const int M = N / 2;
    require_convention(m, N, M, "expected_tl");
    if (N % 2 != 0) throw std::invalid_argument("expected_tl requires even N");
    if (n < 1 || n > M) throw std::invalid_argument("expected_tl requires 1 <= n <= N/2");
    return tl_from_evec(error_vector(m, n), n, M);
}

BoundReport expected_err_johnson(const ClassifierErrorModel& m, int N) {
    const int M = N / 2;
    require_convention(m, N, M, "expected_err_johnson");
    if (N % 2 != 0) throw std::invalid_argument("expected_err_johnson requires even N");
    BoundReport rep;
    rep.kind = CodeKind::Johnson;
    rep.N = N;
    rep.per_label.resize(N - 1);
    for (int n = 1; n < N; ++n) {
        auto e = error_vector(m, n);
        int arg = n;
        if (n > M) {
            // The code is symmetric about N/2, so the upper half reuses the
            // lower-half expansion with the classifier order reversed.
            std::reverse(e.begin(), e.end());
            arg = N - n;
        }
        rep.per_label[n - 1] = tf_from_evec(e, arg, M) + tl_from_evec(e, arg, M);
        rep.aggregate += rep.per_label[n - 1];
    }
    rep.aggregate /= (N - 1);
    return rep;
}

SweepGrid compare_sweep(int N, const std::vector<double>& r_grid,
                        const std::vector<double>& sigma_grid) {
    if (N < 4 || N % 2 != 0) throw std::invalid_argument("invalid-N: " + std::to_string(N));
    if (r_grid.empty() || sigma_grid.empty()) {
        throw std::invalid_argument("empty sweep grid");
    }
    const CodeMatrix unary = gen_unary(N - 1);
    const CodeMatrix johnson = gen_johnson(N - 1);

    SweepGrid grid;
    grid.r_values = r_grid;
    grid.sigma_values = sigma_grid;
    grid.pct_increase.assign(r_grid.size(),
                             std::vector<double>(sigma_grid.size(), 0.0));
    grid.status.assign(r_grid.size(),
                       std::vector<CellStatus>(sigma_grid.size(), CellStatus::Ok));

    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        for (std::size_t j = 0; j < sigma_grid.size(); ++j) {
            const double r = r_grid[i];
            const double sigma = sigma_grid[j];
            if (r == 0.0) {
                grid.status[i][j] = CellStatus::Degenerate;
                continue;
            }
            try {
                const auto mu = model_from_code(unary, r, sigma);
                const auto mj = model_from_code(johnson, r, sigma);
                const double u_agg = bound_unary(mu, N).aggregate;
                const double j_agg = expected_err_johnson(mj, N).aggregate;
                grid.pct_increase[i][j] = 100.0 * (u_agg - j_agg) / j_agg;
            } catch (const std::runtime_error&) {
                grid.status[i][j] = CellStatus::InvalidProb;
            }
        }
    }
    return grid;
}

std::string cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Ok: return "ok";
        case CellStatus::InvalidProb: return "invalid_prob";
        case CellStatus::Degenerate: return "degenerate";
    }
    throw std::invalid_argument("unknown cell status");
}

}  // namespace bel
