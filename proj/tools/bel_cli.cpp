#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bel/bounds.hpp"
#include "bel/codebook.hpp"
#include "bel/error_model.hpp"
#include "bel/mc_sim.hpp"
#include "bel/toytrain.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

// Shortest round-trip decimal form, shared by the CSV and JSON writers so
// the same double always prints the same way.
std::string fmt(double v) { return ordered_json(v).dump(); }

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

// Resolved-configuration echo: stderr normally, stdout when the data itself
// was redirected to a file.
void echo_line(const std::string& out_path, const std::string& line) {
    (out_path.empty() ? std::cerr : std::cout) << line << "\n";
}

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

// Parses `start:stop:count` with inclusive endpoints.
GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' ||
        !in.eof()) {
        throw std::invalid_argument("expected grid as start:stop:count, got '" + text + "'");
    }
    if (g.count < 1) throw std::invalid_argument("grid count must be at least 1");
    if (g.stop < g.start) throw std::invalid_argument("grid stop must be >= start");
    return g;
}

std::vector<double> expand_grid(const GridSpec& g) {
    std::vector<double> values(g.count);
    if (g.count == 1) {
        values[0] = g.start;
        return values;
    }
    const double step = (g.stop - g.start) / (g.count - 1);
    for (int i = 0; i < g.count; ++i) values[i] = g.start + i * step;
    values.back() = g.stop;
    return values;
}

std::string grid_text(const GridSpec& g) {
    return fmt(g.start) + ":" + fmt(g.stop) + ":" + std::to_string(g.count);
}

int run_codes(const std::string& kind_s, int levels, const std::string& out) {
    const bel::CodeMatrix code = bel::make_code(bel::kind_from_name(kind_s), levels);

    std::ostringstream csv;
    csv << bel::kind_name(code.kind) << "," << code.levels << "," << code.bits << "\n";
    for (const auto& row : code.rows) {
        for (int k = 0; k < code.bits; ++k) {
            if (k) csv << ",";
            csv << int(row[k]);
        }
        csv << "\n";
    }
    write_text(out, csv.str());

    const bel::CodeMetrics m = bel::metrics(code);
    int max_transitions = 0;
    for (int t : m.transitions_per_classifier) max_transitions = std::max(max_transitions, t);
    int min_adjacent = m.adjacent_hamming.empty() ? 0 : m.adjacent_hamming.front();
    for (int h : m.adjacent_hamming) min_adjacent = std::min(min_adjacent, h);
    echo_line(out, "bits=" + std::to_string(code.bits) +
                       " max_transitions=" + std::to_string(max_transitions) +
                       " min_adjacent_hamming=" + std::to_string(min_adjacent));
    return 0;
}

bel::CodeMatrix convention_code(bel::CodeKind kind, int N) {
    if (kind != bel::CodeKind::Unary && kind != bel::CodeKind::Johnson) {
        throw std::invalid_argument("bounds exist only for unary and johnson codes");
    }
    return bel::make_code(kind, N - 1);
}

int run_bound(const std::string& kind_s, int N, double r, double sigma,
              const std::string& out) {
    const bel::CodeKind kind = bel::kind_from_name(kind_s);
    const bel::CodeMatrix code = convention_code(kind, N);
    const bel::ClassifierErrorModel model = bel::model_from_code(code, r, sigma);
    bel::check_model_peaks(model);

    const bel::BoundReport rep = kind == bel::CodeKind::Unary
                                     ? bel::bound_unary(model, N)
                                     : bel::expected_err_johnson(model, N);
    ordered_json j;
    j["kind"] = bel::kind_name(rep.kind);
    j["N"] = rep.N;
    j["r"] = r;
    j["sigma"] = sigma;
    j["per_label"] = rep.per_label;
    j["aggregate"] = rep.aggregate;
    write_text(out, j.dump(2) + "\n");
    return 0;
}

int run_sweep(int N, const GridSpec& r_grid, const GridSpec& sigma_grid,
              const std::string& out) {
    const bel::SweepGrid grid =
        bel::compare_sweep(N, expand_grid(r_grid), expand_grid(sigma_grid));

    std::ostringstream csv;
    csv << "r,sigma,pct_increase,status\n";
    for (std::size_t i = 0; i < grid.r_values.size(); ++i) {
        for (std::size_t j = 0; j < grid.sigma_values.size(); ++j) {
            csv << fmt(grid.r_values[i]) << "," << fmt(grid.sigma_values[j]) << ",";
            if (grid.status[i][j] == bel::CellStatus::Ok) {
                csv << fmt(grid.pct_increase[i][j]);
            }
            csv << "," << bel::cell_status_name(grid.status[i][j]) << "\n";
        }
    }
    write_text(out, csv.str());
    echo_line(out, "sweep N=" + std::to_string(N) + " r=" + grid_text(r_grid) +
                       " sigma=" + grid_text(sigma_grid));
    return 0;
}

int run_simulate(const std::string& kind_s, const std::string& decoder_s, int levels,
                 double r, double sigma, std::uint64_t samples, std::uint64_t seed,
                 int streams, const std::string& out) {
    const bel::CodeMatrix code = bel::make_code(bel::kind_from_name(kind_s), levels);
    const bel::ClassifierErrorModel model = bel::model_from_code(code, r, sigma);
    const bel::SimulationReport rep = bel::simulate(
        code, bel::decoder_from_name(decoder_s), model, samples, seed, streams);

    ordered_json j;
    j["kind"] = bel::kind_name(rep.kind);
    j["decoder"] = bel::decoder_name(rep.decoder);
    j["levels"] = rep.levels;
    j["r"] = r;
    j["sigma"] = sigma;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["streams"] = rep.streams;
    j["rng"] = rep.rng;
    j["mean_abs_error"] = rep.mean_abs_error;
    j["std_error"] = rep.std_error;
    write_text(out, j.dump(2) + "\n");
    return 0;
}

int run_train(const bel::TrainConfig& config, const std::string& out,
              const std::string& trace_csv) {
    const bel::TrainReport rep = bel::train(config);

    ordered_json cfg;
    cfg["task"] = bel::task_name(config.task.id);
    cfg["noise"] = config.task.noise;
    cfg["input_dim"] = config.task.input_dim;
    cfg["a"] = config.task.a;
    cfg["b"] = config.task.b;
    cfg["levels"] = config.levels;
    cfg["kind"] = bel::kind_name(config.kind);
    cfg["loss"] = bel::loss_name(config.loss);
    cfg["decoder"] = bel::decoder_name(config.decoder);
    cfg["theta"] = config.theta;
    cfg["hidden"] = config.hidden;
    cfg["lr"] = config.lr;
    cfg["epochs"] = config.epochs;
    cfg["batch"] = config.batch;
    cfg["n_train"] = config.n_train;
    cfg["n_test"] = config.n_test;
    cfg["seed"] = config.seed;
    cfg["runs"] = config.runs;
    cfg["output_dims"] = config.output_dims;

    ordered_json j;
    j["config"] = cfg;
    j["per_seed"] = ordered_json::array();
    for (const auto& s : rep.per_seed) {
        ordered_json e;
        e["seed"] = s.seed;
        e["failed"] = s.failed;
        e["bel_train_mae"] = s.bel_train_mae;
        e["bel_test_mae"] = s.bel_test_mae;
        e["direct_train_mae"] = s.direct_train_mae;
        e["direct_test_mae"] = s.direct_test_mae;
        e["bel_trace"] = s.bel_trace;
        e["direct_trace"] = s.direct_trace;
        j["per_seed"].push_back(std::move(e));
    }
    j["bel_mean_test_mae"] = rep.bel_mean_test_mae;
    j["direct_mean_test_mae"] = rep.direct_mean_test_mae;
    write_text(out, j.dump(2) + "\n");

    if (!trace_csv.empty()) {
        std::ostringstream csv;
        csv << "epoch,loss\n";
        const auto& trace = rep.per_seed.front().bel_trace;
        for (std::size_t epoch = 0; epoch < trace.size(); ++epoch) {
            csv << (epoch + 1) << "," << fmt(trace[epoch]) << "\n";
        }
        write_text(trace_csv, csv.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary-encoded-label regression toolkit"};
    app.require_subcommand(1);

    std::string out;
    const std::string kind_choices = "unary, johnson, b1jdj, b2jdj, hexj, hadamard";

    // codes
    auto* codes = app.add_subcommand("codes", "Emit a code matrix as CSV");
    std::string codes_kind = "unary";
    int codes_levels = 0;
    codes->add_option("--kind", codes_kind, "Code kind (" + kind_choices + ")")->required();
    codes->add_option("--levels", codes_levels, "Number of quantization levels")->required();
    codes->add_option("--out", out, "Write CSV to a file instead of stdout");

    // bound
    auto* bound = app.add_subcommand("bound", "Evaluate the expected-error value as JSON");
    std::string bound_kind = "unary";
    int bound_N = 16;
    double bound_r = 0.1;
    double bound_sigma = 1.0;
    bound->add_option("--kind", bound_kind, "unary or johnson")->required();
    bound->add_option("--N", bound_N, "Convention size N; labels run over 1..N-1")
        ->required();
    bound->add_option("--r", bound_r, "Error-model scale r")->required();
    bound->add_option("--sigma", bound_sigma, "Error-model width sigma")->required();
    bound->add_option("--out", out, "Write JSON to a file instead of stdout");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "Compare unary and johnson expected-error values over an (r, sigma) grid");
    int sweep_N = 16;
    std::string sweep_r = "0.05:3:25";
    std::string sweep_sigma = "0.25:4:16";
    sweep->add_option("--N", sweep_N, "Convention size N (even)");
    sweep->add_option("--r-grid", sweep_r, "r grid as start:stop:count, endpoints inclusive");
    sweep->add_option("--sigma-grid", sweep_sigma,
                      "sigma grid as start:stop:count, endpoints inclusive");
    sweep->add_option("--out", out, "Write CSV to a file instead of stdout");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo decode error as JSON");
    std::string sim_kind = "unary";
    std::string sim_decoder = "custom";
    int sim_levels = 15;
    double sim_r = 0.1;
    double sim_sigma = 1.0;
    std::uint64_t sim_samples = 100000;
    std::uint64_t sim_seed = 1;
    int sim_streams = 1;
    simulate->add_option("--kind", sim_kind, "Code kind (" + kind_choices + ")")->required();
    simulate->add_option("--decoder", sim_decoder, "custom, gen, or gen-ex");
    simulate->add_option("--levels", sim_levels, "Number of quantization levels")->required();
    simulate->add_option("--r", sim_r, "Error-model scale r")->required();
    simulate->add_option("--sigma", sim_sigma, "Error-model width sigma")->required();
    simulate->add_option("--samples", sim_samples, "Sample count");
    simulate->add_option("--seed", sim_seed, "Base RNG seed")->envname("BEL_SEED");
    simulate->add_option("--streams", sim_streams,
                         "Independent substream count; part of the configuration");
    simulate->add_option("--out", out, "Write JSON to a file instead of stdout");

    // train
    auto* train = app.add_subcommand("train", "Toy end-to-end comparison as JSON");
    bel::TrainConfig tc;
    std::string train_task = bel::task_name(tc.task.id);
    std::string train_kind = bel::kind_name(tc.kind);
    std::string train_loss = bel::loss_name(tc.loss);
    std::string train_decoder = bel::decoder_name(tc.decoder);
    std::string trace_csv;
    train->add_option("--task", train_task, "identity, sinusoid, pwlinear, or steps");
    train->add_option("--noise", tc.task.noise, "Label noise std as a fraction of b-a");
    train->add_option("--input-dim", tc.task.input_dim, "Input dimension");
    train->add_option("--a", tc.task.a, "Label range lower bound");
    train->add_option("--b", tc.task.b, "Label range upper bound");
    train->add_option("--levels", tc.levels, "Quantization levels");
    train->add_option("--kind", train_kind, "Code kind (" + kind_choices + ")");
    train->add_option("--loss", train_loss, "bce, ce, l1, or l2");
    train->add_option("--decoder", train_decoder, "custom, gen, or gen-ex");
    train->add_option("--theta", tc.theta, "Bottleneck width");
    train->add_option("--hidden", tc.hidden, "Hidden layer widths")->delimiter(',');
    train->add_option("--lr", tc.lr, "Learning rate");
    train->add_option("--epochs", tc.epochs, "Training epochs");
    train->add_option("--batch", tc.batch, "Minibatch size");
    train->add_option("--n-train", tc.n_train, "Training set size");
    train->add_option("--n-test", tc.n_test, "Test set size");
    train->add_option("--seed", tc.seed, "Base seed; run i uses seed+i")->envname("BEL_SEED");
    train->add_option("--runs", tc.runs, "Number of seeds");
    train->add_option("--trace-csv", trace_csv,
                      "Also write the first seed's epoch,loss trace to a CSV file");
    train->add_option("--out", out, "Write JSON to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*codes) return run_codes(codes_kind, codes_levels, out);
        if (*bound) return run_bound(bound_kind, bound_N, bound_r, bound_sigma, out);
        if (*sweep) {
            return run_sweep(sweep_N, parse_grid(sweep_r), parse_grid(sweep_sigma), out);
        }
        if (*simulate) {
            return run_simulate(sim_kind, sim_decoder, sim_levels, sim_r, sim_sigma,
                                sim_samples, sim_seed, sim_streams, out);
        }
        if (*train) {
            tc.task.id = bel::task_from_name(train_task);
            tc.kind = bel::kind_from_name(train_kind);
            tc.loss = bel::loss_from_name(train_loss);
            tc.decoder = bel::decoder_from_name(train_decoder);
            return run_train(tc, out, trace_csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
