#ifndef BEL_TOYTRAIN_HPP
#define BEL_TOYTRAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bel/codebook.hpp"
#include "bel/losses.hpp"
#include "bel/mc_sim.hpp"
#include "bel/quantizer.hpp"
#include "bel/rng.hpp"

namespace bel {

enum class TaskId { Identity, Sinusoid, PwLinear, Steps };

std::string task_name(TaskId t);
TaskId task_from_name(const std::string& name);

enum class LossKind { BCE, CE, L1, L2 };

std::string loss_name(LossKind l);
LossKind loss_from_name(const std::string& name);

// Synthetic scalar regression task. Inputs are uniform in [0,1]^input_dim,
// the first coordinate drives the target, and gaussian noise with standard
// deviation noise*(b-a) is added before clamping to [a,b].
struct TaskSpec {
    TaskId id = TaskId::Sinusoid;
    double noise = 0.05;
    int input_dim = 2;
    double a = 0.0;
    double b = 1.0;
};

struct Dataset {
    std::vector<std::vector<double>> x;
    std::vector<double> y;

    std::size_t size() const { return y.size(); }
};

struct DataSplit {
    Dataset train;
    Dataset test;
};

DataSplit make_dataset(const TaskSpec& task, int n_train, int n_test,
                       std::uint64_t seed);

// Noise-free target value for the task at first coordinate t in [0,1].
double task_value(const TaskSpec& task, double t);

struct Dense {
    std::vector<std::vector<double>> w;  // w[out][in]
    std::vector<double> b;
};

// Dense network: rectified hidden layers, then a linear bottleneck of width
// theta, then a linear output layer. The output width is P*M for a BEL head
// and P for the direct baseline.
struct Mlp {
    std::vector<Dense> layers;
    int relu_layers = 0;  // first relu_layers layers are rectified

    int input_dim() const { return static_cast<int>(layers.front().w.front().size()); }
    int output_dim() const { return static_cast<int>(layers.back().b.size()); }
};

Mlp make_mlp(int input_dim, const std::vector<int>& hidden, int theta,
             int output_dim, Rng& rng);

std::vector<double> mlp_forward(const Mlp& net, const std::vector<double>& x);

// Gradients with the same shapes as the network's parameters.
using MlpGrads = std::vector<Dense>;

// Everything the BEL head needs to turn logits into losses and labels.
struct BelHead {
    CodeMatrix code;
    LossKind loss = LossKind::BCE;
    DecoderKind decoder = DecoderKind::GENEX;
    QuantizationSpec spec{0.0, 1.0, 2};
};

// Mean loss over the batch plus parameter gradients by reverse accumulation.
// For the BEL head the per-sample loss is the configured loss against the
// quantized (BCE/CE) or continuous (L1/L2) level target; pass head = nullptr
// for the direct baseline, which trains with L2 on the raw label.
double forward_backward(const Mlp& net, const std::vector<std::vector<double>>& xs,
                        const std::vector<double>& ys, const BelHead* head,
                        MlpGrads& grads);

// Loss-only evaluation with identical semantics, for finite-difference checks.
double batch_loss(const Mlp& net, const std::vector<std::vector<double>>& xs,
                  const std::vector<double>& ys, const BelHead* head);

// Mean absolute error in label units (BEL: decode then dequantize).
double evaluate_mae(const Mlp& net, const Dataset& data, const BelHead* head);

struct TrainConfig {
    TaskSpec task;
    int levels = 64;
    CodeKind kind = CodeKind::Unary;
    LossKind loss = LossKind::BCE;
    DecoderKind decoder = DecoderKind::GENEX;
    int theta = 10;
    std::vector<int> hidden = {32};
    double lr = 0.3;
    int epochs = 600;
    int batch = 32;
    int n_train = 1024;
    int n_test = 1024;
    std::uint64_t seed = 1;
    int runs = 5;
    int output_dims = 1;  // P; the output layer holds P*M logits
};

struct SeedResult {
    std::uint64_t seed = 0;
    bool failed = false;  // non-finite loss encountered
    double bel_train_mae = 0.0;
    double bel_test_mae = 0.0;
    double direct_train_mae = 0.0;
    double direct_test_mae = 0.0;
    std::vector<double> bel_trace;
    std::vector<double> direct_trace;
};

struct TrainReport {
    TrainConfig config;
    std::vector<SeedResult> per_seed;
    double bel_mean_test_mae = 0.0;
    double direct_mean_test_mae = 0.0;
};

// Trains the BEL net and the direct baseline on identical data for seeds
// seed..seed+runs-1 with plain mini-batch gradient descent.
TrainReport train(const TrainConfig& config);

}  // namespace bel

#endif
