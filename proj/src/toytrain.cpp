#include "bel/toytrain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bel/decoder.hpp"

namespace bel {

std::string task_name(TaskId t) {
    switch (t) {
        case TaskId::Identity: return "identity";
        case TaskId::Sinusoid: return "sinusoid";
        case TaskId::PwLinear: return "pwlinear";
        case TaskId::Steps: return "steps";
    }
    throw std::invalid_argument("unknown task");
}

TaskId task_from_name(const std::string& name) {
    if (name == "identity") return TaskId::Identity;
    if (name == "sinusoid") return TaskId::Sinusoid;
    if (name == "pwlinear") return TaskId::PwLinear;
    if (name == "steps") return TaskId::Steps;
    throw std::invalid_argument("invalid-task: " + name);
}

std::string loss_name(LossKind l) {
    switch (l) {
        case LossKind::BCE: return "bce";
        case LossKind::CE: return "ce";
        case LossKind::L1: return "l1";
        case LossKind::L2: return "l2";
    }
    throw std::invalid_argument("unknown loss");
}

LossKind loss_from_name(const std::string& name) {
    if (name == "bce") return LossKind::BCE;
    if (name == "ce") return LossKind::CE;
    if (name == "l1") return LossKind::L1;
    if (name == "l2") return LossKind::L2;
    throw std::invalid_argument("invalid-loss: " + name);
}

double task_value(const TaskSpec& task, double t) {
    double v = 0.0;
    switch (task.id) {
        case TaskId::Identity:
            v = t;
            break;
        case TaskId::Sinusoid: {
            // Quarter-period phase shift so the curve starts at the range
            // minimum, peaks at t = 0.4, and still covers [0,1] fully.
            constexpr double two_pi = 6.283185307179586476925286766559;
            v = 0.5 * (1.0 + std::sin(two_pi * (1.25 * t - 0.25)));
            break;
        }
        case TaskId::PwLinear:
            if (t < 1.0 / 3.0) {
                v = 3.0 * t;
            } else if (t < 2.0 / 3.0) {
                v = 2.0 - 3.0 * t;
            } else {
                v = 3.0 * t - 2.0;
            }
            break;
        case TaskId::Steps: {
            int k = static_cast<int>(std::floor(8.0 * t));
            if (k > 7) k = 7;
            if (k < 0) k = 0;
            v = k / 7.0;
            break;
        }
    }
    return task.a + (task.b - task.a) * v;
}

DataSplit make_dataset(const TaskSpec& task, int n_train, int n_test,
                       std::uint64_t seed) {
    if (n_train < 0 || n_test < 0) throw std::invalid_argument("negative dataset size");
    if (task.input_dim < 1) throw std::invalid_argument("input_dim must be positive");
    if (!(task.a < task.b)) throw std::invalid_argument("task range requires a < b");

    Rng rng(seed);
    auto fill = [&](Dataset& d, int n) {
        d.x.resize(n);
        d.y.resize(n);
        for (int i = 0; i < n; ++i) {
            d.x[i].resize(task.input_dim);
            for (int j = 0; j < task.input_dim; ++j) d.x[i][j] = rng.uniform();
            double y = task_value(task, d.x[i][0]);
            if (task.noise > 0.0) {
                y += task.noise * (task.b - task.a) * rng.gaussian();
            }
            d.y[i] = std::clamp(y, task.a, task.b);
        }
    };
    DataSplit split;
    fill(split.train, n_train);
    fill(split.test, n_test);
    return split;
}

Mlp make_mlp(int input_dim, const std::vector<int>& hidden, int theta,
             int output_dim, Rng& rng) {
    if (input_dim < 1 || theta < 1 || output_dim < 1) {
        throw std::invalid_argument("mlp dimensions must be positive");
    }
    std::vector<int> dims;
    dims.push_back(input_dim);
    for (int h : hidden) {
        if (h < 1) throw std::invalid_argument("hidden widths must be positive");
        dims.push_back(h);
    }
    dims.push_back(theta);
    dims.push_back(output_dim);

    Mlp net;
    net.relu_layers = static_cast<int>(hidden.size());
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        Dense d;
        const int fan_in = dims[l];
        const int fan_out = dims[l + 1];
        const double limit = std::sqrt(6.0 / (fan_in + fan_out));
        d.w.assign(fan_out, std::vector<double>(fan_in));
        d.b.assign(fan_out, 0.0);
        for (int o = 0; o < fan_out; ++o) {
            for (int i = 0; i < fan_in; ++i) d.w[o][i] = rng.uniform(-limit, limit);
        }
        net.layers.push_back(std::move(d));
    }
    return net;
}

namespace {

void affine(const Dense& d, const std::vector<double>& in, std::vector<double>& out) {
    out.assign(d.b.begin(), d.b.end());
    for (std::size_t o = 0; o < d.w.size(); ++o) {
        double acc = out[o];
        const auto& row = d.w[o];
        for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * in[i];
        out[o] = acc;
    }
}

// Forward pass keeping every post-activation for backprop. acts[0] is the
// input; acts[l+1] the output of layer l after any rectification.
std::vector<std::vector<double>> forward_trace(const Mlp& net,
                                               const std::vector<double>& x) {
    std::vector<std::vector<double>> acts;
    acts.reserve(net.layers.size() + 1);
    acts.push_back(x);
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        std::vector<double> out;
        affine(net.layers[l], acts.back(), out);
        if (static_cast<int>(l) < net.relu_layers) {
            for (double& v : out) v = std::max(0.0, v);
        }
        acts.push_back(std::move(out));
    }
    return acts;
}

// Loss and, when grad is non-null, dloss/dz at the network output.
double output_loss(const std::vector<double>& z, double y, const BelHead* head,
                   std::vector<double>* grad) {
    if (head == nullptr) {
        const double diff = z[0] - y;
        if (grad) {
            grad->assign(z.size(), 0.0);
            (*grad)[0] = 2.0 * diff;
        }
        return diff * diff;
    }
    LossResult res;
    switch (head->loss) {
        case LossKind::BCE:
            res = bce_loss(z, head->code.row(quantize(y, head->spec)));
            break;
        case LossKind::CE:
            res = ce_loss(z, head->code, quantize(y, head->spec));
            break;
        case LossKind::L1:
            res = regression_loss(z, head->code, level_coordinate(y, head->spec),
                                  Norm::L1);
            break;
        case LossKind::L2:
            res = regression_loss(z, head->code, level_coordinate(y, head->spec),
                                  Norm::L2);
            break;
    }
    if (grad) *grad = std::move(res.grad);
    return res.value;
}

void zero_like(const Mlp& net, MlpGrads& grads) {
    grads.resize(net.layers.size());
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        grads[l].w.assign(net.layers[l].w.size(),
                          std::vector<double>(net.layers[l].w.front().size(), 0.0));
        grads[l].b.assign(net.layers[l].b.size(), 0.0);
    }
}

}  // namespace

std::vector<double> mlp_forward(const Mlp& net, const std::vector<double>& x) {
    std::vector<double> cur = x;
    std::vector<double> next;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        affine(net.layers[l], cur, next);
        if (static_cast<int>(l) < net.relu_layers) {
            for (double& v : next) v = std::max(0.0, v);
        }
        cur.swap(next);
    }
    return cur;
}

double forward_backward(const Mlp& net, const std::vector<std::vector<double>>& xs,
                        const std::vector<double>& ys, const BelHead* head,
                        MlpGrads& grads) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("batch inputs and labels must match and be non-empty");
    }
    zero_like(net, grads);

    const double inv_batch = 1.0 / static_cast<double>(xs.size());
    double total = 0.0;
    std::vector<double> delta;
    std::vector<double> delta_prev;
    for (std::size_t s = 0; s < xs.size(); ++s) {
        const auto acts = forward_trace(net, xs[s]);
        total += output_loss(acts.back(), ys[s], head, &delta);

        for (int l = static_cast<int>(net.layers.size()) - 1; l >= 0; --l) {
            const auto& in = acts[l];
            auto& gl = grads[l];
            for (std::size_t o = 0; o < delta.size(); ++o) {
                const double d = delta[o] * inv_batch;
                gl.b[o] += d;
                auto& grow = gl.w[o];
                for (std::size_t i = 0; i < in.size(); ++i) grow[i] += d * in[i];
            }
            if (l == 0) break;
            const auto& w = net.layers[l].w;
            delta_prev.assign(in.size(), 0.0);
            for (std::size_t o = 0; o < delta.size(); ++o) {
                const double d = delta[o];
                for (std::size_t i = 0; i < in.size(); ++i) delta_prev[i] += d * w[o][i];
            }
            // acts holds post-activation values, so a rectified unit is
            // inactive exactly where its stored activation is zero.
            if (l - 1 < net.relu_layers) {
                for (std::size_t i = 0; i < in.size(); ++i) {
                    if (in[i] <= 0.0) delta_prev[i] = 0.0;
                }
            }
            delta.swap(delta_prev);
        }
    }
    return total * inv_batch;
}

double batch_loss(const Mlp& net, const std::vector<std::vector<double>>& xs,
                  const std::vector<double>& ys, const BelHead* head) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("batch inputs and labels must match and be non-empty");
    }
    double total = 0.0;
    for (std::size_t s = 0; s < xs.size(); ++s) {
        total += output_loss(mlp_forward(net, xs[s]), ys[s], head, nullptr);
    }
    return total / static_cast<double>(xs.size());
}

double evaluate_mae(const Mlp& net, const Dataset& data, const BelHead* head) {
    if (data.size() == 0) throw std::invalid_argument("empty dataset");
    double total = 0.0;
    for (std::size_t s = 0; s < data.size(); ++s) {
        const auto z = mlp_forward(net, data.x[s]);
        double yhat;
        if (head == nullptr) {
            yhat = z[0];
        } else {
            double level;
            switch (head->decoder) {
                case DecoderKind::Custom: {
                    const auto bits = threshold(z);
                    int dec;
                    if (head->code.kind == CodeKind::Unary) {
                        dec = decode_unary(bits);
                    } else if (head->code.kind == CodeKind::Johnson) {
                        dec = decode_johnson(bits);
                    } else {
                        throw std::invalid_argument(
                            "custom decoder supports only unary and johnson codes");
                    }
                    level = std::clamp(dec, 1, head->code.levels);
                    break;
                }
                case DecoderKind::GEN:
                    level = decode_gen(z, head->code);
                    break;
                case DecoderKind::GENEX:
                    level = decode_gen_ex(z, head->code);
                    break;
                default:
                    throw std::invalid_argument("unknown decoder kind");
            }
            yhat = dequantize(level, head->spec);
        }
        total += std::fabs(yhat - data.y[s]);
    }
    return total / static_cast<double>(data.size());
}

namespace {

void sgd_step(Mlp& net, const MlpGrads& grads, double lr) {
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        auto& layer = net.layers[l];
        for (std::size_t o = 0; o < layer.w.size(); ++o) {
            for (std::size_t i = 0; i < layer.w[o].size(); ++i) {
                layer.w[o][i] -= lr * grads[l].w[o][i];
            }
            layer.b[o] -= lr * grads[l].b[o];
        }
    }
}

void fisher_yates(std::vector<int>& order, Rng& rng) {
    for (std::size_t i = order.size(); i > 1; --i) {
        const std::size_t j = rng.uniform_index(i);
        std::swap(order[i - 1], order[j]);
    }
}

}  // namespace

TrainReport train(const TrainConfig& config) {
    if (config.output_dims != 1) {
        throw std::invalid_argument("train handles a single output dimension");
    }
    if (config.runs < 1) throw std::invalid_argument("runs must be positive");
    if (config.batch < 1) throw std::invalid_argument("batch must be positive");
    if (config.epochs < 0) throw std::invalid_argument("epochs must be non-negative");
    if (config.n_train < 1 || config.n_test < 1) {
        throw std::invalid_argument("dataset sizes must be positive");
    }

    const CodeMatrix code = make_code(config.kind, config.levels);
    BelHead head;
    head.code = code;
    head.loss = config.loss;
    head.decoder = config.decoder;
    head.spec = QuantizationSpec(config.task.a, config.task.b, config.levels);

    TrainReport report;
    report.config = config;

    for (int run = 0; run < config.runs; ++run) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(run);
        SeedResult result;
        result.seed = seed;

        const auto data = make_dataset(config.task, config.n_train, config.n_test,
                                       derive_stream_seed(seed, 0));
        Rng bel_init(derive_stream_seed(seed, 1));
        Rng direct_init(derive_stream_seed(seed, 2));
        Rng shuffle(derive_stream_seed(seed, 3));

        Mlp bel_net = make_mlp(config.task.input_dim, config.hidden, config.theta,
                               code.bits, bel_init);
        Mlp direct_net = make_mlp(config.task.input_dim, config.hidden, config.theta,
                                  1, direct_init);

        std::vector<int> order(config.n_train);
        std::iota(order.begin(), order.end(), 0);
        MlpGrads grads;
        std::vector<std::vector<double>> bx;
        std::vector<double> by;

        for (int epoch = 0; epoch < config.epochs && !result.failed; ++epoch) {
            // Both nets see the same minibatch sequence; the permutation is
            // drawn once per epoch from the shared shuffle stream.
            fisher_yates(order, shuffle);
            double bel_epoch_loss = 0.0;
            double direct_epoch_loss = 0.0;
            int batches = 0;
            for (int start = 0; start < config.n_train; start += config.batch) {
                const int stop = std::min(config.n_train, start + config.batch);
                bx.clear();
                by.clear();
                for (int i = start; i < stop; ++i) {
                    bx.push_back(data.train.x[order[i]]);
                    by.push_back(data.train.y[order[i]]);
                }
                const double bel_loss = forward_backward(bel_net, bx, by, &head, grads);
                if (!std::isfinite(bel_loss)) {
                    result.failed = true;
                    break;
                }
                sgd_step(bel_net, grads, config.lr);

                const double direct_loss =
                    forward_backward(direct_net, bx, by, nullptr, grads);
                if (!std::isfinite(direct_loss)) {
                    result.failed = true;
                    break;
                }
                sgd_step(direct_net, grads, config.lr);

                bel_epoch_loss += bel_loss;
                direct_epoch_loss += direct_loss;
                ++batches;
            }
            if (!result.failed) {
                result.bel_trace.push_back(bel_epoch_loss / batches);
                result.direct_trace.push_back(direct_epoch_loss / batches);
            }
        }

        if (!result.failed) {
            result.bel_train_mae = evaluate_mae(bel_net, data.train, &head);
            result.bel_test_mae = evaluate_mae(bel_net, data.test, &head);
            result.direct_train_mae = evaluate_mae(direct_net, data.train, nullptr);
            result.direct_test_mae = evaluate_mae(direct_net, data.test, nullptr);
        }
        report.per_seed.push_back(std::move(result));
    }

    int ok = 0;
    for (const auto& r : report.per_seed) {
        if (r.failed) continue;
        report.bel_mean_test_mae += r.bel_test_mae;
        report.direct_mean_test_mae += r.direct_test_mae;
        ++ok;
    }
    if (ok > 0) {
        report.bel_mean_test_mae /= ok;
        report.direct_mean_test_mae /= ok;
    } else {
        report.bel_mean_test_mae = std::numeric_limits<double>::quiet_NaN();
        report.direct_mean_test_mae = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

}  // namespace bel
