#include "bel/quantizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bel {

QuantizationSpec::QuantizationSpec(double lo, double hi, int n) : a(lo), b(hi), levels(n) {
    if (!(lo < hi)) throw std::invalid_argument("quantization range requires a < b");
    if (n < 2) throw std::invalid_argument("quantization needs at least 2 levels");
}

double level_coordinate(double y, const QuantizationSpec& spec) {
    if (y < spec.a || y > spec.b) {
        throw std::out_of_range("label " + std::to_string(y) + " outside [" +
                                std::to_string(spec.a) + ", " + std::to_string(spec.b) + "]");
    }
    return (y - spec.a) * (spec.levels - 1) / (spec.b - spec.a) + 1.0;
}

int quantize(double y, const QuantizationSpec& spec) {
    const double coord = level_coordinate(y, spec);
    // Round half up; floor(x + 0.5) keeps the q(0) = 101 convention stable.
    int level = static_cast<int>(std::floor(coord + 0.5));
    if (level < 1) level = 1;
    if (level > spec.levels) level = spec.levels;
    return level;
}

double dequantize(double level_coord, const QuantizationSpec& spec) {
    if (level_coord < 1.0 || level_coord > static_cast<double>(spec.levels)) {
        throw std::out_of_range("level coordinate " + std::to_string(level_coord) +
                                " outside [1, " + std::to_string(spec.levels) + "]");
    }
    return spec.a + (level_coord - 1.0) * (spec.b - spec.a) / (spec.levels - 1);
}

}  // namespace bel
