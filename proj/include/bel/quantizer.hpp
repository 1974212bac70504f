#ifndef BEL_QUANTIZER_HPP
#define BEL_QUANTIZER_HPP

namespace bel {

struct QuantizationSpec {
    double a;
    double b;
    int levels;

    QuantizationSpec(double lo, double hi, int n);
};

// Maps y in [a,b] to an integer level in {1..N}, round-half-up.
int quantize(double y, const QuantizationSpec& spec);

// Inverse map; accepts non-integer level coordinates so expectation-based
// decoder outputs convert back to label units.
double dequantize(double level_coord, const QuantizationSpec& spec);

// Continuous version of quantize, without rounding. Used as the regression
// target for losses that operate in level coordinates.
double level_coordinate(double y, const QuantizationSpec& spec);

}  // namespace bel

#endif
