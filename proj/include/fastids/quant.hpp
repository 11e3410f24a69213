#pragma once

#include <cstdint>
#include <string>

#include "fastids/tensor.hpp"

namespace fastids {

/// On-disk scheme codes; do not renumber.
enum class QuantScheme : std::uint8_t {
    SymmetricWeight = 1,
    AsymmetricActivation = 2,
};

const char* quant_scheme_name(QuantScheme scheme);

struct QuantParams {
    double scale = 1.0;
    std::int32_t zero_point = 0;
    int bits = 8;
    QuantScheme scheme = QuantScheme::SymmetricWeight;
    double observed_min = 0.0;
    double observed_max = 0.0;

    std::int64_t qmin() const;
    std::int64_t qmax() const;

    bool operator==(const QuantParams&) const = default;
};

constexpr double kDegenerateRangeWidth = 1e-8;

/// Min-max scale and zero point. Activation ranges are widened to contain 0
/// so the zero point lands inside [0, 2^n - 1]; weight ranges are symmetrized.
QuantParams compute_qparams(double observed_min, double observed_max, int bits, QuantScheme scheme);

/// Round half away from zero, then clamp into the scheme's integer range.
std::int64_t quantize_value(double v, const QuantParams& qp);
double dequantize_value(std::int64_t q, const QuantParams& qp);

/// Int8 for n <= 8, otherwise Int32.
Tensor quantize_weights(const Tensor& w, const QuantParams& qp);
/// Int32 tensor holding the unsigned codes.
Tensor quantize_activation(const Tensor& x, const QuantParams& qp);
Tensor dequantize(const Tensor& q, const QuantParams& qp);

}  // namespace fastids
