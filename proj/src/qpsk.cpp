#include "ltewatch/qpsk.h"

#include <cmath>
#include <stdexcept>

namespace ltewatch {

namespace {
constexpr float kInvSqrt2 = 0.70710678118654752440f;
constexpr float kMinNoiseVar = 1e-9f;
} // namespace

std::vector<cf32> qpsk_map(const BitVec& bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("qpsk_map needs an even bit count");
    }
    std::vector<cf32> out(bits.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        float re = bits[2 * i] ? -kInvSqrt2 : kInvSqrt2;
        float im = bits[2 * i + 1] ? -kInvSqrt2 : kInvSqrt2;
        out[i] = {re, im};
    }
    return out;
}

SoftVec qpsk_soft_demap(std::span<const cf32> symbols, float noise_var) {
    SoftVec out(symbols.size() * 2);
    float scale = 2.0f * std::sqrt(2.0f) / std::max(noise_var, kMinNoiseVar);
    for (size_t i = 0; i < symbols.size(); ++i) {
        out[2 * i] = scale * symbols[i].real();
        out[2 * i + 1] = scale * symbols[i].imag();
    }
    return out;
}

SoftVec qpsk_soft_demap(std::span<const cf32> symbols, std::span<const float> noise_var) {
    if (symbols.size() != noise_var.size()) {
        throw std::invalid_argument("qpsk_soft_demap length mismatch");
    }
    SoftVec out(symbols.size() * 2);
    for (size_t i = 0; i < symbols.size(); ++i) {
        float scale = 2.0f * std::sqrt(2.0f) / std::max(noise_var[i], kMinNoiseVar);
        out[2 * i] = scale * symbols[i].real();
        out[2 * i + 1] = scale * symbols[i].imag();
    }
    return out;
}

} // namespace ltewatch
