#pragma once

#include "ltewatch/bits.h"

#include <complex>
#include <span>
#include <vector>

namespace ltewatch {

using cf32 = std::complex<float>;

// Gray-mapped QPSK with unit average energy: bit pair (b0, b1) maps to
// ((1-2*b0) + j(1-2*b1)) / sqrt(2).
std::vector<cf32> qpsk_map(const BitVec& bits);

// Per-bit LLRs scaled by 1/noise_var (positive => bit 0).
SoftVec qpsk_soft_demap(std::span<const cf32> symbols, float noise_var);

// Per-symbol noise variance, e.g. after zero-forcing equalization.
SoftVec qpsk_soft_demap(std::span<const cf32> symbols, std::span<const float> noise_var);

} // namespace ltewatch
