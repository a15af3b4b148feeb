#include "ltewatch/gold.h"

#include <stdexcept>

namespace ltewatch {

namespace {
constexpr int kFastForward = 1600;

inline uint32_t step_x1(uint32_t s) {
    uint32_t nb = ((s >> 3) ^ s) & 1u;
    return (s >> 1) | (nb << 30);
}

inline uint32_t step_x2(uint32_t s) {
    uint32_t nb = ((s >> 3) ^ (s >> 2) ^ (s >> 1) ^ s) & 1u;
    return (s >> 1) | (nb << 30);
}
} // namespace

BitVec gold_sequence(uint32_t seed, size_t length) {
    uint32_t x1 = 1;
    uint32_t x2 = seed & 0x7FFFFFFFu;
    for (int i = 0; i < kFastForward; ++i) {
        x1 = step_x1(x1);
        x2 = step_x2(x2);
    }
    BitVec out(length);
    for (size_t i = 0; i < length; ++i) {
        out[i] = static_cast<uint8_t>((x1 ^ x2) & 1u);
        x1 = step_x1(x1);
        x2 = step_x2(x2);
    }
    return out;
}

void scramble(BitVec& bits, const BitVec& seq) {
    if (seq.size() < bits.size()) {
        throw std::invalid_argument("scrambling sequence too short");
    }
    for (size_t i = 0; i < bits.size(); ++i) {
        bits[i] ^= seq[i];
    }
}

void descramble(SoftVec& llrs, const BitVec& seq) {
    if (seq.size() < llrs.size()) {
        throw std::invalid_argument("scrambling sequence too short");
    }
    for (size_t i = 0; i < llrs.size(); ++i) {
        if (seq[i]) {
            llrs[i] = -llrs[i];
        }
    }
}

} // namespace ltewatch
