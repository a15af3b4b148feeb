#pragma once

#include "ltewatch/bits.h"

namespace ltewatch {

// Length-31 Gold sequence generator: x1 with x^31 + x^3 + 1 (fixed init
// 0...01), x2 with x^31 + x^3 + x^2 + x + 1 (init = the 31-bit seed), both
// advanced 1600 steps before the first output bit.
BitVec gold_sequence(uint32_t seed, size_t length);

// XOR the sequence into hard bits.
void scramble(BitVec& bits, const BitVec& seq);

// Flip LLR signs where the sequence bit is 1.
void descramble(SoftVec& llrs, const BitVec& seq);

} // namespace ltewatch
