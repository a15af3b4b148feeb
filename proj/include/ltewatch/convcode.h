#pragma once

#include "ltewatch/bits.h"

namespace ltewatch {

// Rate-1/3 tail-biting convolutional code, constraint length 7. The shift
// register starts loaded with the last 6 payload bits, so the trellis ends
// in its initial state. Output is stream-major: all of d0, then d1, then d2
// (each the same length as the payload).
BitVec conv_encode(const BitVec& payload);

// Wrap-around Viterbi decode of the tail-biting code. `soft` holds
// 3 * payload_len LLRs in the same stream-major layout. Always returns a
// candidate payload; the CRC is the arbiter of correctness.
BitVec conv_decode(const SoftVec& soft, size_t payload_len);

} // namespace ltewatch
