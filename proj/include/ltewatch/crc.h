#pragma once

#include "ltewatch/bits.h"

namespace ltewatch {

// CRC-16 with generator x^16 + x^12 + x^5 + 1, zero initial state, bit at a
// time MSB first. Appending the 16 result bits to the payload gives zero
// residual.
uint16_t crc16(const BitVec& payload);

// XOR of the CRC with a 16-bit identity (RNTI for control messages, antenna
// port mask for the broadcast channel). Involution.
uint16_t crc_scramble(uint16_t crc, uint16_t mask);

// payload followed by crc16(payload) XOR mask.
BitVec append_crc16(const BitVec& payload, uint16_t mask = 0);

// Antenna-port CRC masks for the broadcast channel.
uint16_t pbch_crc_mask(int n_ports);

} // namespace ltewatch
