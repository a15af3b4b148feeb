#pragma once

#include <cstdint>
#include <vector>
#include <string>

namespace ltewatch {

// One element per bit, values 0/1. Field layouts are big-endian: the first
// bit of a field is its most significant bit.
using BitVec = std::vector<uint8_t>;

// Log-likelihood ratios. Positive value => bit 0 more likely (project-wide
// convention; every demapper and decoder follows it).
using SoftVec = std::vector<float>;

// Appends the n least significant bits of v, MSB first.
void push_bits(BitVec& out, uint64_t v, int n);

// Reads n bits MSB-first starting at pos; advances pos.
uint64_t read_bits(const BitVec& bits, size_t& pos, int n);

BitVec bits_from_uint(uint64_t v, int n);
uint64_t uint_from_bits(const BitVec& bits);

BitVec xor_bits(const BitVec& a, const BitVec& b);

// Hard decision under the LLR convention above.
BitVec hard_slice(const SoftVec& soft);

// Fraction of positions where the hard slice of `soft` differs from `ref`.
double mismatch_fraction(const SoftVec& soft, const BitVec& ref);

std::string to_string(const BitVec& bits);

} // namespace ltewatch
