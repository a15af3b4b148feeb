#include "ltewatch/bits.h"

#include <stdexcept>

namespace ltewatch {

void push_bits(BitVec& out, uint64_t v, int n) {
    for (int i = n - 1; i >= 0; --i) {
        out.push_back(static_cast<uint8_t>((v >> i) & 1u));
    }
}

uint64_t read_bits(const BitVec& bits, size_t& pos, int n) {
    if (pos + static_cast<size_t>(n) > bits.size()) {
        throw std::out_of_range("read_bits past end");
    }
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
        v = (v << 1) | bits[pos++];
    }
    return v;
}

BitVec bits_from_uint(uint64_t v, int n) {
    BitVec out;
    out.reserve(n);
    push_bits(out, v, n);
    return out;
}

uint64_t uint_from_bits(const BitVec& bits) {
    uint64_t v = 0;
    for (uint8_t b : bits) {
        v = (v << 1) | b;
    }
    return v;
}

BitVec xor_bits(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("xor_bits length mismatch");
    }
    BitVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

BitVec hard_slice(const SoftVec& soft) {
    BitVec out(soft.size());
    for (size_t i = 0; i < soft.size(); ++i) {
        out[i] = soft[i] > 0.0f ? 0 : 1;
    }
    return out;
}

double mismatch_fraction(const SoftVec& soft, const BitVec& ref) {
    if (soft.size() != ref.size() || ref.empty()) {
        throw std::invalid_argument("mismatch_fraction length mismatch");
    }
    size_t bad = 0;
    for (size_t i = 0; i < ref.size(); ++i) {
        uint8_t hard = soft[i] > 0.0f ? 0 : 1;
        bad += (hard != ref[i]);
    }
    return static_cast<double>(bad) / static_cast<double>(ref.size());
}

std::string to_string(const BitVec& bits) {
    std::string s;
    s.reserve(bits.size());
    for (uint8_t b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

} // namespace ltewatch
