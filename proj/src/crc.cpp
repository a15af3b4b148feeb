#include "ltewatch/crc.h"

#include "ltewatch/tables.h"

#include <stdexcept>

namespace ltewatch {

uint16_t crc16(const BitVec& payload) {
    const uint16_t poly = CodingTables::instance().crc16_poly;
    uint16_t reg = 0;
    for (uint8_t bit : payload) {
        uint16_t fb = static_cast<uint16_t>((reg >> 15) & 1u) ^ bit;
        reg = static_cast<uint16_t>(reg << 1);
        if (fb) {
            reg ^= poly;
        }
    }
    return reg;
}

uint16_t crc_scramble(uint16_t crc, uint16_t mask) {
    return crc ^ mask;
}

BitVec append_crc16(const BitVec& payload, uint16_t mask) {
    BitVec out = payload;
    push_bits(out, crc_scramble(crc16(payload), mask), 16);
    return out;
}

uint16_t pbch_crc_mask(int n_ports) {
    switch (n_ports) {
    case 1:
        return 0x0000;
    case 2:
        return 0xFFFF;
    default:
        throw std::invalid_argument("unsupported antenna port count");
    }
}

} // namespace ltewatch
