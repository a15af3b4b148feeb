#include "ltewatch/convcode.h"

#include "ltewatch/tables.h"

#include <array>
#include <bit>
#include <limits>
#include <stdexcept>

namespace ltewatch {

namespace {

constexpr int kStates = 64;

struct Trellis {
    // [state][input] -> next state and 3-bit output (d0 in bit 2, d2 in bit 0)
    std::array<std::array<uint8_t, 2>, kStates> next;
    std::array<std::array<uint8_t, 2>, kStates> out;

    Trellis() {
        const auto& polys = CodingTables::instance().conv_polys;
        for (int s = 0; s < kStates; ++s) {
            for (int u = 0; u < 2; ++u) {
                // register bit 6 = current input, bits 5..0 = previous inputs,
                // most recent in bit 5
                int reg = (u << 6) | s;
                uint8_t bits = 0;
                for (int i = 0; i < 3; ++i) {
                    bits = static_cast<uint8_t>((bits << 1) |
                                                (std::popcount(static_cast<unsigned>(reg & polys[i])) & 1));
                }
                next[s][u] = static_cast<uint8_t>(reg >> 1);
                out[s][u] = bits;
            }
        }
    }
};

const Trellis& trellis() {
    static Trellis t;
    return t;
}

} // namespace

BitVec conv_encode(const BitVec& payload) {
    if (payload.empty()) {
        throw std::invalid_argument("conv_encode needs at least one bit");
    }
    const Trellis& t = trellis();
    const size_t n = payload.size();

    // tail-biting: preload the register with the last 6 bits, most recent
    // (payload end) in bit 5
    int state = 0;
    for (int i = 0; i < 6; ++i) {
        long idx = (static_cast<long>(n) - 1 - i) % static_cast<long>(n);
        if (idx < 0) {
            idx += static_cast<long>(n);
        }
        state |= payload[static_cast<size_t>(idx)] << (5 - i);
    }

    BitVec out(3 * n);
    for (size_t i = 0; i < n; ++i) {
        int u = payload[i];
        uint8_t bits = t.out[state][u];
        out[i] = (bits >> 2) & 1;
        out[n + i] = (bits >> 1) & 1;
        out[2 * n + i] = bits & 1;
        state = t.next[state][u];
    }
    return out;
}

BitVec conv_decode(const SoftVec& soft, size_t payload_len) {
    if (payload_len == 0) {
        throw std::invalid_argument("conv_decode needs payload_len >= 1");
    }
    if (soft.size() != 3 * payload_len) {
        throw std::invalid_argument("conv_decode soft length must be 3 * payload_len");
    }
    const Trellis& t = trellis();
    const int n = static_cast<int>(payload_len);

    // Wrap-around Viterbi: run over three copies of the codeword with all
    // start states equal, then traceback from the best end state and keep
    // the middle copy.
    const int copies = 3;
    const int steps = copies * n;

    std::vector<float> metric(kStates, 0.0f);
    std::vector<float> next_metric(kStates);
    std::vector<uint8_t> decision(static_cast<size_t>(steps) * kStates);

    for (int step = 0; step < steps; ++step) {
        int pos = step % n;
        float l0 = soft[pos];
        float l1 = soft[payload_len + pos];
        float l2 = soft[2 * payload_len + pos];
        // branch metric for each of the 8 possible output triplets
        std::array<float, 8> bm;
        for (int b = 0; b < 8; ++b) {
            bm[b] = ((b & 4) ? -l0 : l0) + ((b & 2) ? -l1 : l1) + ((b & 1) ? -l2 : l2);
        }
        std::fill(next_metric.begin(), next_metric.end(), -std::numeric_limits<float>::infinity());
        uint8_t* dec = &decision[static_cast<size_t>(step) * kStates];
        for (int s = 0; s < kStates; ++s) {
            float base = metric[s];
            for (int u = 0; u < 2; ++u) {
                int ns = t.next[s][u];
                float m = base + bm[t.out[s][u]];
                if (m > next_metric[ns]) {
                    next_metric[ns] = m;
                    // remember predecessor state and input
                    dec[ns] = static_cast<uint8_t>((s << 1) | u);
                }
            }
        }
        metric.swap(next_metric);
    }

    int best = 0;
    for (int s = 1; s < kStates; ++s) {
        if (metric[s] > metric[best]) {
            best = s;
        }
    }

    std::vector<uint8_t> inputs(steps);
    int state = best;
    for (int step = steps - 1; step >= 0; --step) {
        uint8_t d = decision[static_cast<size_t>(step) * kStates + state];
        inputs[step] = d & 1;
        state = d >> 1;
    }

    BitVec out(payload_len);
    for (int i = 0; i < n; ++i) {
        out[i] = inputs[n + i];
    }
    return out;
}

} // namespace ltewatch
