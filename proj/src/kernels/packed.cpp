#include <bit>

#include "nlfg/kernels.hpp"

namespace nlfg::kern {

namespace {

inline u64 assembly_eval(const PackedNlfg& cfg, u64 state, u64 rmask) {
    u64 out = 0;
    for (u32 k = 0; k < cfg.m; ++k) {
        u64 u = (state >> (cfg.pair_a[k] * cfg.r)) & rmask;
        u64 v = (state >> (cfg.pair_b[k] * cfg.r)) & rmask;
        u64 p;
        if (cfg.elementwise) {
            p = u & v;
        } else {
            // carry-less product then reduction by the Q columns
            p = 0;
            for (u32 b = 0; b < cfg.r; ++b) p ^= (u << b) & (0 - ((v >> b) & 1));
            u64 low = p & rmask;
            for (u32 j = 0; j + 1 < cfg.r; ++j)
                low ^= u64(cfg.reduce[j]) & (0 - ((p >> (cfg.r + j)) & 1));
            p = low;
        }
        out ^= p;
    }
    return out;
}

}  // namespace

void dist_packed(const PackedNlfg& cfg, u64& state, u64 steps, u64* hist) {
    const u64 rmask = (u64(1) << cfg.r) - 1;
    const u32 top = cfg.r * (cfg.L - 1);
    u64 s = state;
    for (u64 n = 0; n < steps; ++n) {
        ++hist[assembly_eval(cfg, s, rmask)];
        u64 nb = 0;
        for (u32 i = 0; i < cfg.r; ++i)
            nb |= u64(std::popcount(s & cfg.feedback[i]) & 1) << i;
        s = (s >> cfg.r) | (nb << top);
    }
    state = s;
}

void census_packed(const PackedCensus& cfg, u64 begin, u64 end, u64* hist) {
    const u64 rmask = (u64(1) << cfg.r) - 1;
    PackedNlfg view;  // reuse the evaluator; census inputs are 2m adjacent blocks
    view.r = cfg.r;
    view.m = cfg.m;
    view.elementwise = cfg.elementwise;
    view.reduce = cfg.reduce;
    for (u32 k = 0; k < cfg.m; ++k) {
        view.pair_a[k] = u8(2 * k);
        view.pair_b[k] = u8(2 * k + 1);
    }
    for (u64 idx = begin; idx < end; ++idx) ++hist[assembly_eval(view, idx, rmask)];
}

}  // namespace nlfg::kern
