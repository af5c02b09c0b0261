#include "nlfg/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace nlfg::kern {

namespace {

// per-64-bit-lane popcount via nibble LUT + horizontal byte sums
inline __m256i popcount64x4(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i nib = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, nib);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi64(v, 4), nib);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline __m256i assembly_eval4(const PackedNlfg& cfg, __m256i state, __m256i rmask) {
    const __m256i one = _mm256_set1_epi64x(1);
    __m256i out = _mm256_setzero_si256();
    for (u32 k = 0; k < cfg.m; ++k) {
        __m256i u = _mm256_and_si256(_mm256_srli_epi64(state, int(cfg.pair_a[k] * cfg.r)), rmask);
        __m256i v = _mm256_and_si256(_mm256_srli_epi64(state, int(cfg.pair_b[k] * cfg.r)), rmask);
        __m256i p;
        if (cfg.elementwise) {
            p = _mm256_and_si256(u, v);
        } else {
            p = _mm256_setzero_si256();
            for (u32 b = 0; b < cfg.r; ++b) {
                __m256i bit = _mm256_and_si256(_mm256_srli_epi64(v, int(b)), one);
                __m256i mask = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
                p = _mm256_xor_si256(p, _mm256_and_si256(_mm256_slli_epi64(u, int(b)), mask));
            }
            __m256i low = _mm256_and_si256(p, rmask);
            for (u32 j = 0; j + 1 < cfg.r; ++j) {
                __m256i bit = _mm256_and_si256(_mm256_srli_epi64(p, int(cfg.r + j)), one);
                __m256i mask = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
                low = _mm256_xor_si256(low,
                                       _mm256_and_si256(_mm256_set1_epi64x(i64(cfg.reduce[j])), mask));
            }
            p = low;
        }
        out = _mm256_xor_si256(out, p);
    }
    return out;
}

}  // namespace

void dist_avx2x4(const PackedNlfg& cfg, u64 states[4], u64 steps, u64* hist) {
    const __m256i rmask = _mm256_set1_epi64x(i64((u64(1) << cfg.r) - 1));
    const __m256i one = _mm256_set1_epi64x(1);
    const u32 top = cfg.r * (cfg.L - 1);
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(states));
    alignas(32) u64 outs[4];
    for (u64 n = 0; n < steps; ++n) {
        __m256i out = assembly_eval4(cfg, s, rmask);
        _mm256_store_si256(reinterpret_cast<__m256i*>(outs), out);
        ++hist[outs[0]];
        ++hist[outs[1]];
        ++hist[outs[2]];
        ++hist[outs[3]];
        __m256i nb = _mm256_setzero_si256();
        for (u32 i = 0; i < cfg.r; ++i) {
            __m256i masked = _mm256_and_si256(s, _mm256_set1_epi64x(i64(cfg.feedback[i])));
            __m256i parity = _mm256_and_si256(popcount64x4(masked), one);
            nb = _mm256_or_si256(nb, _mm256_slli_epi64(parity, int(i)));
        }
        s = _mm256_or_si256(_mm256_srli_epi64(s, int(cfg.r)), _mm256_slli_epi64(nb, int(top)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(states), s);
}

void census_avx2(const PackedCensus& cfg, u64 begin, u64 end, u64* hist) {
    PackedNlfg view;
    view.r = cfg.r;
    view.m = cfg.m;
    view.elementwise = cfg.elementwise;
    view.reduce = cfg.reduce;
    for (u32 k = 0; k < cfg.m; ++k) {
        view.pair_a[k] = u8(2 * k);
        view.pair_b[k] = u8(2 * k + 1);
    }
    const __m256i rmask = _mm256_set1_epi64x(i64((u64(1) << cfg.r) - 1));
    alignas(32) u64 outs[4];
    u64 idx = begin;
    for (; idx + 4 <= end; idx += 4) {
        __m256i in = _mm256_setr_epi64x(i64(idx), i64(idx + 1), i64(idx + 2), i64(idx + 3));
        _mm256_store_si256(reinterpret_cast<__m256i*>(outs), assembly_eval4(view, in, rmask));
        ++hist[outs[0]];
        ++hist[outs[1]];
        ++hist[outs[2]];
        ++hist[outs[3]];
    }
    if (idx < end) census_packed(cfg, idx, end, hist);
}

}  // namespace nlfg::kern

#else  // non-x86: never selected at runtime, keep the symbols defined

namespace nlfg::kern {

void dist_avx2x4(const PackedNlfg& cfg, u64 states[4], u64 steps, u64* hist) {
    for (int lane = 0; lane < 4; ++lane) dist_packed(cfg, states[lane], steps, hist);
}

void census_avx2(const PackedCensus& cfg, u64 begin, u64 end, u64* hist) {
    census_packed(cfg, begin, end, hist);
}

}  // namespace nlfg::kern

#endif
