#pragma once

#include <array>
#include <string>

#include "nlfg/types.hpp"

namespace nlfg::kern {

// Bit-packed fast path for q = 2. States pack the stacked register into a
// single word, delay block i at bits [i*r, (i+1)*r). The generic engine in
// `analysis` is the scalar reference these kernels are equivalence-tested
// against; kernel selection happens at runtime.

inline constexpr u32 kMaxBits = 48;  // rL
inline constexpr u32 kMaxR = 16;
inline constexpr u32 kMaxM = 24;

enum class Kind { Auto, Generic, Packed, Avx2 };

Kind detect() noexcept;  // best available on this CPU (never Generic)
bool kind_available(Kind k) noexcept;
const char* kind_name(Kind k) noexcept;
Kind kind_from_name(const std::string& s);

struct PackedNlfg {
    u32 L = 0;
    u32 r = 0;
    u32 m = 0;
    bool elementwise = false;
    // new-block bit i of a step = parity(state & feedback[i])
    std::array<u64, kMaxR> feedback{};
    std::array<u8, kMaxM> pair_a{};
    std::array<u8, kMaxM> pair_b{};
    // field product: M(x^{r+j}) as an r-bit mask, j in [0, r-1)
    std::array<u32, kMaxR> reduce{};
};

struct PackedCensus {
    u32 r = 0;
    u32 m = 0;
    bool elementwise = false;
    std::array<u32, kMaxR> reduce{};
};

/// Tallies the assembly output of `steps` consecutive states into
/// hist[1 << r], starting at (and advancing) `state`.
void dist_packed(const PackedNlfg& cfg, u64& state, u64 steps, u64* hist);
/// Four independent state streams, `steps` each; states updated in place.
void dist_avx2x4(const PackedNlfg& cfg, u64 states[4], u64 steps, u64* hist);

/// Tallies assembly outputs for packed input indices in [begin, end).
void census_packed(const PackedCensus& cfg, u64 begin, u64 end, u64* hist);
void census_avx2(const PackedCensus& cfg, u64 begin, u64 end, u64* hist);

}  // namespace nlfg::kern
