#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nlfg/field_spec.hpp"
#include "nlfg/matrix.hpp"
#include "nlfg/types.hpp"

namespace nlfg::reg {

using gf::FieldSpec;
using gf::Matrix;
using gf::Poly;
using gf::SpecPtr;

std::vector<u32> default_seed(u32 length);  // (1, 0, ..., 0)

/// Scalar LFSR over GF(q): s_{j+L} = a_0 s_j + a_1 s_{j+1} + ... + a_{L-1} s_{j+L-1}.
/// Requires r = 1 in the spec and a_0 != 0. State entry 0 is the oldest symbol
/// (the next output).
class LfsrConfig {
public:
    LfsrConfig(SpecPtr spec, std::vector<u32> taps, std::vector<u32> state);
    LfsrConfig(SpecPtr spec, std::vector<u32> taps);  // default seed
    /// Taps from a monic characteristic polynomial x^L - a_{L-1}x^{L-1} - ... - a_0.
    static LfsrConfig from_char_poly(SpecPtr spec, const Poly& p,
                                     std::optional<std::vector<u32>> seed = std::nullopt);

    u32 length() const noexcept { return u32(taps_.size()); }
    const SpecPtr& spec() const noexcept { return spec_; }
    const std::vector<u32>& taps() const noexcept { return taps_; }
    const std::vector<u32>& state() const noexcept { return state_; }
    LfsrConfig with_state(std::vector<u32> state) const;

    /// x^L - a_{L-1}x^{L-1} - ... - a_0 over GF(q).
    Poly char_polynomial() const;

private:
    SpecPtr spec_;
    std::vector<u32> taps_, state_;
};

std::pair<gf::FieldElement, LfsrConfig> lfsr_step(const LfsrConfig& cfg);

/// Word-based sigma-LFSR: s_{j+L} = B_0 s_j + ... + B_{L-1} s_{j+L-1} with
/// r x r gain matrices over GF(q). State is stacked, length rL, block i at
/// [i*r, (i+1)*r); block 0 is the next output.
class SigmaLfsrConfig {
public:
    SigmaLfsrConfig(SpecPtr spec, std::vector<Matrix> gains, std::vector<u32> stacked_state);
    SigmaLfsrConfig(SpecPtr spec, std::vector<Matrix> gains);

    u32 length() const noexcept { return u32(gains_.size()); }
    u32 r() const noexcept { return spec_->r(); }
    u32 state_dim() const noexcept { return u32(state_.size()); }  // rL
    const SpecPtr& spec() const noexcept { return spec_; }
    const std::vector<Matrix>& gains() const noexcept { return gains_; }
    const std::vector<u32>& state() const noexcept { return state_; }
    gf::WordVector block(u32 i) const;
    SigmaLfsrConfig with_state(std::vector<u32> state) const;

private:
    SpecPtr spec_;
    std::vector<Matrix> gains_;
    std::vector<u32> state_;
};

std::pair<gf::WordVector, SigmaLfsrConfig> sigma_step(const SigmaLfsrConfig& cfg);

/// Block companion matrix A in GF(q)^{rL x rL}: identity superdiagonal blocks,
/// gain blocks in the last block row; satisfies s(k+1) = A s(k).
Matrix transition_matrix(const SigmaLfsrConfig& cfg);

/// r x r matrix over GF(q) of multiplication by elem (an index of GF(q^r))
/// in the basis [1], [x], ..., [x^{r-1}].
Matrix regular_representation(const FieldSpec& spec, u32 elem);

/// Sigma-LFSR acting as the FSR over GF(q^r) with characteristic polynomial g
/// (monic primitive of degree L over GF(q^r)): each coefficient becomes the
/// regular representation of itself, giving a primitive configuration of
/// degree rL over GF(q).
SigmaLfsrConfig construct_sigma(SpecPtr spec, const Poly& g,
                                std::optional<std::vector<u32>> seed = std::nullopt);

/// Scalar LFSR viewed as a sigma-LFSR with 1x1 gains.
SigmaLfsrConfig as_sigma(const LfsrConfig& cfg);

Poly sigma_char_poly(const SigmaLfsrConfig& cfg);  // char_poly of the transition matrix
bool is_primitive_config(const SigmaLfsrConfig& cfg);

/// q^{rL} - 1 if it fits the bound, else BoundError.
u64 full_period_length(const FieldSpec& spec, u32 length, u64 max_states);

/// Mutable stepping engine over the stacked state (the generic scalar
/// reference path; the packed kernels mirror it for q = 2).
class StateEngine {
public:
    explicit StateEngine(const SigmaLfsrConfig& cfg);
    std::span<const u32> state() const noexcept { return state_; }
    void set_state(std::span<const u32> s);
    void step();
    u32 r() const noexcept { return r_; }
    u32 dim() const noexcept { return u32(state_.size()); }

private:
    std::shared_ptr<const gf::Field> gfq_;
    u32 r_, len_;
    std::vector<u32> rows_;   // r feedback rows of length rL (concatenated gain rows)
    std::vector<u32> state_;  // stacked
    std::vector<u32> fresh_;  // scratch for the new block
};

/// Visits all q^{rL}-1 states of a full period starting at cfg's state, in
/// cycle order. Requires a primitive characteristic polynomial (audited) and
/// a nonzero seed; the state after the last visit equals the seed again.
void for_each_full_period_state(const SigmaLfsrConfig& cfg, u64 max_states,
                                const std::function<void(std::span<const u32>)>& visit);

}  // namespace nlfg::reg
