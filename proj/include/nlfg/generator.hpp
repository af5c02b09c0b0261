#pragma once

#include <variant>
#include <vector>

#include "nlfg/field_spec.hpp"
#include "nlfg/registers.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gen {

using gf::SpecPtr;

enum class MulMode { FieldProduct, ElementWise };

const char* mul_mode_name(MulMode m);         // "field-product" / "element-wise"
MulMode mul_mode_from_name(const std::string& s);

/// m disjoint ordered pairs of delay-block indices feeding 2-input
/// multipliers; every index may feed at most one multiplier.
class TapAssembly {
public:
    TapAssembly(std::vector<std::pair<u32, u32>> pairs, MulMode mode);
    /// Default pairs (0,1), (2,3), ..., (2m-2, 2m-1).
    static TapAssembly adjacent(u32 m, MulMode mode);

    u32 multiplier_count() const noexcept { return u32(pairs_.size()); }
    const std::vector<std::pair<u32, u32>>& pairs() const noexcept { return pairs_; }
    MulMode mode() const noexcept { return mode_; }
    u32 max_index() const noexcept;

private:
    std::vector<std::pair<u32, u32>> pairs_;
    MulMode mode_;
};

/// Sum over the assembly's pairs of product(state[i], state[j]), evaluated on
/// a stacked register state; the product is the field product (Q-matrix
/// route) or the entrywise product according to the mode.
gf::WordVector assembly_output(const TapAssembly& assembly, const SpecPtr& spec,
                               std::span<const u32> stacked_state);

/// Nonlinear feedforward generator: a register plus a tap assembly.
class Generator {
public:
    Generator(reg::LfsrConfig reg, TapAssembly assembly);
    Generator(reg::SigmaLfsrConfig reg, TapAssembly assembly);

    bool is_scalar() const noexcept { return std::holds_alternative<reg::LfsrConfig>(reg_); }
    const reg::LfsrConfig& scalar_register() const { return std::get<reg::LfsrConfig>(reg_); }
    const reg::SigmaLfsrConfig& sigma_register() const {
        return std::get<reg::SigmaLfsrConfig>(reg_);
    }
    /// Unified view; 1x1 gains for the scalar case.
    reg::SigmaLfsrConfig sigma_view() const;

    const TapAssembly& assembly() const noexcept { return assembly_; }
    const SpecPtr& spec() const noexcept;
    u32 length() const noexcept;
    u32 r() const noexcept { return spec()->r(); }

    Generator with_register_state(std::vector<u32> stacked) const;

private:
    std::variant<reg::LfsrConfig, reg::SigmaLfsrConfig> reg_;
    TapAssembly assembly_;
};

/// Output on the current state, then one register step.
std::pair<gf::WordVector, Generator> nlfg_step(const Generator& g);

/// One output per state over a full period (q^{rL}-1 outputs). Audits the
/// register's primitivity and rejects a zero seed.
void for_each_full_period_output(const Generator& g, u64 max_states,
                                 const std::function<void(std::span<const u32>)>& visit);

}  // namespace nlfg::gen
