#include "nlfg/generator.hpp"

#include <set>

namespace nlfg::gen {

const char* mul_mode_name(MulMode m) {
    return m == MulMode::FieldProduct ? "field-product" : "element-wise";
}

MulMode mul_mode_from_name(const std::string& s) {
    if (s == "field-product" || s == "field") return MulMode::FieldProduct;
    if (s == "element-wise" || s == "elementwise") return MulMode::ElementWise;
    throw SpecError("unknown multiplication mode '" + s +
                    "' (expected field-product or element-wise)");
}

TapAssembly::TapAssembly(std::vector<std::pair<u32, u32>> pairs, MulMode mode)
    : pairs_(std::move(pairs)), mode_(mode) {
    if (pairs_.empty())
        throw SpecError("TapAssembly: at least one multiplier required (m >= 1)");
    std::set<u32> seen;
    for (auto [i, j] : pairs_) {
        if (!seen.insert(i).second || !seen.insert(j).second)
            throw SpecError("TapAssembly: each delay block may feed at most one multiplier");
    }
}

TapAssembly TapAssembly::adjacent(u32 m, MulMode mode) {
    if (m == 0) throw SpecError("TapAssembly: m must be >= 1");
    std::vector<std::pair<u32, u32>> pairs;
    pairs.reserve(m);
    for (u32 k = 0; k < m; ++k) pairs.emplace_back(2 * k, 2 * k + 1);
    return {std::move(pairs), mode};
}

u32 TapAssembly::max_index() const noexcept {
    u32 mx = 0;
    for (auto [i, j] : pairs_) mx = std::max({mx, i, j});
    return mx;
}

gf::WordVector assembly_output(const TapAssembly& assembly, const SpecPtr& spec,
                               std::span<const u32> stacked_state) {
    u32 r = spec->r();
    if (stacked_state.size() % r != 0)
        throw SpecError("assembly_output: stacked state length must be a multiple of r");
    u32 L = u32(stacked_state.size()) / r;
    if (assembly.max_index() >= L) throw SpecError("assembly_output: pair index out of range");
    auto word_at = [&](u32 i) {
        return gf::WordVector(spec, {stacked_state.begin() + std::size_t(i) * r,
                                     stacked_state.begin() + std::size_t(i + 1) * r});
    };
    gf::WordVector acc = gf::WordVector::zero(spec);
    for (auto [i, j] : assembly.pairs()) {
        gf::WordVector prod = assembly.mode() == MulMode::FieldProduct
                                  ? gf::word_mul(word_at(i), word_at(j))
                                  : gf::word_mul_elementwise(word_at(i), word_at(j));
        acc = gf::word_add(acc, prod);
    }
    return acc;
}

Generator::Generator(reg::LfsrConfig r, TapAssembly assembly)
    : reg_(std::move(r)), assembly_(std::move(assembly)) {
    u32 L = length();
    if (assembly_.multiplier_count() > L / 2)
        throw SpecError("Generator: m must be at most floor(L/2)");
    if (assembly_.max_index() >= L)
        throw SpecError("Generator: tap index out of range for register length");
}

Generator::Generator(reg::SigmaLfsrConfig r, TapAssembly assembly)
    : reg_(std::move(r)), assembly_(std::move(assembly)) {
    u32 L = length();
    if (assembly_.multiplier_count() > L / 2)
        throw SpecError("Generator: m must be at most floor(L/2)");
    if (assembly_.max_index() >= L)
        throw SpecError("Generator: tap index out of range for register length");
}

reg::SigmaLfsrConfig Generator::sigma_view() const {
    if (is_scalar()) return reg::as_sigma(scalar_register());
    return sigma_register();
}

const SpecPtr& Generator::spec() const noexcept {
    return is_scalar() ? scalar_register().spec() : sigma_register().spec();
}

u32 Generator::length() const noexcept {
    return is_scalar() ? scalar_register().length() : sigma_register().length();
}

Generator Generator::with_register_state(std::vector<u32> stacked) const {
    if (is_scalar()) return {scalar_register().with_state(std::move(stacked)), assembly_};
    return {sigma_register().with_state(std::move(stacked)), assembly_};
}

std::pair<gf::WordVector, Generator> nlfg_step(const Generator& g) {
    if (g.is_scalar()) {
        const auto& cfg = g.scalar_register();
        gf::WordVector out = assembly_output(g.assembly(), cfg.spec(), cfg.state());
        auto [sym, next] = reg::lfsr_step(cfg);
        (void)sym;
        return {std::move(out), Generator(std::move(next), g.assembly())};
    }
    const auto& cfg = g.sigma_register();
    gf::WordVector out = assembly_output(g.assembly(), cfg.spec(), cfg.state());
    auto [word, next] = reg::sigma_step(cfg);
    (void)word;
    return {std::move(out), Generator(std::move(next), g.assembly())};
}

void for_each_full_period_output(const Generator& g, u64 max_states,
                                 const std::function<void(std::span<const u32>)>& visit) {
    auto sigma = g.sigma_view();
    const auto& spec = g.spec();
    const TapAssembly& assembly = g.assembly();
    reg::for_each_full_period_state(sigma, max_states, [&](std::span<const u32> st) {
        gf::WordVector out = assembly_output(assembly, spec, st);
        visit(out.entries());
    });
}

}  // namespace nlfg::gen
