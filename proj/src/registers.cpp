#include "nlfg/registers.hpp"

#include <algorithm>

#include "nlfg/primitivity.hpp"

namespace nlfg::reg {

std::vector<u32> default_seed(u32 length) {
    std::vector<u32> s(length, 0);
    s[0] = 1;
    return s;
}

LfsrConfig::LfsrConfig(SpecPtr spec, std::vector<u32> taps, std::vector<u32> state)
    : spec_(std::move(spec)), taps_(std::move(taps)), state_(std::move(state)) {
    if (!spec_) throw SpecError("LfsrConfig: null spec");
    if (spec_->r() != 1) throw SpecError("LfsrConfig: scalar register requires r = 1");
    if (taps_.empty()) throw SpecError("LfsrConfig: need L >= 1 taps");
    if (state_.size() != taps_.size())
        throw SpecError("LfsrConfig: state length must equal tap count");
    for (u32 t : taps_) spec_->gfq()->check(t, "LfsrConfig tap");
    for (u32 s : state_) spec_->gfq()->check(s, "LfsrConfig state");
    if (taps_[0] == 0) throw SpecError("LfsrConfig: a_0 must be nonzero (nonsingular)");
}

LfsrConfig::LfsrConfig(SpecPtr spec, std::vector<u32> taps)
    : LfsrConfig(spec, taps, default_seed(u32(taps.size()))) {}

LfsrConfig LfsrConfig::from_char_poly(SpecPtr spec, const Poly& p,
                                      std::optional<std::vector<u32>> seed) {
    if (p.degree() < 1) throw SpecError("LfsrConfig: characteristic polynomial degree must be >= 1");
    poly_validate(*spec->gfq(), p, "characteristic polynomial");
    if (!poly_is_monic(p)) throw SpecError("LfsrConfig: characteristic polynomial must be monic");
    u32 L = u32(p.degree());
    std::vector<u32> taps(L);
    for (u32 i = 0; i < L; ++i) taps[i] = spec->gfq()->neg(p.coeff(i));
    auto st = seed ? std::move(*seed) : default_seed(L);
    return {std::move(spec), std::move(taps), std::move(st)};
}

LfsrConfig LfsrConfig::with_state(std::vector<u32> state) const {
    return {spec_, taps_, std::move(state)};
}

Poly LfsrConfig::char_polynomial() const {
    const auto& F = *spec_->gfq();
    std::vector<u32> c(taps_.size() + 1, 0);
    for (u32 i = 0; i < taps_.size(); ++i) c[i] = F.neg(taps_[i]);
    c.back() = F.one();
    return Poly::from_coeffs(std::move(c));
}

std::pair<gf::FieldElement, LfsrConfig> lfsr_step(const LfsrConfig& cfg) {
    const auto& F = *cfg.spec()->gfq();
    const auto& s = cfg.state();
    u32 out = s[0];
    u32 fb = 0;
    for (u32 i = 0; i < cfg.length(); ++i) fb = F.add(fb, F.mul(cfg.taps()[i], s[i]));
    std::vector<u32> next(s.begin() + 1, s.end());
    next.push_back(fb);
    return {gf::FieldElement(cfg.spec()->gfq(), out), cfg.with_state(std::move(next))};
}

SigmaLfsrConfig::SigmaLfsrConfig(SpecPtr spec, std::vector<Matrix> gains,
                                 std::vector<u32> stacked_state)
    : spec_(std::move(spec)), gains_(std::move(gains)), state_(std::move(stacked_state)) {
    if (!spec_) throw SpecError("SigmaLfsrConfig: null spec");
    if (gains_.empty()) throw SpecError("SigmaLfsrConfig: need L >= 1 gain matrices");
    u32 r = spec_->r();
    for (const auto& B : gains_)
        if (B.rows() != r || B.cols() != r)
            throw SpecError("SigmaLfsrConfig: gain matrices must be r x r");
    for (const auto& B : gains_)
        for (u32 v : B.data()) spec_->gfq()->check(v, "SigmaLfsrConfig gain");
    if (state_.size() != std::size_t(r) * gains_.size())
        throw SpecError("SigmaLfsrConfig: stacked state must have length r*L");
    for (u32 s : state_) spec_->gfq()->check(s, "SigmaLfsrConfig state");
    if (!mat_is_invertible(*spec_->gfq(), gains_[0]))
        throw SpecError("SigmaLfsrConfig: B_0 must be invertible (nonsingular)");
}

SigmaLfsrConfig::SigmaLfsrConfig(SpecPtr spec, std::vector<Matrix> gains)
    : SigmaLfsrConfig(spec, gains, default_seed(u32(spec->r() * gains.size()))) {}

gf::WordVector SigmaLfsrConfig::block(u32 i) const {
    if (i >= length()) throw SpecError("SigmaLfsrConfig::block: index out of range");
    u32 r = spec_->r();
    return {spec_, {state_.begin() + std::size_t(i) * r, state_.begin() + std::size_t(i + 1) * r}};
}

SigmaLfsrConfig SigmaLfsrConfig::with_state(std::vector<u32> state) const {
    return {spec_, gains_, std::move(state)};
}

std::pair<gf::WordVector, SigmaLfsrConfig> sigma_step(const SigmaLfsrConfig& cfg) {
    StateEngine eng(cfg);
    gf::WordVector out = cfg.block(0);
    eng.step();
    auto st = eng.state();
    return {std::move(out), cfg.with_state({st.begin(), st.end()})};
}

Matrix transition_matrix(const SigmaLfsrConfig& cfg) {
    u32 r = cfg.r(), L = cfg.length(), n = r * L;
    const auto& F = *cfg.spec()->gfq();
    Matrix A(n, n);
    for (u32 b = 0; b + 1 < L; ++b)
        for (u32 i = 0; i < r; ++i) A.at(b * r + i, (b + 1) * r + i) = F.one();
    for (u32 j = 0; j < L; ++j)
        for (u32 i = 0; i < r; ++i)
            for (u32 k = 0; k < r; ++k) A.at((L - 1) * r + i, j * r + k) = cfg.gains()[j].at(i, k);
    return A;
}

Matrix regular_representation(const FieldSpec& spec, u32 elem) {
    const auto& Fqr = *spec.gfqr();
    Fqr.check(elem, "regular_representation");
    u32 r = spec.r();
    Matrix B(r, r);
    u64 q = spec.q();
    u64 basis = 1;
    for (u32 j = 0; j < r; ++j) {
        u32 prod = Fqr.mul(elem, u32(basis));
        auto col = Fqr.digits(prod);
        for (u32 i = 0; i < r; ++i) B.at(i, j) = col[i];
        basis *= q;
    }
    return B;
}

SigmaLfsrConfig construct_sigma(SpecPtr spec, const Poly& g,
                                std::optional<std::vector<u32>> seed) {
    const auto& Fqr = *spec->gfqr();
    poly_validate(Fqr, g, "construct_sigma polynomial");
    if (g.degree() < 1) throw SpecError("construct_sigma: degree must be >= 1");
    if (!gf::is_primitive(Fqr, g))
        throw SpecError("construct_sigma: polynomial is not primitive over " + Fqr.describe());
    u32 L = u32(g.degree());
    std::vector<Matrix> gains;
    gains.reserve(L);
    for (u32 i = 0; i < L; ++i)
        gains.push_back(regular_representation(*spec, Fqr.neg(g.coeff(i))));
    auto st = seed ? std::move(*seed) : default_seed(spec->r() * L);
    return {std::move(spec), std::move(gains), std::move(st)};
}

SigmaLfsrConfig as_sigma(const LfsrConfig& cfg) {
    std::vector<Matrix> gains;
    gains.reserve(cfg.length());
    for (u32 t : cfg.taps()) {
        Matrix B(1, 1);
        B.at(0, 0) = t;
        gains.push_back(B);
    }
    return {cfg.spec(), std::move(gains), cfg.state()};
}

Poly sigma_char_poly(const SigmaLfsrConfig& cfg) {
    return gf::char_poly(*cfg.spec()->gfq(), transition_matrix(cfg));
}

bool is_primitive_config(const SigmaLfsrConfig& cfg) {
    return gf::is_primitive(*cfg.spec()->gfq(), sigma_char_poly(cfg));
}

u64 full_period_length(const FieldSpec& spec, u32 length, u64 max_states) {
    BigInt states = boost::multiprecision::pow(BigInt(spec.q()), spec.r() * length);
    if (states > max_states)
        throw BoundError("state space q^(rL) = " + states.str() + " exceeds the bound " +
                         std::to_string(max_states) + " (raise --max-states to override)");
    return u64(states) - 1;
}

StateEngine::StateEngine(const SigmaLfsrConfig& cfg)
    : gfq_(cfg.spec()->gfq()), r_(cfg.r()), len_(cfg.length()) {
    u32 n = r_ * len_;
    rows_.assign(std::size_t(r_) * n, 0);
    for (u32 i = 0; i < r_; ++i)
        for (u32 j = 0; j < len_; ++j)
            for (u32 k = 0; k < r_; ++k) rows_[std::size_t(i) * n + j * r_ + k] = cfg.gains()[j].at(i, k);
    state_ = cfg.state();
    fresh_.assign(r_, 0);
}

void StateEngine::set_state(std::span<const u32> s) {
    if (s.size() != state_.size()) throw SpecError("StateEngine: state size mismatch");
    state_.assign(s.begin(), s.end());
}

void StateEngine::step() {
    const auto& F = *gfq_;
    u32 n = u32(state_.size());
    for (u32 i = 0; i < r_; ++i) {
        u32 acc = 0;
        const u32* row = rows_.data() + std::size_t(i) * n;
        for (u32 j = 0; j < n; ++j) acc = F.add(acc, F.mul(row[j], state_[j]));
        fresh_[i] = acc;
    }
    std::copy(state_.begin() + r_, state_.end(), state_.begin());
    std::copy(fresh_.begin(), fresh_.end(), state_.end() - r_);
}

void for_each_full_period_state(const SigmaLfsrConfig& cfg, u64 max_states,
                                const std::function<void(std::span<const u32>)>& visit) {
    bool nonzero = false;
    for (u32 v : cfg.state()) nonzero |= (v != 0);
    if (!nonzero) throw SpecError("full period enumeration requires a nonzero initial state");
    if (!is_primitive_config(cfg))
        throw SpecError("full period enumeration requires a primitive characteristic polynomial");
    u64 period = full_period_length(*cfg.spec(), cfg.length(), max_states);
    StateEngine eng(cfg);
    for (u64 k = 0; k < period; ++k) {
        visit(eng.state());
        eng.step();
    }
}

}  // namespace nlfg::reg
