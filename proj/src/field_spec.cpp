#include "nlfg/field_spec.hpp"

#include <sstream>

#include "nlfg/primitivity.hpp"

namespace nlfg::gf {

FieldSpec::FieldSpec(u32 p, u32 n, std::optional<Poly> inner_poly, u32 r,
                     std::optional<Poly> outer_poly)
    : p_(p), n_(n), r_(r), inner_(std::move(inner_poly)), outer_(std::move(outer_poly)) {
    if (n_ < 1) throw SpecError("FieldSpec: n must be >= 1");
    if (r_ < 1) throw SpecError("FieldSpec: r must be >= 1");
    gfp_ = Field::prime(p_);

    if (n_ == 1) {
        if (inner_) throw SpecError("FieldSpec: inner_poly must be absent when n = 1");
        gfq_ = gfp_;
    } else {
        if (!inner_) throw SpecError("FieldSpec: inner_poly required when n > 1");
        if (inner_->degree() != int(n_))
            throw SpecError("FieldSpec: inner_poly degree must equal n");
        if (!is_primitive(*gfp_, *inner_))
            throw SpecError("FieldSpec: inner_poly is not primitive over GF(" +
                            std::to_string(p_) + ")");
        gfq_ = Field::extension(gfp_, *inner_);
    }

    if (r_ == 1) {
        if (outer_) throw SpecError("FieldSpec: outer_poly must be absent when r = 1");
        gfqr_ = gfq_;
    } else {
        if (!outer_) throw SpecError("FieldSpec: outer_poly required when r > 1");
        if (outer_->degree() != int(r_))
            throw SpecError("FieldSpec: outer_poly degree must equal r");
        poly_validate(*gfq_, *outer_, "outer_poly");
        if (!is_primitive(*gfq_, *outer_))
            throw SpecError("FieldSpec: outer_poly is not primitive over " + gfq_->describe());
        gfqr_ = Field::extension(gfq_, *outer_);
        // cache M([x^{r+j}]) for the Q matrix / word_mul reduction
        q_cols_.resize(r_ - 1);
        for (u32 j = 0; j + 1 < r_; ++j) {
            std::vector<u32> xp(r_ + j + 1, 0);
            xp.back() = gfq_->one();
            Poly red = poly_mod(*gfq_, Poly::from_coeffs(std::move(xp)), *outer_);
            q_cols_[j].assign(r_, 0);
            for (u32 k = 0; k < r_; ++k) q_cols_[j][k] = red.coeff(k);
        }
    }
}

SpecPtr FieldSpec::make(u32 p, u32 n, std::optional<Poly> inner_poly, u32 r,
                        std::optional<Poly> outer_poly) {
    return std::make_shared<const FieldSpec>(p, n, std::move(inner_poly), r,
                                             std::move(outer_poly));
}

namespace {

std::pair<u32, u32> factor_prime_power(u64 q) {
    if (q < 2) throw SpecError("field order must be >= 2");
    u64 p = q;
    for (u64 d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    u32 n = 0;
    u64 t = q;
    while (t % p == 0) {
        t /= p;
        ++n;
    }
    if (t != 1) throw SpecError("field order " + std::to_string(q) + " is not a prime power");
    return {u32(p), n};
}

Poly table_or_search(const Field& F, u32 degree) {
    if (auto t = builtin_primitive_poly(F.order(), degree)) return *t;
    return find_primitive(F, degree);
}

}  // namespace

SpecPtr FieldSpec::scalar(u64 q) {
    auto [p, n] = factor_prime_power(q);
    std::optional<Poly> inner;
    if (n > 1) inner = table_or_search(*Field::prime(p), n);
    return make(p, n, std::move(inner), 1, std::nullopt);
}

SpecPtr FieldSpec::word(u64 q, u32 r) {
    auto [p, n] = factor_prime_power(q);
    std::optional<Poly> inner;
    FieldPtr gfq = Field::prime(p);
    if (n > 1) {
        inner = table_or_search(*gfq, n);
        gfq = Field::extension(gfq, *inner);
    }
    std::optional<Poly> outer;
    if (r > 1) outer = table_or_search(*gfq, r);
    return make(p, n, std::move(inner), r, std::move(outer));
}

const Poly& FieldSpec::inner_poly() const {
    if (!inner_) throw SpecError("FieldSpec: no inner_poly (n = 1)");
    return *inner_;
}

const Poly& FieldSpec::outer_poly() const {
    if (!outer_) throw SpecError("FieldSpec: no outer_poly (r = 1)");
    return *outer_;
}

bool FieldSpec::same_as(const FieldSpec& o) const {
    return p_ == o.p_ && n_ == o.n_ && r_ == o.r_ && inner_ == o.inner_ && outer_ == o.outer_;
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "GF(" << q() << ")";
    if (r_ > 1) os << "^" << r_ << " ~ " << gfqr_->describe();
    return os.str();
}

std::span<const u32> FieldSpec::reduction_column(u32 j) const {
    if (r_ == 1 || j >= r_ - 1) throw SpecError("FieldSpec: reduction column out of range");
    return q_cols_[j];
}

FieldElement::FieldElement(FieldPtr field, u32 index) : field_(std::move(field)), idx_(index) {
    if (!field_) throw SpecError("FieldElement: null field");
    field_->check(index, "FieldElement");
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b, const char* op) {
    if (!a.field()->same_as(*b.field()))
        throw SpecError(std::string(op) + ": operands belong to different fields (" +
                        a.field()->describe() + " vs " + b.field()->describe() + ")");
}

void require_same(const WordVector& a, const WordVector& b, const char* op) {
    if (!a.spec()->same_as(*b.spec()))
        throw SpecError(std::string(op) + ": operands belong to different field specs");
}

}  // namespace

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
    require_same(a, b, "fe_add");
    return {a.field(), a.field()->add(a.index(), b.index())};
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
    require_same(a, b, "fe_mul");
    return {a.field(), a.field()->mul(a.index(), b.index())};
}

WordVector::WordVector(SpecPtr spec, std::vector<u32> entries)
    : spec_(std::move(spec)), entries_(std::move(entries)) {
    if (!spec_) throw SpecError("WordVector: null spec");
    if (entries_.size() != spec_->r())
        throw SpecError("WordVector: expected exactly " + std::to_string(spec_->r()) +
                        " entries, got " + std::to_string(entries_.size()));
    for (u32 e : entries_) spec_->gfq()->check(e, "WordVector entry");
}

WordVector WordVector::zero(SpecPtr spec) {
    u32 r = spec->r();
    return {std::move(spec), std::vector<u32>(r, 0)};
}

WordVector WordVector::unit(SpecPtr spec) {
    u32 r = spec->r();
    std::vector<u32> e(r, 0);
    e[0] = 1;
    return {std::move(spec), std::move(e)};
}

bool WordVector::is_zero() const noexcept {
    for (u32 e : entries_)
        if (e) return false;
    return true;
}

u32 WordVector::kappa() const noexcept {
    u32 k = 0;
    for (u32 e : entries_) k += (e != 0);
    return k;
}

u64 WordVector::packed() const noexcept {
    u64 key = 0;
    u64 mult = 1;
    for (u32 e : entries_) {
        key += e * mult;
        mult *= spec_->q();
    }
    return key;
}

WordVector WordVector::from_packed(SpecPtr spec, u64 key) {
    std::vector<u32> e(spec->r());
    u64 q = spec->q();
    for (auto& v : e) {
        v = u32(key % q);
        key /= q;
    }
    if (key) throw SpecError("WordVector::from_packed: key out of range");
    return {std::move(spec), std::move(e)};
}

std::string WordVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (u32 i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

WordVector map_M(SpecPtr spec, const Poly& f) {
    if (f.degree() >= int(spec->r()))
        throw SpecError("map_M: polynomial degree must be below r");
    poly_validate(*spec->gfq(), f, "map_M");
    std::vector<u32> e(spec->r(), 0);
    for (u32 k = 0; k < spec->r(); ++k) e[k] = f.coeff(k);
    return {std::move(spec), std::move(e)};
}

Poly map_M_inv(const WordVector& v) {
    return Poly::from_coeffs({v.entries().begin(), v.entries().end()});
}

QMatrix build_q_matrix(const FieldSpec& spec) {
    u32 r = spec.r();
    QMatrix Q;
    Q.m = Matrix(r, 2 * r - 1);
    for (u32 i = 0; i < r; ++i) Q.m.at(i, i) = spec.gfq()->one();
    for (u32 j = 0; j + 1 < r; ++j) {
        auto col = spec.reduction_column(j);
        for (u32 i = 0; i < r; ++i) Q.m.at(i, r + j) = col[i];
    }
    return Q;
}

WordVector word_mul(const WordVector& a, const WordVector& b) {
    require_same(a, b, "word_mul");
    const auto& spec = *a.spec();
    const Field& F = *spec.gfq();
    u32 r = spec.r();
    // convolution of the coefficient vectors, length 2r-1
    std::vector<u32> conv(2 * r - 1, 0);
    for (u32 i = 0; i < r; ++i) {
        u32 ai = a.entries()[i];
        if (ai == 0) continue;
        for (u32 j = 0; j < r; ++j)
            conv[i + j] = F.add(conv[i + j], F.mul(ai, b.entries()[j]));
    }
    // Q matrix application: identity block plus reduction columns
    std::vector<u32> out(conv.begin(), conv.begin() + r);
    for (u32 j = 0; j + 1 < r; ++j) {
        u32 c = conv[r + j];
        if (c == 0) continue;
        auto col = spec.reduction_column(j);
        for (u32 i = 0; i < r; ++i) out[i] = F.add(out[i], F.mul(c, col[i]));
    }
    return {a.spec(), std::move(out)};
}

WordVector word_mul_elementwise(const WordVector& a, const WordVector& b) {
    require_same(a, b, "word_mul_elementwise");
    const Field& F = *a.spec()->gfq();
    std::vector<u32> out(a.spec()->r());
    for (u32 i = 0; i < out.size(); ++i) out[i] = F.mul(a.entries()[i], b.entries()[i]);
    return {a.spec(), std::move(out)};
}

WordVector word_add(const WordVector& a, const WordVector& b) {
    require_same(a, b, "word_add");
    const Field& F = *a.spec()->gfq();
    std::vector<u32> out(a.spec()->r());
    for (u32 i = 0; i < out.size(); ++i) out[i] = F.add(a.entries()[i], b.entries()[i]);
    return {a.spec(), std::move(out)};
}

}  // namespace nlfg::gf
