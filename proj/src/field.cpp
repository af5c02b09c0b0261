#include "nlfg/field.hpp"

#include <sstream>

namespace nlfg::gf {

namespace {

constexpr u64 kMaxOrder = u64(1) << 32;
constexpr u64 kMulTableMax = 512;  // full q x q product table below this

}  // namespace

Field::Field(u32 p) : char_(p), deg_(1), base_order_(p), order_(p), pf_(p) {}

Field::Field(FieldPtr base, Poly mod)
    : base_(std::move(base)),
      mod_(std::move(mod)),
      char_(base_->characteristic()),
      deg_(u32(mod_.degree())),
      base_order_(base_->order()),
      pf_(base_->characteristic()) {
    order_ = 1;
    for (u32 k = 0; k < deg_; ++k) {
        if (order_ > kMaxOrder / base_order_) throw BoundError("Field: order exceeds 2^32");
        order_ *= base_order_;
    }
}

FieldPtr Field::prime(u32 p) {
    if (!is_prime_u32(p)) throw SpecError("Field::prime: modulus must be prime");
    return FieldPtr(new Field(p));
}

FieldPtr Field::extension(FieldPtr base, Poly modulus) {
    if (!base) throw SpecError("Field::extension: null base field");
    poly_validate(*base, modulus, "extension modulus");
    if (modulus.degree() < 2) throw SpecError("Field::extension: modulus degree must be >= 2");
    if (!poly_is_monic(modulus)) throw SpecError("Field::extension: modulus must be monic");
    if (!poly_is_irreducible(*base, modulus))
        throw SpecError("Field::extension: modulus is reducible over " + base->describe());
    auto f = FieldPtr(new Field(std::move(base), std::move(modulus)));
    if (f->order() <= kMulTableMax) {
        auto* mf = const_cast<Field*>(f.get());
        u64 q = f->order();
        mf->mul_table_.assign(std::size_t(q * q), 0);
        mf->inv_table_.assign(std::size_t(q), 0);
        for (u64 a = 0; a < q; ++a)
            for (u64 b = a; b < q; ++b) {
                u32 v = f->mul_slow(u32(a), u32(b));
                mf->mul_table_[std::size_t(a * q + b)] = v;
                mf->mul_table_[std::size_t(b * q + a)] = v;
                if (v == 1) {
                    mf->inv_table_[std::size_t(a)] = u32(b);
                    mf->inv_table_[std::size_t(b)] = u32(a);
                }
            }
    }
    return f;
}

void Field::check(u32 e, const char* what) const {
    if (!valid(e))
        throw SpecError(std::string(what) + ": index " + std::to_string(e) +
                        " out of range for " + describe());
}

u32 Field::add(u32 a, u32 b) const {
    if (is_prime_field()) return pf_.add(a, b);
    if (char_ == 2 && base_->is_prime_field()) return a ^ b;  // GF(2^n) fast path
    u64 q = base_order_;
    u64 out = 0;
    u64 mult = 1;
    for (u32 k = 0; k < deg_; ++k) {
        u32 da = u32(a % q), db = u32(b % q);
        a = u32(a / q);
        b = u32(b / q);
        out += u64(base_->add(da, db)) * mult;
        mult *= q;
    }
    return u32(out);
}

u32 Field::sub(u32 a, u32 b) const {
    if (is_prime_field()) return pf_.sub(a, b);
    if (char_ == 2 && base_->is_prime_field()) return a ^ b;
    u64 q = base_order_;
    u64 out = 0;
    u64 mult = 1;
    for (u32 k = 0; k < deg_; ++k) {
        u32 da = u32(a % q), db = u32(b % q);
        a = u32(a / q);
        b = u32(b / q);
        out += u64(base_->sub(da, db)) * mult;
        mult *= q;
    }
    return u32(out);
}

u32 Field::neg(u32 a) const { return sub(0, a); }

u32 Field::mul_slow(u32 a, u32 b) const {
    // schoolbook product of the digit vectors, reduced modulo mod_ (monic)
    std::vector<u32> da = digits(a), db = digits(b);
    std::vector<u32> prod(2 * deg_ - 1, 0);
    for (u32 i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (u32 j = 0; j < deg_; ++j)
            prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
    }
    for (int k = int(prod.size()) - 1; k >= int(deg_); --k) {
        u32 c = prod[std::size_t(k)];
        if (c == 0) continue;
        prod[std::size_t(k)] = 0;
        for (u32 j = 0; j < deg_; ++j) {
            std::size_t pos = std::size_t(k) - deg_ + j;
            prod[pos] = base_->sub(prod[pos], base_->mul(c, mod_.coeff(j)));
        }
    }
    prod.resize(deg_);
    return from_digits(prod);
}

u32 Field::mul(u32 a, u32 b) const {
    if (is_prime_field()) return pf_.mul(a, b);
    if (!mul_table_.empty()) return mul_table_[std::size_t(u64(a) * order_ + b)];
    return mul_slow(a, b);
}

u32 Field::inv(u32 a) const {
    if (a == 0) throw SpecError("Field::inv: zero has no inverse");
    if (is_prime_field()) return pf_.inv(a);
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, order_ - 2);
}

u32 Field::pow(u32 a, u64 e) const {
    u32 r = one();
    u32 b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::vector<u32> Field::digits(u32 e) const {
    std::vector<u32> d(deg_);
    u64 q = base_order_;
    for (u32 k = 0; k < deg_; ++k) {
        d[k] = u32(e % q);
        e = u32(e / q);
    }
    return d;
}

u32 Field::from_digits(std::span<const u32> d) const {
    if (d.size() != deg_) throw SpecError("Field::from_digits: wrong digit count");
    u64 out = 0;
    u64 mult = 1;
    for (u32 k = 0; k < deg_; ++k) {
        if (d[k] >= base_order_) throw SpecError("Field::from_digits: digit out of range");
        out += d[k] * mult;
        mult *= base_order_;
    }
    return u32(out);
}

bool Field::same_as(const Field& o) const {
    if (this == &o) return true;
    if (is_prime_field() != o.is_prime_field()) return false;
    if (order_ != o.order_) return false;
    if (is_prime_field()) return true;
    return mod_ == o.mod_ && base_->same_as(*o.base_);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << order_ << ")";
    if (!is_prime_field())
        os << " = GF(" << base_order_ << ")[x]/(" << poly_to_string(mod_) << ")";
    return os.str();
}

}  // namespace nlfg::gf
