#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nlfg/poly.hpp"
#include "nlfg/prime_field.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field, either GF(p) or an extension of another Field by a monic
/// irreducible polynomial. Elements are canonical indices in [0, order):
/// the index encodes the coefficient vector over the base field in mixed
/// radix (digit k is the coefficient of x^k, least significant first).
/// Immutable after construction; all operations are pure.
class Field {
public:
    static FieldPtr prime(u32 p);
    // modulus: monic, irreducible over base, degree >= 2 (degree-1 towers are
    // the base field itself). Irreducibility is verified here; primitivity is
    // the caller's concern.
    static FieldPtr extension(FieldPtr base, Poly modulus);

    bool is_prime_field() const noexcept { return base_ == nullptr; }
    u32 characteristic() const noexcept { return char_; }
    u64 order() const noexcept { return order_; }
    u32 ext_degree() const noexcept { return deg_; }  // over base; 1 for GF(p)
    const FieldPtr& base() const noexcept { return base_; }
    const Poly& modulus() const noexcept { return mod_; }

    u32 add(u32 a, u32 b) const;
    u32 sub(u32 a, u32 b) const;
    u32 neg(u32 a) const;
    u32 mul(u32 a, u32 b) const;
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;

    u32 zero() const noexcept { return 0; }
    u32 one() const noexcept { return 1 % order_; }

    bool valid(u32 e) const noexcept { return e < order_; }
    void check(u32 e, const char* what) const;

    /// Coefficient vector over the base field, length ext_degree().
    std::vector<u32> digits(u32 e) const;
    u32 from_digits(std::span<const u32> d) const;

    /// Structural equality: same tower of moduli over the same prime.
    bool same_as(const Field& o) const;

    std::string describe() const;  // e.g. "GF(8) = GF(2)[x]/(x^3+x+1)"

private:
    Field(u32 p);
    Field(FieldPtr base, Poly mod);
    u32 mul_slow(u32 a, u32 b) const;

    FieldPtr base_;             // null for prime fields
    Poly mod_;                  // empty for prime fields
    u32 char_ = 0;
    u32 deg_ = 1;
    u64 base_order_ = 0;
    u64 order_ = 0;
    PrimeField pf_;             // prime layer arithmetic
    std::vector<u32> mul_table_;  // built for small extension fields
    std::vector<u32> inv_table_;
};

}  // namespace nlfg::gf
