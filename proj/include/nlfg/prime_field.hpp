#pragma once

#include "nlfg/errors.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gf {

bool is_prime_u32(u32 n) noexcept;

/// Z/pZ for prime p; elements are plain integers in [0, p).
class PrimeField {
public:
    explicit PrimeField(u32 p) : p_(p) {
        if (!is_prime_u32(p)) throw SpecError("PrimeField: modulus must be prime");
    }

    u32 modulus() const noexcept { return p_; }

    u32 add(u32 a, u32 b) const noexcept {
        u64 s = u64(a) + b;
        return s >= p_ ? u32(s - p_) : u32(s);
    }
    u32 sub(u32 a, u32 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u32 mul(u32 a, u32 b) const noexcept { return u32(u64(a) * b % p_); }

    u32 pow(u32 a, u64 e) const noexcept;
    u32 inv(u32 a) const;  // throws SpecError on 0

private:
    u32 p_;
};

}  // namespace nlfg::gf
