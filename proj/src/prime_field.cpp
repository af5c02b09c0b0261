#include "nlfg/prime_field.hpp"

namespace nlfg::gf {

bool is_prime_u32(u32 n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

u32 PrimeField::pow(u32 a, u64 e) const noexcept {
    u32 r = 1 % p_;
    u32 b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

u32 PrimeField::inv(u32 a) const {
    if (a % p_ == 0) throw SpecError("PrimeField::inv: zero has no inverse");
    // extended Euclid on (a, p)
    i64 t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p_;
    return u32(t);
}

}  // namespace nlfg::gf
