#include "nlfg/primitivity.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <random>
#include <sstream>

namespace nlfg::gf {

std::vector<BigInt> distinct_prime_factors(BigInt n, u64 trial_limit) {
    if (n < 1) throw SpecError("distinct_prime_factors: n must be positive");
    std::vector<BigInt> primes;
    auto strip = [&](const BigInt& d) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d <= trial_limit && BigInt(d) * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) {
        if (BigInt(trial_limit) * trial_limit > n) {
            primes.push_back(n);  // below the trial square, so prime
        } else {
            std::mt19937_64 rng(0x5eedf00du);
            if (boost::multiprecision::miller_rabin_test(n, 32, rng)) {
                primes.push_back(n);
            } else {
                std::ostringstream os;
                os << "too large to certify: cofactor " << n
                   << " is composite and exceeds the trial-division bound";
                throw CertifyError(os.str());
            }
        }
    }
    return primes;
}

bool is_primitive(const Field& F, const Poly& f) {
    if (!poly_is_monic(f)) throw SpecError("is_primitive: polynomial must be monic");
    int d = f.degree();
    if (d < 1) throw SpecError("is_primitive: degree must be >= 1");
    if (f.coeff(0) == 0) return false;  // x divides f, or root 0 for d = 1
    poly_validate(F, f, "is_primitive");
    if (d > 1 && !poly_is_irreducible(F, f)) return false;
    BigInt group = boost::multiprecision::pow(BigInt(F.order()), unsigned(d)) - 1;
    Poly x = Poly::x();
    if (poly_powmod(F, x, group, f) != poly_mod(F, Poly::one(), f)) return false;
    for (const BigInt& ell : distinct_prime_factors(group))
        if (poly_powmod(F, x, group / ell, f) == Poly::one()) return false;
    return true;
}

Poly find_primitive(const Field& F, u32 degree) {
    if (degree < 1) throw SpecError("find_primitive: degree must be >= 1");
    u64 q = F.order();
    BigInt span = boost::multiprecision::pow(BigInt(q), degree);
    if (span > (u64(1) << 30)) throw BoundError("find_primitive: search space beyond desk scale");
    for (u64 idx = 1; idx < u64(span); ++idx) {
        // idx encodes the non-leading coefficients, base q ascending
        std::vector<u32> c(degree + 1, 0);
        u64 t = idx;
        for (u32 k = 0; k < degree; ++k) {
            c[k] = u32(t % q);
            t /= q;
        }
        if (c[0] == 0) continue;
        c[degree] = 1;
        Poly f = Poly::from_coeffs(std::move(c));
        if (is_primitive(F, f)) return f;
    }
    throw SpecError("find_primitive: no primitive polynomial found (not a field?)");
}

namespace {

struct TableEntry {
    u64 q;
    u32 degree;
    const char* poly;
};

// Verified by the primitivity test in this library (see tests). Coefficients
// are element indices: for GF(4), 2 denotes the class of x in GF(2)[x]/(x^2+x+1);
// for GF(5), plain residues mod 5.
constexpr TableEntry kTable[] = {
    {2, 1, "x+1"},
    {2, 2, "x^2+x+1"},
    {2, 3, "x^3+x+1"},
    {2, 4, "x^4+x+1"},
    {2, 5, "x^5+x^2+1"},
    {2, 6, "x^6+x+1"},
    {2, 7, "x^7+x+1"},
    {2, 8, "x^8+x^4+x^3+x^2+1"},
    {2, 9, "x^9+x^4+1"},
    {2, 10, "x^10+x^3+1"},
    {2, 11, "x^11+x^2+1"},
    {2, 12, "x^12+x^6+x^4+x+1"},
    {2, 13, "x^13+x^4+x^3+x+1"},
    {2, 14, "x^14+x^10+x^6+x+1"},
    {2, 15, "x^15+x+1"},
    {2, 16, "x^16+x^12+x^3+x+1"},
    {3, 1, "x+1"},
    {3, 2, "x^2+x+2"},
    {3, 3, "x^3+2x+1"},
    {3, 4, "x^4+x+2"},
    {3, 5, "x^5+2x+1"},
    {3, 6, "x^6+x+2"},
    {4, 1, "x+2"},
    {4, 2, "x^2+x+2"},
    {4, 3, "x^3+x^2+x+2"},
    {4, 4, "x^4+x^3+2"},
    {5, 1, "x+2"},
    {5, 2, "x^2+x+2"},
    {5, 3, "x^3+x^2+2"},
    {5, 4, "x^4+x^2+2x+2"},
};

}  // namespace

std::optional<Poly> builtin_primitive_poly(u64 field_order, u32 degree) {
    for (const auto& e : kTable)
        if (e.q == field_order && e.degree == degree) return poly_parse(e.poly);
    return std::nullopt;
}

}  // namespace nlfg::gf
