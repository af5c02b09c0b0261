#pragma once

#include <optional>
#include <vector>

#include "nlfg/field.hpp"
#include "nlfg/poly.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gf {

/// Distinct prime factors, via trial division up to `trial_limit` plus a
/// primality test on the cofactor. Throws CertifyError when the cofactor is
/// composite and out of reach.
std::vector<BigInt> distinct_prime_factors(BigInt n, u64 trial_limit = 1u << 20);

/// True iff f (monic, over F) is irreducible and x generates the full
/// multiplicative group of F[x]/(f), i.e. ord(x) = |F|^deg(f) - 1.
bool is_primitive(const Field& F, const Poly& f);

/// First primitive monic polynomial of the given degree over F, scanning
/// lexicographically by packed coefficient index. Deterministic.
Poly find_primitive(const Field& F, u32 degree);

/// Built-in primitive polynomial, if shipped: degrees 1-16 over GF(2),
/// small degrees over GF(3), GF(4), GF(5). Keyed by field order.
std::optional<Poly> builtin_primitive_poly(u64 field_order, u32 degree);

}  // namespace nlfg::gf
