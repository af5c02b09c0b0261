#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlfg/errors.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gf {

class Field;

/// Dense polynomial, ascending powers. Coefficients are element indices of
/// whichever field the polynomial is used over; no trailing zeros, the zero
/// polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    static Poly from_coeffs(std::vector<u32> coeffs);
    static Poly zero() { return {}; }
    static Poly one() { return from_coeffs({1}); }
    static Poly x() { return from_coeffs({0, 1}); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return int(c_.size()) - 1; }  // -1 for zero
    u32 coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
    u32 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<u32>& coeffs() const noexcept { return c_; }

    bool operator==(const Poly&) const = default;

private:
    std::vector<u32> c_;
};

// Arithmetic with coefficients in F (element indices).
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_scale(const Field& F, u32 k, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_monic(const Field& F, const Poly& a);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic result
Poly poly_powmod(const Field& F, const Poly& base, const BigInt& e, const Poly& mod);
u32 poly_eval(const Field& F, const Poly& a, u32 x);
bool poly_is_monic(const Poly& a);
bool poly_is_irreducible(const Field& F, const Poly& f);  // Rabin's test, f monic

// Coefficients must be valid element indices of F; throws SpecError otherwise.
void poly_validate(const Field& F, const Poly& a, const char* what);

// Text formats: human form "x^3+2x+1" (canonical) and ascending
// comma-separated coefficient list "1,2,0,1".
std::string poly_to_string(const Poly& a);
std::string poly_to_coeff_string(const Poly& a);
Poly poly_parse(const std::string& text);  // accepts both forms

}  // namespace nlfg::gf
