#include "nlfg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nlfg/field.hpp"

namespace nlfg::gf {

Poly Poly::from_coeffs(std::vector<u32> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    Poly p;
    p.c_ = std::move(coeffs);
    return p;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<u32> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = F.add(a.coeff(k), b.coeff(k));
    return Poly::from_coeffs(std::move(c));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<u32> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = F.sub(a.coeff(k), b.coeff(k));
    return Poly::from_coeffs(std::move(c));
}

Poly poly_neg(const Field& F, const Poly& a) {
    std::vector<u32> c(a.coeffs());
    for (auto& v : c) v = F.neg(v);
    return Poly::from_coeffs(std::move(c));
}

Poly poly_scale(const Field& F, u32 k, const Poly& a) {
    std::vector<u32> c(a.coeffs());
    for (auto& v : c) v = F.mul(k, v);
    return Poly::from_coeffs(std::move(c));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<u32> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        u32 ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
    }
    return Poly::from_coeffs(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw SpecError("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    u32 lead_inv = F.inv(b.leading());
    std::vector<u32> rem(a.coeffs());
    std::vector<u32> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
    for (int k = int(rem.size()) - 1; k >= b.degree(); --k) {
        u32 f = F.mul(rem[std::size_t(k)], lead_inv);
        if (f == 0) continue;
        quot[std::size_t(k - b.degree())] = f;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            std::size_t pos = std::size_t(k - b.degree()) + j;
            rem[pos] = F.sub(rem[pos], F.mul(f, b.coeff(j)));
        }
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.leading() == F.one()) return a;
    return poly_scale(F, F.inv(a.leading()), a);
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_powmod(const Field& F, const Poly& base, const BigInt& e, const Poly& mod) {
    if (e < 0) throw SpecError("poly_powmod: negative exponent");
    Poly result = poly_mod(F, Poly::one(), mod);
    Poly b = poly_mod(F, base, mod);
    BigInt n = e;
    while (n > 0) {
        if (boost::multiprecision::bit_test(n, 0)) result = poly_mod(F, poly_mul(F, result, b), mod);
        b = poly_mod(F, poly_mul(F, b, b), mod);
        n >>= 1;
    }
    return result;
}

u32 poly_eval(const Field& F, const Poly& a, u32 x) {
    u32 acc = 0;
    for (int k = a.degree(); k >= 0; --k) acc = F.add(F.mul(acc, x), a.coeff(std::size_t(k)));
    return acc;
}

bool poly_is_monic(const Poly& a) { return !a.is_zero() && a.leading() == 1; }

namespace {

std::vector<u32> small_prime_factors(u32 n) {
    std::vector<u32> out;
    for (u32 d = 2; u64(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool poly_is_irreducible(const Field& F, const Poly& f) {
    if (!poly_is_monic(f)) throw SpecError("poly_is_irreducible: polynomial must be monic");
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    BigInt Q = F.order();
    // Rabin: x^(Q^d) == x mod f, and gcd(x^(Q^(d/t)) - x, f) == 1 for prime t | d.
    Poly x = Poly::x();
    for (u32 t : small_prime_factors(u32(d))) {
        BigInt e = boost::multiprecision::pow(Q, unsigned(d) / t);
        Poly xq = poly_powmod(F, x, e, f);
        Poly g = poly_gcd(F, poly_sub(F, xq, x), f);
        if (g.degree() != 0) return false;
    }
    Poly xqd = poly_powmod(F, x, boost::multiprecision::pow(Q, unsigned(d)), f);
    return poly_sub(F, xqd, x).is_zero();
}

void poly_validate(const Field& F, const Poly& a, const char* what) {
    for (u32 v : a.coeffs())
        if (!F.valid(v))
            throw SpecError(std::string(what) + ": coefficient " + std::to_string(v) +
                            " is not an element of " + F.describe());
}

std::string poly_to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        u32 v = a.coeff(std::size_t(k));
        if (v == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) {
            os << v;
        } else {
            if (v != 1) os << v;
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string poly_to_coeff_string(const Poly& a) {
    std::ostringstream os;
    for (int k = 0; k <= std::max(a.degree(), 0); ++k) {
        if (k) os << ",";
        os << a.coeff(std::size_t(k));
    }
    return os.str();
}

namespace {

Poly parse_coeff_list(const std::string& s) {
    std::vector<u32> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            throw SpecError("polynomial: bad coefficient '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw SpecError("polynomial: bad coefficient '" + tok + "'");
        c.push_back(u32(v));
    }
    if (c.empty()) throw SpecError("polynomial: empty coefficient list");
    return Poly::from_coeffs(std::move(c));
}

// One term of the human form: [coef][*][x[^exp]]
void parse_term(const std::string& t, std::vector<u32>& acc) {
    std::size_t i = 0;
    auto fail = [&] { throw SpecError("polynomial: bad term '" + t + "'"); };
    if (t.empty()) fail();
    u64 coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        coef = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            coef = coef * 10 + u64(t[i++] - '0');
        have_coef = true;
    }
    if (i < t.size() && t[i] == '*') ++i;
    u64 exp = 0;
    if (i < t.size()) {
        if (t[i] != 'x' && t[i] != 'X') fail();
        ++i;
        exp = 1;
        if (i < t.size()) {
            if (t[i] != '^') fail();
            ++i;
            if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) fail();
            exp = 0;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
                exp = exp * 10 + u64(t[i++] - '0');
        }
    } else if (!have_coef) {
        fail();
    }
    if (i != t.size()) fail();
    if (exp > 4096) throw SpecError("polynomial: exponent too large");
    if (coef > 0xffffffffull) throw SpecError("polynomial: coefficient too large");
    if (acc.size() <= exp) acc.resize(std::size_t(exp) + 1, 0);
    // repeated exponents accumulate as plain integers; field reduction is the
    // caller's job via poly_validate, so reject instead of guessing a modulus
    if (acc[std::size_t(exp)] != 0) throw SpecError("polynomial: repeated exponent in '" + t + "'");
    acc[std::size_t(exp)] = u32(coef);
}

}  // namespace

Poly poly_parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw SpecError("polynomial: empty string");
    if (s.find(',') != std::string::npos) return parse_coeff_list(s);
    if (s == "0") return Poly::zero();
    if (s.find('x') == std::string::npos && s.find('X') == std::string::npos &&
        s.find('+') == std::string::npos)
        return parse_coeff_list(s);  // bare constant
    std::vector<u32> acc;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t plus = s.find('+', start);
        std::string term = s.substr(start, plus == std::string::npos ? plus : plus - start);
        parse_term(term, acc);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return Poly::from_coeffs(std::move(acc));
}

}  // namespace nlfg::gf
