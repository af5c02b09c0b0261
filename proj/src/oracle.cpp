#include "nlfg/oracle.hpp"

#include <stdexcept>

namespace nlfg::oracle {

namespace {

BigInt bpow(const BigInt& b, u32 e) { return boost::multiprecision::pow(b, e); }

BigInt binomial(u32 n, u32 k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (u32 i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace

void validate(const CountParams& p) {
    if (p.q < 2) throw SpecError("CountParams: q must be >= 2");
    if (p.r < 1) throw SpecError("CountParams: r must be >= 1");
    if (p.m < 1) throw SpecError("CountParams: m must be >= 1");
    if (p.m > p.L / 2) throw SpecError("CountParams: m must be at most floor(L/2)");
    if (p.kappa > p.r) throw SpecError("CountParams: kappa must be at most r");
}

BigInt partition_count(u32 m, u64 q) {
    if (q < 2) throw SpecError("partition_count: q must be >= 2");
    if (m == 0) return 0;
    BigInt psi_nz = BigInt(q) - 1;
    BigInt num = bpow(psi_nz, m) - (m % 2 ? BigInt(-1) : BigInt(1));
    if (num % q != 0)
        throw std::logic_error("partition_count: (psi_nz^m - (-1)^m) not divisible by q");
    return num / q;
}

BigInt partition_count_recursive(u32 m, u64 q) {
    if (q < 2) throw SpecError("partition_count: q must be >= 2");
    BigInt psi_nz = BigInt(q) - 1;
    BigInt s = 0;  // |S_0(K)| = 0
    for (u32 k = 1; k <= m; ++k) s = bpow(psi_nz, k - 1) - s;
    return s;
}

BigInt psi_m(u32 m, u64 q, bool zero_target) {
    if (m < 1) throw SpecError("psi_m: m must be >= 1");
    if (q < 2) throw SpecError("psi_m: q must be >= 2");
    BigInt Q(q);
    if (zero_target) return bpow(Q, m - 1) * (bpow(Q, m) + Q - 1);
    return bpow(Q, m - 1) * (bpow(Q, m) - 1);
}

BigInt psi_m_via_partition_sum(u32 m, u64 q) {
    if (m < 1) throw SpecError("psi_m_via_partition_sum: m must be >= 1");
    BigInt psi_z = 2 * BigInt(q) - 1;
    BigInt psi_nz = BigInt(q) - 1;
    BigInt total = 0;
    for (u32 i = 0; i < m; ++i)
        total += binomial(m, i) * bpow(psi_z, i) * bpow(psi_nz, m - i) * partition_count(m - i, q);
    return total;
}

BigInt n_scalar(const CountParams& p, bool zero_target) {
    validate(p);
    if (p.r != 1) throw SpecError("n_scalar: requires r = 1");
    BigInt Q(p.q);
    BigInt lead = bpow(Q, p.L - p.m - 1);
    if (zero_target) return lead * (bpow(Q, p.m) + Q - 1) - 1;
    return lead * (bpow(Q, p.m) - 1);
}

BigInt n_proposed(const CountParams& p, bool zero_target) {
    validate(p);
    BigInt Q(p.q);
    BigInt lead = bpow(Q, p.r * (p.L - p.m - 1));
    if (zero_target) return lead * (bpow(Q, p.r * p.m) + bpow(Q, p.r) - 1) - 1;
    return lead * (bpow(Q, p.r * p.m) - 1);
}

BigInt psi_elementwise(u32 m, u64 q, u32 r, u32 kappa) {
    if (m < 1) throw SpecError("psi_elementwise: m must be >= 1");
    if (kappa > r) throw SpecError("psi_elementwise: kappa must be at most r");
    BigInt Q(q);
    return bpow(bpow(Q, m - 1), r) * bpow(bpow(Q, m) - 1, kappa) *
           bpow(bpow(Q, m) + Q - 1, r - kappa);
}

BigInt n_elementwise(const CountParams& p, bool zero_target) {
    validate(p);
    if (zero_target && p.kappa != 0)
        throw SpecError("n_elementwise: the zero vector has kappa = 0");
    if (!zero_target && p.kappa == 0)
        throw SpecError("n_elementwise: kappa = 0 means the zero vector; pass zero_target");
    BigInt Q(p.q);
    BigInt lead = bpow(Q, p.r * (p.L - p.m - 1));
    BigInt body = bpow(bpow(Q, p.m) - 1, p.kappa) * bpow(bpow(Q, p.m) + Q - 1, p.r - p.kappa);
    return zero_target ? lead * body - 1 : lead * body;
}

BigRat balance_deviation(const CountParams& p) {
    validate(p);
    BigInt period = bpow(BigInt(p.q), p.r * p.L) - 1;
    BigRat target(1, bpow(BigInt(p.q), p.r));
    BigRat dev_nz = BigRat(n_proposed(p, false), period) - target;
    BigRat dev_z = BigRat(n_proposed(p, true), period) - target;
    if (dev_nz < 0) dev_nz = -dev_nz;
    if (dev_z < 0) dev_z = -dev_z;
    return std::max(dev_nz, dev_z);
}

std::map<u64, u64> brute_assembly_census(u32 m, const gf::FieldSpec& spec, gen::MulMode mode,
                                         u64 max_inputs) {
    if (m < 1) throw SpecError("brute_assembly_census: m must be >= 1");
    const auto& Fqr = *spec.gfqr();
    u64 qr = Fqr.order();
    u32 r = spec.r();
    BigInt total = boost::multiprecision::pow(BigInt(qr), 2 * m);
    if (total > max_inputs)
        throw BoundError("census size q^(2rm) = " + total.str() + " exceeds the bound " +
                         std::to_string(max_inputs));
    u64 n = u64(total);

    // digit views of GF(q^r) indices, for the element-wise product
    const auto& Fq = *spec.gfq();
    std::vector<u32> digit_of;  // qr * r
    if (mode == gen::MulMode::ElementWise && r > 1) {
        digit_of.resize(std::size_t(qr) * r);
        for (u64 v = 0; v < qr; ++v) {
            auto d = Fqr.digits(u32(v));
            std::copy(d.begin(), d.end(), digit_of.begin() + std::size_t(v) * r);
        }
    }

    std::map<u64, u64> hist;
    std::vector<u32> w(2 * m);
    for (u64 idx = 0; idx < n; ++idx) {
        u64 t = idx;
        for (u32 k = 0; k < 2 * m; ++k) {
            w[k] = u32(t % qr);
            t /= qr;
        }
        u64 key;
        if (mode == gen::MulMode::FieldProduct || r == 1) {
            u32 acc = 0;
            for (u32 k = 0; k < m; ++k) acc = Fqr.add(acc, Fqr.mul(w[2 * k], w[2 * k + 1]));
            key = acc;
        } else {
            u64 packed = 0;
            u64 mult = 1;
            for (u32 i = 0; i < r; ++i) {
                u32 acc = 0;
                for (u32 k = 0; k < m; ++k)
                    acc = Fq.add(acc, Fq.mul(digit_of[std::size_t(w[2 * k]) * r + i],
                                             digit_of[std::size_t(w[2 * k + 1]) * r + i]));
                packed += acc * mult;
                mult *= spec.q();
            }
            key = packed;
        }
        ++hist[key];
    }
    return hist;
}

}  // namespace nlfg::oracle
