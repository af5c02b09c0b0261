#include "nlfg/analysis.hpp"

#include <algorithm>
#include <thread>

#include "nlfg/primitivity.hpp"

namespace nlfg::analysis {

using gen::MulMode;
using gf::Field;
using gf::FieldSpec;
using gf::Poly;

u32 kappa_of_key(u64 key, u64 q, u32 r) {
    u32 k = 0;
    for (u32 i = 0; i < r; ++i) {
        k += (key % q) != 0;
        key /= q;
    }
    return k;
}

namespace {

// Allocation-free assembly evaluation on stacked states; mirrors
// gen::assembly_output (field product via the Q columns).
class GenericEval {
public:
    GenericEval(const gf::SpecPtr& spec, const gen::TapAssembly& assembly)
        : spec_(spec),
          Fq_(*spec->gfq()),
          r_(spec->r()),
          mode_(assembly.mode()),
          pairs_(assembly.pairs()),
          conv_(2 * r_ - 1),
          out_(r_) {}

    u64 eval(std::span<const u32> st) {
        std::fill(out_.begin(), out_.end(), 0u);
        for (auto [a, b] : pairs_) {
            const u32* u = st.data() + std::size_t(a) * r_;
            const u32* v = st.data() + std::size_t(b) * r_;
            if (mode_ == MulMode::ElementWise) {
                for (u32 i = 0; i < r_; ++i) out_[i] = Fq_.add(out_[i], Fq_.mul(u[i], v[i]));
            } else {
                std::fill(conv_.begin(), conv_.end(), 0u);
                for (u32 i = 0; i < r_; ++i) {
                    if (u[i] == 0) continue;
                    for (u32 j = 0; j < r_; ++j)
                        conv_[i + j] = Fq_.add(conv_[i + j], Fq_.mul(u[i], v[j]));
                }
                for (u32 i = 0; i < r_; ++i) out_[i] = Fq_.add(out_[i], conv_[i]);
                for (u32 j = 0; j + 1 < r_; ++j) {
                    u32 c = conv_[r_ + j];
                    if (c == 0) continue;
                    auto col = spec_->reduction_column(j);
                    for (u32 i = 0; i < r_; ++i)
                        out_[i] = Fq_.add(out_[i], Fq_.mul(c, col[i]));
                }
            }
        }
        u64 key = 0;
        u64 mult = 1;
        for (u32 i = 0; i < r_; ++i) {
            key += out_[i] * mult;
            mult *= spec_->q();
        }
        return key;
    }

private:
    gf::SpecPtr spec_;
    const Field& Fq_;
    u32 r_;
    MulMode mode_;
    std::vector<std::pair<u32, u32>> pairs_;
    std::vector<u32> conv_, out_;
};

bool packable(const FieldSpec& spec, u32 L, u32 m) {
    return spec.p() == 2 && spec.n() == 1 && spec.r() <= kern::kMaxR &&
           spec.r() * L <= kern::kMaxBits && m <= kern::kMaxM;
}

u64 pack_state_bits(std::span<const u32> st) {
    u64 s = 0;
    for (std::size_t i = 0; i < st.size(); ++i) s |= u64(st[i] & 1) << i;
    return s;
}

kern::PackedNlfg make_packed(const reg::SigmaLfsrConfig& cfg, const gen::TapAssembly& assembly) {
    kern::PackedNlfg p;
    p.L = cfg.length();
    p.r = cfg.r();
    p.m = assembly.multiplier_count();
    p.elementwise = assembly.mode() == MulMode::ElementWise;
    for (u32 i = 0; i < p.r; ++i) {
        u64 mask = 0;
        for (u32 j = 0; j < p.L; ++j)
            for (u32 k = 0; k < p.r; ++k)
                mask |= u64(cfg.gains()[j].at(i, k) & 1) << (j * p.r + k);
        p.feedback[i] = mask;
    }
    for (u32 k = 0; k < p.m; ++k) {
        p.pair_a[k] = u8(assembly.pairs()[k].first);
        p.pair_b[k] = u8(assembly.pairs()[k].second);
    }
    if (!p.elementwise)
        for (u32 j = 0; j + 1 < p.r; ++j) {
            auto col = cfg.spec()->reduction_column(j);
            u32 mask = 0;
            for (u32 i = 0; i < p.r; ++i) mask |= (col[i] & 1) << i;
            p.reduce[j] = mask;
        }
    return p;
}

struct Chunk {
    u64 offset;
    u64 length;
    std::vector<u32> seed;
};

std::vector<Chunk> make_chunks(const reg::SigmaLfsrConfig& cfg, u64 period, u32 count) {
    std::vector<Chunk> chunks;
    u64 base = period / count, rem = period % count;
    const Field& F = *cfg.spec()->gfq();
    gf::Matrix A = transition_matrix(cfg);
    u64 offset = 0;
    for (u32 i = 0; i < count; ++i) {
        u64 len = base + (i < rem ? 1 : 0);
        if (len == 0) break;
        Chunk c;
        c.offset = offset;
        c.length = len;
        c.seed = mat_vec(F, mat_pow(F, A, offset), cfg.state());
        chunks.push_back(std::move(c));
        offset += len;
    }
    return chunks;
}

kern::Kind resolve_kernel(kern::Kind requested, bool can_pack) {
    if (requested == kern::Kind::Auto)
        return can_pack ? kern::detect() : kern::Kind::Generic;
    if (requested == kern::Kind::Generic) return requested;
    if (!can_pack)
        throw SpecError("requested kernel needs q = 2 and a desk-scale packed layout");
    if (!kern::kind_available(requested))
        throw SpecError(std::string("kernel '") + kern::kind_name(requested) +
                        "' is not available on this CPU");
    return requested;
}

}  // namespace

DistributionTable measure_distribution(const gen::Generator& g, const MeasureOptions& opt) {
    auto sigma = g.sigma_view();
    const auto& spec = g.spec();
    u32 r = spec->r(), L = sigma.length(), m = g.assembly().multiplier_count();

    bool nonzero = false;
    for (u32 v : sigma.state()) nonzero |= (v != 0);
    if (!nonzero) throw SpecError("measure_distribution: zero seed");
    if (!reg::is_primitive_config(sigma))
        throw SpecError(
            "measure_distribution: register characteristic polynomial is not primitive");
    u64 period = reg::full_period_length(*spec, L, opt.max_states);

    BigInt alphabet_big = boost::multiprecision::pow(BigInt(spec->q()), r);
    if (alphabet_big > (u64(1) << 24))
        throw BoundError("output alphabet q^r exceeds 2^24");
    u64 alphabet = u64(alphabet_big);

    kern::Kind kind = resolve_kernel(opt.kernel, packable(*spec, L, m));
    u32 threads = std::clamp<u32>(opt.threads, 1, 64);
    u32 lanes = kind == kern::Kind::Avx2 ? 4 : 1;
    u64 want = u64(threads) * lanes;
    if (period < want * 16) threads = 1;  // not worth splitting

    auto chunks = make_chunks(sigma, period, threads * lanes);
    std::vector<std::vector<u64>> hists(threads, std::vector<u64>(alphabet, 0));

    auto run_span = [&](u32 t, u32 first, u32 count) {
        u64* hist = hists[t].data();
        if (kind == kern::Kind::Generic) {
            GenericEval eval(spec, g.assembly());
            reg::StateEngine eng(sigma);
            for (u32 c = first; c < first + count; ++c) {
                eng.set_state(chunks[c].seed);
                for (u64 n = 0; n < chunks[c].length; ++n) {
                    ++hist[eval.eval(eng.state())];
                    eng.step();
                }
            }
            return;
        }
        kern::PackedNlfg pk = make_packed(sigma, g.assembly());
        if (kind == kern::Kind::Avx2) {
            u32 c = first;
            while (c < first + count) {
                u32 group = std::min<u32>(4, first + count - c);
                if (group == 4) {
                    u64 states[4];
                    u64 common = chunks[c].length;
                    for (u32 i = 0; i < 4; ++i) {
                        states[i] = pack_state_bits(chunks[c + i].seed);
                        common = std::min(common, chunks[c + i].length);
                    }
                    kern::dist_avx2x4(pk, states, common, hist);
                    for (u32 i = 0; i < 4; ++i)
                        if (u64 rest = chunks[c + i].length - common)
                            kern::dist_packed(pk, states[i], rest, hist);
                } else {
                    for (u32 i = 0; i < group; ++i) {
                        u64 st = pack_state_bits(chunks[c + i].seed);
                        kern::dist_packed(pk, st, chunks[c + i].length, hist);
                    }
                }
                c += group;
            }
        } else {
            for (u32 c = first; c < first + count; ++c) {
                u64 st = pack_state_bits(chunks[c].seed);
                kern::dist_packed(pk, st, chunks[c].length, hist);
            }
        }
    };

    if (threads == 1) {
        run_span(0, 0, u32(chunks.size()));
    } else {
        std::vector<std::thread> pool;
        u32 per = u32(chunks.size()) / threads;
        u32 extra = u32(chunks.size()) % threads;
        u32 first = 0;
        for (u32 t = 0; t < threads; ++t) {
            u32 count = per + (t < extra ? 1 : 0);
            pool.emplace_back(run_span, t, first, count);
            first += count;
        }
        for (auto& th : pool) th.join();
    }

    DistributionTable table;
    table.info = {spec->q(), r, L, m, g.assembly().mode()};
    table.period = period;
    for (u64 key = 0; key < alphabet; ++key) {
        u64 total = 0;
        for (const auto& h : hists) total += h[key];
        if (total) table.counts.emplace(key, total);
    }
    return table;
}

LcReport berlekamp_massey(const Field& F, std::span<const u32> seq) {
    if (seq.empty()) throw SpecError("berlekamp_massey: empty sequence");
    for (u32 v : seq) F.check(v, "berlekamp_massey");

    std::vector<u32> C{F.one()}, B{F.one()};
    u32 L = 0;
    u64 m = 1;
    u32 b = F.one();
    std::size_t last_change = 0;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        u32 d = seq[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i)
            d = F.add(d, F.mul(C[i], seq[n - i]));
        if (d == 0) {
            ++m;
            continue;
        }
        last_change = n;
        u32 coef = F.mul(d, F.inv(b));
        bool lengthen = 2 * L <= n;
        std::vector<u32> T;
        if (lengthen) T = C;
        if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
        for (std::size_t i = 0; i < B.size(); ++i)
            C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
        if (lengthen) {
            L = u32(n + 1 - L);
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            ++m;
        }
    }

    LcReport rep;
    rep.linear_complexity = L;
    std::vector<u32> p(L + 1, 0);
    for (u32 k = 0; k <= L; ++k) {
        u32 ck = L - k < C.size() ? C[L - k] : 0;
        p[k] = k == L ? F.one() : F.neg(ck);
    }
    rep.minimal_poly = Poly::from_coeffs(std::move(p));
    rep.stabilized = last_change < seq.size() / 2;

    // the reported LFSR must regenerate the analyzed prefix exactly
    for (std::size_t n = L; n < seq.size(); ++n) {
        u32 pred = 0;
        for (u32 i = 0; i < L; ++i)
            pred = F.add(pred, F.mul(rep.minimal_poly.coeff(i), seq[n - L + i]));
        if (pred != seq[n])
            throw std::logic_error("berlekamp_massey: minimal LFSR fails to regenerate prefix");
    }
    return rep;
}

ReconcileReport reconcile(const DistributionTable& table, const oracle::CountParams& params,
                          MulMode mode) {
    oracle::validate(params);
    if (table.info.q != params.q || table.info.r != params.r || table.info.L != params.L ||
        table.info.m != params.m || table.info.mode != mode)
        throw SpecError("reconcile: parameters do not match the table's provenance");

    ReconcileReport rep;
    rep.params = params;
    rep.mode = mode;
    rep.period = table.period;
    rep.pass = true;

    u64 alphabet = 1;
    for (u32 i = 0; i < params.r; ++i) alphabet *= params.q;
    u64 measured_total = 0;
    for (u64 key = 0; key < alphabet; ++key) {
        ReconcileRow row;
        row.key = key;
        u64 t = key;
        for (u32 i = 0; i < params.r; ++i) {
            row.value.push_back(u32(t % params.q));
            t /= params.q;
        }
        row.kappa = kappa_of_key(key, params.q, params.r);
        auto it = table.counts.find(key);
        row.measured = it == table.counts.end() ? 0 : it->second;
        measured_total += row.measured;
        if (mode == MulMode::FieldProduct) {
            row.expected = oracle::n_proposed(params, key == 0);
        } else {
            oracle::CountParams pk = params;
            pk.kappa = row.kappa;
            row.expected = oracle::n_elementwise(pk, key == 0);
        }
        row.match = BigInt(row.measured) == row.expected;
        rep.pass = rep.pass && row.match;
        rep.rows.push_back(std::move(row));
    }
    rep.pass = rep.pass && measured_total == table.period;
    return rep;
}

CompareReport compare_schemes(const oracle::CountParams& params, const MeasureOptions& opt) {
    oracle::validate(params);
    auto spec = FieldSpec::word(params.q, params.r);
    Poly g;
    if (auto t = gf::builtin_primitive_poly(spec->qr(), params.L))
        g = *t;
    else
        g = gf::find_primitive(*spec->gfqr(), params.L);

    auto reg = reg::construct_sigma(spec, g);
    gen::Generator gen_field(reg, gen::TapAssembly::adjacent(params.m, MulMode::FieldProduct));
    gen::Generator gen_elem(reg, gen::TapAssembly::adjacent(params.m, MulMode::ElementWise));

    DistributionTable t_field = measure_distribution(gen_field, opt);
    DistributionTable t_elem = measure_distribution(gen_elem, opt);
    ReconcileReport r_field = reconcile(t_field, params, MulMode::FieldProduct);
    ReconcileReport r_elem = reconcile(t_elem, params, MulMode::ElementWise);

    CompareReport rep;
    rep.params = params;
    rep.period = t_field.period;
    rep.register_poly = g;
    rep.measured_matches = r_field.pass && r_elem.pass;

    BigInt period(rep.period);
    BigRat target(1, boost::multiprecision::pow(BigInt(params.q), params.r));
    auto dev = [&](const BigInt& count) {
        BigRat d = BigRat(count, period) - target;
        return d < 0 ? BigRat(-d) : d;
    };

    u64 mp_min = ~u64(0), mp_max = 0;  // measured proposed, nonzero values
    for (u32 kappa = 0; kappa <= params.r; ++kappa) {
        CompareKappaRow row;
        row.kappa = kappa;
        BigInt vecs = 1;
        {  // C(r, kappa) * (q-1)^kappa
            BigInt c = 1;
            for (u32 i = 0; i < kappa; ++i) {
                c *= params.r - i;
                c /= i + 1;
            }
            vecs = c * boost::multiprecision::pow(BigInt(params.q) - 1, kappa);
        }
        row.vectors = u64(vecs);
        oracle::CountParams pk = params;
        pk.kappa = kappa;
        row.oracle_elementwise = oracle::n_elementwise(pk, kappa == 0);
        row.oracle_proposed = oracle::n_proposed(params, kappa == 0);
        row.measured_elementwise_min = ~u64(0);
        row.measured_proposed_min = ~u64(0);
        for (const auto& r_row : r_elem.rows) {
            if (r_row.kappa != kappa) continue;
            row.measured_elementwise_min = std::min(row.measured_elementwise_min, r_row.measured);
            row.measured_elementwise_max = std::max(row.measured_elementwise_max, r_row.measured);
        }
        for (const auto& r_row : r_field.rows) {
            if (r_row.kappa != kappa) continue;
            row.measured_proposed_min = std::min(row.measured_proposed_min, r_row.measured);
            row.measured_proposed_max = std::max(row.measured_proposed_max, r_row.measured);
            if (kappa > 0) {
                mp_min = std::min(mp_min, r_row.measured);
                mp_max = std::max(mp_max, r_row.measured);
            }
        }
        rep.rows.push_back(std::move(row));
    }

    rep.proposed_nonzero_uniform = mp_min == mp_max;
    rep.deviation_proposed = oracle::balance_deviation(params);
    rep.deviation_elementwise = 0;
    BigInt ew_min, ew_max, pr_nz;
    bool decreasing = true;
    for (u32 kappa = 0; kappa <= params.r; ++kappa) {
        const auto& row = rep.rows[kappa];
        BigRat d = dev(row.oracle_elementwise);
        if (d > rep.deviation_elementwise) rep.deviation_elementwise = d;
        if (kappa > 0 && !(row.oracle_elementwise < rep.rows[kappa - 1].oracle_elementwise))
            decreasing = false;
        if (kappa == 1) {
            ew_min = ew_max = row.oracle_elementwise;
            pr_nz = row.oracle_proposed;
        } else if (kappa > 1) {
            ew_min = std::min(ew_min, row.oracle_elementwise);
            ew_max = std::max(ew_max, row.oracle_elementwise);
        }
    }
    rep.elementwise_decreasing = decreasing;
    rep.spread_elementwise = ew_max - ew_min;
    rep.spread_proposed = 0;  // nonzero oracle counts are identical by Eq. 10
    return rep;
}

}  // namespace nlfg::analysis
