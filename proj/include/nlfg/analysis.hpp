#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nlfg/generator.hpp"
#include "nlfg/kernels.hpp"
#include "nlfg/oracle.hpp"
#include "nlfg/types.hpp"

namespace nlfg::analysis {

struct RunInfo {
    u64 q = 0;
    u32 r = 0;
    u32 L = 0;
    u32 m = 0;
    gen::MulMode mode = gen::MulMode::FieldProduct;
};

/// Exact per-value counts over one full period. Keys are mixed-radix packed
/// output vectors (WordVector::packed); values absent from the map did not
/// occur.
struct DistributionTable {
    RunInfo info;
    u64 period = 0;
    std::map<u64, u64> counts;
};

struct MeasureOptions {
    u64 max_states = u64(1) << 26;
    u32 threads = 1;
    kern::Kind kernel = kern::Kind::Auto;
};

/// Streams one full period of the generator and tallies outputs. Audits the
/// register (primitive characteristic polynomial, nonzero seed). The period
/// may be split across threads; chunk seeds come from powers of the
/// transition matrix and the merge is order-independent.
DistributionTable measure_distribution(const gen::Generator& g, const MeasureOptions& opt = {});

struct LcReport {
    u32 linear_complexity = 0;
    gf::Poly minimal_poly;  // x^LC - a_{LC-1}x^{LC-1} - ... - a_0
    bool stabilized = false;  // no connection-poly change in the last half
};

/// Berlekamp-Massey over F. The reported minimal LFSR is re-simulated
/// against the input prefix before returning.
LcReport berlekamp_massey(const gf::Field& F, std::span<const u32> seq);

struct ReconcileRow {
    u64 key = 0;
    std::vector<u32> value;
    u32 kappa = 0;
    u64 measured = 0;
    BigInt expected;
    bool match = false;
};

struct ReconcileReport {
    oracle::CountParams params;
    gen::MulMode mode = gen::MulMode::FieldProduct;
    u64 period = 0;
    std::vector<ReconcileRow> rows;
    bool pass = false;
};

/// Measured counts against the closed forms, one row per output value.
/// Throws if params disagree with the table's provenance.
ReconcileReport reconcile(const DistributionTable& table, const oracle::CountParams& params,
                          gen::MulMode mode);

struct CompareKappaRow {
    u32 kappa = 0;
    u64 vectors = 0;  // number of target vectors in the class
    BigInt oracle_elementwise;
    BigInt oracle_proposed;
    u64 measured_elementwise_min = 0, measured_elementwise_max = 0;
    u64 measured_proposed_min = 0, measured_proposed_max = 0;
};

struct CompareReport {
    oracle::CountParams params;
    u64 period = 0;
    gf::Poly register_poly;  // the primitive g over GF(q^r) used for both runs
    std::vector<CompareKappaRow> rows;
    BigRat deviation_proposed;     // max |count/period - q^{-r}|, oracle counts
    BigRat deviation_elementwise;
    BigInt spread_proposed;        // max - min over nonzero per-vector counts
    BigInt spread_elementwise;
    bool proposed_nonzero_uniform = false;   // measured
    bool elementwise_decreasing = false;     // per-vector counts decrease as kappa grows
    bool measured_matches = false;           // both reconciliations pass
};

/// Builds one primitive sigma-LFSR for the parameters, runs both schemes over
/// the same register, and reconciles each against its closed forms.
CompareReport compare_schemes(const oracle::CountParams& params, const MeasureOptions& opt = {});

/// Kappa (nonzero-entry count) of a packed output value.
u32 kappa_of_key(u64 key, u64 q, u32 r);

}  // namespace nlfg::analysis
