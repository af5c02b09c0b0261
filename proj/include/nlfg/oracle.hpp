#pragma once

#include <map>

#include "nlfg/field_spec.hpp"
#include "nlfg/generator.hpp"
#include "nlfg/types.hpp"

namespace nlfg::oracle {

/// Parameters of the counting formulas. q is the field order (a prime power),
/// r the word width (1 for the scalar case), L the register length, m the
/// multiplier count, kappa the number of nonzero entries of a target vector.
struct CountParams {
    u64 q = 2;
    u32 r = 1;
    u32 L = 2;
    u32 m = 1;
    u32 kappa = 0;
};

void validate(const CountParams& p);  // q >= 2, m <= floor(L/2), kappa <= r

/// |S_m(K)| for K != 0: number of m-tuples of nonzero elements summing to K.
/// Closed form (psi_nz^m - (-1)^m)/q; 0 for m = 0. Division exactness is
/// asserted.
BigInt partition_count(u32 m, u64 q);
/// Same quantity by the recursion |S_m| = psi_nz^{m-1} - |S_{m-1}|.
BigInt partition_count_recursive(u32 m, u64 q);

/// Number of multiplier-assembly inputs producing a fixed output K:
/// q^{m-1}(q^m - 1) for K != 0, q^{m-1}(q^m + q - 1) for K = 0.
BigInt psi_m(u32 m, u64 q, bool zero_target);
/// Independent route for K != 0: sum over i of C(m,i) psi_z^i psi_nz^{m-i} |S_{m-i}(K)|.
BigInt psi_m_via_partition_sum(u32 m, u64 q);

/// Scalar NLFG per-period count of K over a primitive register:
/// q^{L-m-1}(q^m - 1), zero case q^{L-m-1}(q^m + q - 1) - 1.
BigInt n_scalar(const CountParams& p, bool zero_target);

/// Field-product word scheme: n_scalar with q replaced by q^r.
BigInt n_proposed(const CountParams& p, bool zero_target);

/// Element-wise assembly inputs producing a vector with kappa nonzero
/// entries: (q^{m-1})^r (q^m - 1)^kappa (q^m + q - 1)^{r-kappa}.
BigInt psi_elementwise(u32 m, u64 q, u32 r, u32 kappa);

/// Element-wise per-period count for a vector with p.kappa nonzero entries;
/// the zero case (kappa = 0) subtracts 1 for the absent zero state.
BigInt n_elementwise(const CountParams& p, bool zero_target);

/// Max over value classes of |count/(q^{rL} - 1) - q^{-r}|, exact.
BigRat balance_deviation(const CountParams& p);

/// Ground truth at small scale: enumerate all q^{2rm} assembly inputs,
/// evaluate the m-multiplier assembly, and tally outputs by packed value.
/// Independent of the generator implementation.
std::map<u64, u64> brute_assembly_census(u32 m, const gf::FieldSpec& spec, gen::MulMode mode,
                                         u64 max_inputs = u64(1) << 24);

}  // namespace nlfg::oracle
