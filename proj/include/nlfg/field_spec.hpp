#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlfg/field.hpp"
#include "nlfg/matrix.hpp"
#include "nlfg/poly.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gf {

class FieldSpec;
using SpecPtr = std::shared_ptr<const FieldSpec>;

/// The field tower GF(p) <= GF(q = p^n) <= GF(q^r). inner_poly (primitive,
/// degree n over GF(p)) defines GF(q); outer_poly (primitive, degree r over
/// GF(q)) defines GF(q^r) as the residue class ring GF(q)[x]/(outer_poly).
/// Primitivity of both is verified at construction. When n = 1 or r = 1 the
/// corresponding layer is the identity and its polynomial must be absent.
class FieldSpec {
public:
    FieldSpec(u32 p, u32 n, std::optional<Poly> inner_poly, u32 r,
              std::optional<Poly> outer_poly);

    static SpecPtr make(u32 p, u32 n, std::optional<Poly> inner_poly, u32 r,
                        std::optional<Poly> outer_poly);
    /// GF(q) with r = 1 (scalar tower); q must be a prime power.
    static SpecPtr scalar(u64 q);
    /// GF(q)^r with table/search-provided polynomials.
    static SpecPtr word(u64 q, u32 r);

    u32 p() const noexcept { return p_; }
    u32 n() const noexcept { return n_; }
    u32 r() const noexcept { return r_; }
    u64 q() const noexcept { return gfq_->order(); }
    u64 qr() const noexcept { return gfqr_->order(); }  // |GF(q^r)|

    const FieldPtr& gfp() const noexcept { return gfp_; }
    const FieldPtr& gfq() const noexcept { return gfq_; }
    const FieldPtr& gfqr() const noexcept { return gfqr_; }

    const Poly& inner_poly() const;  // throws when n = 1
    const Poly& outer_poly() const;  // throws when r = 1

    bool same_as(const FieldSpec& o) const;
    std::string describe() const;

    /// Column r+j of the Q matrix: the canonical reduction of x^{r+j} modulo
    /// outer_poly, as a length-r coefficient vector over GF(q). j in [0, r-1).
    std::span<const u32> reduction_column(u32 j) const;

private:
    u32 p_, n_, r_;
    FieldPtr gfp_, gfq_, gfqr_;
    std::optional<Poly> inner_, outer_;
    std::vector<std::vector<u32>> q_cols_;  // r-1 reduction columns
};

/// An element of GF(q), carrying its field for mismatch detection.
class FieldElement {
public:
    FieldElement(FieldPtr field, u32 index);
    u32 index() const noexcept { return idx_; }
    const FieldPtr& field() const noexcept { return field_; }
    /// Canonical representative: length-n coefficient vector over GF(p).
    std::vector<u32> rep() const { return field_->digits(idx_); }
    bool is_zero() const noexcept { return idx_ == 0; }
    bool operator==(const FieldElement& o) const {
        return idx_ == o.idx_ && field_->same_as(*o.field_);
    }

private:
    FieldPtr field_;
    u32 idx_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);

/// An element of GF(q)^r: exactly r entries over GF(q).
class WordVector {
public:
    WordVector(SpecPtr spec, std::vector<u32> entries);
    static WordVector zero(SpecPtr spec);
    static WordVector unit(SpecPtr spec);  // (1, 0, ..., 0)^T

    const SpecPtr& spec() const noexcept { return spec_; }
    std::span<const u32> entries() const noexcept { return entries_; }
    u32 entry(u32 i) const { return entries_.at(i); }
    FieldElement element(u32 i) const { return {spec_->gfq(), entries_.at(i)}; }
    bool is_zero() const noexcept;
    u32 kappa() const noexcept;  // number of nonzero entries

    /// Mixed-radix packing: sum of entries[k] * q^k. Also the element index
    /// of M^{-1}(v) in GF(q^r).
    u64 packed() const noexcept;
    static WordVector from_packed(SpecPtr spec, u64 key);

    std::string to_string() const;  // "(1,0,1)"
    bool operator==(const WordVector& o) const {
        return entries_ == o.entries_ && spec_->same_as(*o.spec_);
    }

private:
    SpecPtr spec_;
    std::vector<u32> entries_;
};

/// M: polynomials over GF(q) of degree < r -> GF(q)^r, stacking coefficients.
WordVector map_M(SpecPtr spec, const Poly& f);
Poly map_M_inv(const WordVector& v);

/// r x (2r-1) over GF(q): [ I_r | M([x^r]) ... M([x^{2r-2}]) ]. Applied to a
/// length-(2r-1) convolution it yields the canonical residue mod outer_poly.
struct QMatrix {
    Matrix m;  // r rows, 2r-1 columns
};
QMatrix build_q_matrix(const FieldSpec& spec);

/// Field product: convolution of the entry vectors times the Q matrix;
/// equals multiplication in GF(q^r) through the M map.
WordVector word_mul(const WordVector& a, const WordVector& b);
/// Baseline scheme: entrywise products in GF(q).
WordVector word_mul_elementwise(const WordVector& a, const WordVector& b);
WordVector word_add(const WordVector& a, const WordVector& b);

}  // namespace nlfg::gf
