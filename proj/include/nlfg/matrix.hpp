#pragma once

#include <vector>

#include "nlfg/field.hpp"
#include "nlfg/poly.hpp"
#include "nlfg/types.hpp"

namespace nlfg::gf {

/// Row-major matrix of field element indices.
class Matrix {
public:
    Matrix() = default;
    Matrix(u32 rows, u32 cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
    static Matrix identity(const Field& F, u32 n);

    u32 rows() const noexcept { return rows_; }
    u32 cols() const noexcept { return cols_; }
    u32& at(u32 i, u32 j) { return a_[std::size_t(i) * cols_ + j]; }
    u32 at(u32 i, u32 j) const { return a_[std::size_t(i) * cols_ + j]; }
    const std::vector<u32>& data() const noexcept { return a_; }
    std::vector<u32>& data() noexcept { return a_; }

    bool operator==(const Matrix&) const = default;

private:
    u32 rows_ = 0, cols_ = 0;
    std::vector<u32> a_;
};

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B);
std::vector<u32> mat_vec(const Field& F, const Matrix& A, std::span<const u32> v);
Matrix mat_pow(const Field& F, Matrix A, u64 e);
bool mat_is_invertible(const Field& F, Matrix A);

/// det(xI - A), monic of degree n, via Hessenberg reduction over F. Exact.
Poly char_poly(const Field& F, const Matrix& A);

}  // namespace nlfg::gf
