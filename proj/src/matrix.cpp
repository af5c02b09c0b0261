#include "nlfg/matrix.hpp"

#include <utility>

namespace nlfg::gf {

Matrix Matrix::identity(const Field& F, u32 n) {
    Matrix I(n, n);
    for (u32 i = 0; i < n; ++i) I.at(i, i) = F.one();
    return I;
}

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw SpecError("mat_mul: dimension mismatch");
    Matrix C(A.rows(), B.cols());
    for (u32 i = 0; i < A.rows(); ++i)
        for (u32 k = 0; k < A.cols(); ++k) {
            u32 aik = A.at(i, k);
            if (aik == 0) continue;
            for (u32 j = 0; j < B.cols(); ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

std::vector<u32> mat_vec(const Field& F, const Matrix& A, std::span<const u32> v) {
    if (A.cols() != v.size()) throw SpecError("mat_vec: dimension mismatch");
    std::vector<u32> out(A.rows(), 0);
    for (u32 i = 0; i < A.rows(); ++i) {
        u32 acc = 0;
        for (u32 j = 0; j < A.cols(); ++j) acc = F.add(acc, F.mul(A.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

Matrix mat_pow(const Field& F, Matrix A, u64 e) {
    if (A.rows() != A.cols()) throw SpecError("mat_pow: matrix must be square");
    Matrix R = Matrix::identity(F, A.rows());
    while (e) {
        if (e & 1) R = mat_mul(F, R, A);
        A = mat_mul(F, A, A);
        e >>= 1;
    }
    return R;
}

bool mat_is_invertible(const Field& F, Matrix A) {
    if (A.rows() != A.cols()) return false;
    u32 n = A.rows();
    for (u32 col = 0; col < n; ++col) {
        u32 pivot = col;
        while (pivot < n && A.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != col)
            for (u32 j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
        u32 inv = F.inv(A.at(col, col));
        for (u32 i = col + 1; i < n; ++i) {
            u32 f = F.mul(A.at(i, col), inv);
            if (f == 0) continue;
            for (u32 j = col; j < n; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(col, j)));
        }
    }
    return true;
}

Poly char_poly(const Field& F, const Matrix& A) {
    if (A.rows() != A.cols()) throw SpecError("char_poly: matrix must be square");
    u32 n = A.rows();
    if (n == 0) return Poly::one();
    if (n > 64) throw BoundError("char_poly: matrix order beyond desk-scale bound (64)");

    // similarity-reduce to upper Hessenberg
    Matrix H = A;
    for (u32 j = 0; j + 2 < n; ++j) {
        u32 piv = j + 1;
        while (piv < n && H.at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (u32 k = 0; k < n; ++k) std::swap(H.at(piv, k), H.at(j + 1, k));
            for (u32 k = 0; k < n; ++k) std::swap(H.at(k, piv), H.at(k, j + 1));
        }
        u32 inv = F.inv(H.at(j + 1, j));
        for (u32 i = j + 2; i < n; ++i) {
            u32 f = F.mul(H.at(i, j), inv);
            if (f == 0) continue;
            // A <- R A R^{-1} with R = I - f*E(i, j+1)
            for (u32 k = 0; k < n; ++k) H.at(i, k) = F.sub(H.at(i, k), F.mul(f, H.at(j + 1, k)));
            for (u32 k = 0; k < n; ++k) H.at(k, j + 1) = F.add(H.at(k, j + 1), F.mul(f, H.at(k, i)));
        }
    }

    // leading-principal-minor recursion for Hessenberg char polys
    std::vector<Poly> p(n + 1);
    p[0] = Poly::one();
    for (u32 k = 1; k <= n; ++k) {
        Poly xm = Poly::from_coeffs({F.neg(H.at(k - 1, k - 1)), F.one()});
        p[k] = poly_mul(F, xm, p[k - 1]);
        u32 subdiag = F.one();
        for (u32 i = k - 1; i-- > 0;) {
            subdiag = F.mul(subdiag, H.at(i + 1, i));
            if (subdiag == 0) break;
            u32 c = F.mul(H.at(i, k - 1), subdiag);
            if (c == 0) continue;
            p[k] = poly_sub(F, p[k], poly_scale(F, c, p[i]));
        }
    }
    return p[n];
}

}  // namespace nlfg::gf
