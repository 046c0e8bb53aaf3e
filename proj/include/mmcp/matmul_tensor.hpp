#pragma once

// The matrix multiplication tensor T_PQS (size PQ x QS x PS) and the
// transforms that leave it invariant.
//
// Index conventions, fixed by the golden 2x2x2 fixture:
//   mode 1 <-> vec(E^T), a row-major scan of E: position (k-1)Q + m <-> E[k,m]
//   mode 2 <-> vec(F^T), a row-major scan of F: position (m-1)S + n <-> F[m,n]
//   mode 3 <-> vec(G), a column-major scan of G: position (n-1)P + k <-> G[k,n]
// so that vec(G) = T x_1 vec(E^T)^T x_2 vec(F^T)^T for any E, F.

#include <cmath>
#include <vector>

#include "mmcp/dims.hpp"
#include "mmcp/errors.hpp"
#include "mmcp/matrix.hpp"
#include "mmcp/rational.hpp"
#include "mmcp/tensor.hpp"

namespace mmcp {

inline constexpr long long kDefaultTensorEntryCap = 100'000'000;

template <typename T = double>
Tensor3<T> build_matmul_tensor(const MatMulDims& d,
                               long long entry_cap = kDefaultTensorEntryCap) {
    if (d.entry_count() > entry_cap)
        throw SizeCapError("build_matmul_tensor: " + std::to_string(d.entry_count()) +
                           " entries exceeds cap " + std::to_string(entry_cap));
    Tensor3<T> t(d.mode1(), d.mode2(), d.mode3());
    for (int k = 0; k < d.p; ++k)
        for (int m = 0; m < d.q; ++m)
            for (int n = 0; n < d.s; ++n)
                t(k * d.q + m, m * d.s + n, n * d.p + k) = T(1);
    return t;
}

// Row-major scan of a matrix, i.e. vec(M^T) as a flat vector.
template <typename T>
std::vector<T> vec_rowmajor(const Mat<T>& m) {
    return m.data();
}

// Column-major scan of a matrix, i.e. vec(M).
template <typename T>
std::vector<T> vec_colmajor(const Mat<T>& m) {
    std::vector<T> v;
    v.reserve(m.data().size());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            v.push_back(m(i, j));
    return v;
}

// Contracts modes 1 and 2 of t against vec(E^T) and vec(F^T); for a
// multiplication tensor the result is vec(EF) in column-major order.
template <typename T>
std::vector<T> apply_bilinear(const Tensor3<T>& t, const Mat<T>& e, const Mat<T>& f) {
    if (e.cols() != f.rows())
        throw ShapeError("apply_bilinear: E columns must match F rows");
    if (t.dim(1) != e.rows() * e.cols() || t.dim(2) != f.rows() * f.cols() ||
        t.dim(3) != e.rows() * f.cols())
        throw ShapeError("apply_bilinear: tensor dims inconsistent with E, F");
    const std::vector<T> ve = vec_rowmajor(e);
    const std::vector<T> vf = vec_rowmajor(f);
    std::vector<T> out(t.dim(3), T(0));
    for (int k = 0; k < t.dim(3); ++k)
        for (int j = 0; j < t.dim(2); ++j)
            for (int i = 0; i < t.dim(1); ++i) {
                const T& x = t(i, j, k);
                if (x == T(0)) continue;
                out[k] += x * ve[i] * vf[j];
            }
    return out;
}

// S1(X) = I_P kron X^T, acting on mode 1. X must be Q x Q.
template <typename T>
Mat<T> s1_transform(const Mat<T>& x, const MatMulDims& d) {
    if (x.rows() != d.q || x.cols() != d.q)
        throw ShapeError("s1_transform: X must be Q x Q");
    return kron(Mat<T>::identity(d.p), transpose(x));
}

namespace detail {

inline void check_invertible(const Mat<double>& x) {
    const double det = determinant(x);
    const double scale = std::sqrt(frobenius_sq(x));
    if (std::abs(det) < 1e-12 * scale)
        throw SingularTransformError("s2_transform: X is numerically singular");
}

inline void check_invertible(const Mat<Rational>& x) {
    if (determinant(x) == Rational(0))
        throw SingularTransformError("s2_transform: X is singular");
}

} // namespace detail

// S2(X) = X^{-1} kron I_S, acting on mode 2. X must be Q x Q and invertible.
template <typename T>
Mat<T> s2_transform(const Mat<T>& x, const MatMulDims& d) {
    if (x.rows() != d.q || x.cols() != d.q)
        throw ShapeError("s2_transform: X must be Q x Q");
    detail::check_invertible(x);
    return kron(inverse(x), Mat<T>::identity(d.s));
}

} // namespace mmcp
