#pragma once

// Rank-R CP model [[A,B,C]]: reconstruction, residual cost, analytic Jacobian
// and the Gauss-Newton gradient/Hessian pair.
//
// Parameter layout (frozen; also fixed in the file format): theta is
// [vec(A); vec(B); vec(C)] with column-major vec of each factor.

#include <cstdint>
#include <vector>

#include "mmcp/errors.hpp"
#include "mmcp/matrix.hpp"
#include "mmcp/tensor.hpp"

namespace mmcp {

template <typename T>
struct FactorTriple {
    Mat<T> a; // n1 x R
    Mat<T> b; // n2 x R
    Mat<T> c; // n3 x R

    int rank() const { return a.cols(); }

    void check() const {
        if (a.cols() != b.cols() || b.cols() != c.cols())
            throw ShapeError("FactorTriple: factors must share the column count R");
    }
};

// Flat parameter vector with a free/frozen mask (mask[i] != 0 means free).
struct ParamVector {
    std::vector<double> theta;
    std::vector<uint8_t> mask;

    explicit ParamVector(size_t n = 0) : theta(n, 0.0), mask(n, 1) {}
    ParamVector(std::vector<double> t, std::vector<uint8_t> m)
        : theta(std::move(t)), mask(std::move(m)) {
        if (theta.size() != mask.size())
            throw ShapeError("ParamVector: theta and mask sizes differ");
    }

    size_t size() const { return theta.size(); }
    size_t free_count() const {
        size_t n = 0;
        for (uint8_t m : mask) n += (m != 0);
        return n;
    }
};

inline size_t param_count(int n1, int n2, int n3, int rank) {
    return static_cast<size_t>(n1 + n2 + n3) * rank;
}

inline ParamVector pack(const FactorTriple<double>& f) {
    f.check();
    const int r = f.rank();
    ParamVector p(param_count(f.a.rows(), f.b.rows(), f.c.rows(), r));
    size_t at = 0;
    for (const Mat<double>* m : {&f.a, &f.b, &f.c})
        for (int col = 0; col < r; ++col)
            for (int row = 0; row < m->rows(); ++row)
                p.theta[at++] = (*m)(row, col);
    return p;
}

inline FactorTriple<double> unpack(const std::vector<double>& theta,
                                   int n1, int n2, int n3, int rank) {
    if (theta.size() != param_count(n1, n2, n3, rank))
        throw ShapeError("unpack: theta length inconsistent with sizes and rank");
    FactorTriple<double> f{Mat<double>(n1, rank), Mat<double>(n2, rank), Mat<double>(n3, rank)};
    size_t at = 0;
    for (Mat<double>* m : {&f.a, &f.b, &f.c})
        for (int col = 0; col < rank; ++col)
            for (int row = 0; row < m->rows(); ++row)
                (*m)(row, col) = theta[at++];
    return f;
}

template <typename T>
Tensor3<T> compose(const FactorTriple<T>& f) {
    f.check();
    const int n1 = f.a.rows(), n2 = f.b.rows(), n3 = f.c.rows(), r = f.rank();
    Tensor3<T> t(n1, n2, n3);
    for (int rr = 0; rr < r; ++rr)
        for (int k = 0; k < n3; ++k) {
            const T& ck = f.c(k, rr);
            if (ck == T(0)) continue;
            for (int j = 0; j < n2; ++j) {
                const T bc = f.b(j, rr) * ck;
                if (bc == T(0)) continue;
                for (int i = 0; i < n1; ++i)
                    t(i, j, k) += f.a(i, rr) * bc;
            }
        }
    return t;
}

// phi = || target - compose(f) ||_F^2
template <typename T>
T residual_cost(const FactorTriple<T>& f, const Tensor3<T>& target) {
    if (f.a.rows() != target.dim(1) || f.b.rows() != target.dim(2) ||
        f.c.rows() != target.dim(3))
        throw ShapeError("residual_cost: factor rows must match target dims");
    return frobenius_sq(target - compose(f));
}

// Explicit dense Jacobian d vec(compose) / d theta, size (n1*n2*n3) x len(theta).
// Masked columns are included; masking is the solver's concern.
template <typename T>
Mat<T> jacobian(const FactorTriple<T>& f) {
    f.check();
    const int n1 = f.a.rows(), n2 = f.b.rows(), n3 = f.c.rows(), r = f.rank();
    Tensor3<T> probe(n1, n2, n3); // only for index arithmetic
    Mat<T> j(static_cast<int>(probe.size()), static_cast<int>(param_count(n1, n2, n3, r)));
    const int off_b = n1 * r, off_c = (n1 + n2) * r;
    for (int k = 0; k < n3; ++k)
        for (int jj = 0; jj < n2; ++jj)
            for (int i = 0; i < n1; ++i) {
                const int row = static_cast<int>(probe.index(i, jj, k));
                for (int rr = 0; rr < r; ++rr) {
                    j(row, rr * n1 + i) = f.b(jj, rr) * f.c(k, rr);
                    j(row, off_b + rr * n2 + jj) = f.a(i, rr) * f.c(k, rr);
                    j(row, off_c + rr * n3 + k) = f.a(i, rr) * f.b(jj, rr);
                }
            }
    return j;
}

template <typename T>
struct GradHess {
    std::vector<T> g; // J^T vec(target - compose)
    Mat<T> h;         // J^T J, symmetric PSD
};

// Gram-structured assembly of g and H; equals the explicit J^T r / J^T J
// product (oracle-checked) without materializing J.
template <typename T>
GradHess<T> gradient_and_gn_hessian(const FactorTriple<T>& f, const Tensor3<T>& target) {
    f.check();
    const int n1 = f.a.rows(), n2 = f.b.rows(), n3 = f.c.rows(), r = f.rank();
    if (n1 != target.dim(1) || n2 != target.dim(2) || n3 != target.dim(3))
        throw ShapeError("gradient_and_gn_hessian: factor rows must match target dims");

    const Tensor3<T> res = target - compose(f);
    const int n_theta = static_cast<int>(param_count(n1, n2, n3, r));
    GradHess<T> out{std::vector<T>(n_theta, T(0)), Mat<T>(n_theta, n_theta)};

    // Gradient: mode-wise contractions of the residual with the other factors.
    const int off_b = n1 * r, off_c = (n1 + n2) * r;
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j < n2; ++j)
            for (int i = 0; i < n1; ++i) {
                const T& x = res(i, j, k);
                if (x == T(0)) continue;
                for (int rr = 0; rr < r; ++rr) {
                    out.g[rr * n1 + i] += x * f.b(j, rr) * f.c(k, rr);
                    out.g[off_b + rr * n2 + j] += x * f.a(i, rr) * f.c(k, rr);
                    out.g[off_c + rr * n3 + k] += x * f.a(i, rr) * f.b(j, rr);
                }
            }

    // Gram matrices of the factors.
    auto gram = [](const Mat<T>& m) {
        Mat<T> g(m.cols(), m.cols());
        for (int r1 = 0; r1 < m.cols(); ++r1)
            for (int r2 = r1; r2 < m.cols(); ++r2) {
                T s(0);
                for (int row = 0; row < m.rows(); ++row) s += m(row, r1) * m(row, r2);
                g(r1, r2) = s;
                g(r2, r1) = s;
            }
        return g;
    };
    const Mat<T> ga = gram(f.a), gb = gram(f.b), gc = gram(f.c);

    Mat<T>& h = out.h;
    for (int r1 = 0; r1 < r; ++r1)
        for (int r2 = 0; r2 < r; ++r2) {
            const T gbc = gb(r1, r2) * gc(r1, r2);
            const T gac = ga(r1, r2) * gc(r1, r2);
            const T gab = ga(r1, r2) * gb(r1, r2);
            // Diagonal blocks: (Gram_b . Gram_c) kron I etc.
            for (int i = 0; i < n1; ++i) h(r1 * n1 + i, r2 * n1 + i) = gbc;
            for (int j = 0; j < n2; ++j) h(off_b + r1 * n2 + j, off_b + r2 * n2 + j) = gac;
            for (int k = 0; k < n3; ++k) h(off_c + r1 * n3 + k, off_c + r2 * n3 + k) = gab;
            // Cross blocks.
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j) {
                    const T v = f.a(i, r2) * f.b(j, r1) * gc(r1, r2);
                    h(r1 * n1 + i, off_b + r2 * n2 + j) = v;
                    h(off_b + r2 * n2 + j, r1 * n1 + i) = v;
                }
            for (int i = 0; i < n1; ++i)
                for (int k = 0; k < n3; ++k) {
                    const T v = f.a(i, r2) * f.c(k, r1) * gb(r1, r2);
                    h(r1 * n1 + i, off_c + r2 * n3 + k) = v;
                    h(off_c + r2 * n3 + k, r1 * n1 + i) = v;
                }
            for (int j = 0; j < n2; ++j)
                for (int k = 0; k < n3; ++k) {
                    const T v = f.b(j, r2) * f.c(k, r1) * ga(r1, r2);
                    h(off_b + r1 * n2 + j, off_c + r2 * n3 + k) = v;
                    h(off_c + r2 * n3 + k, off_b + r1 * n2 + j) = v;
                }
        }
    return out;
}

} // namespace mmcp
