#pragma once

// Minimal dense row-major matrix, generic over the scalar so every operation
// has a float and an exact-rational instantiation.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mmcp/errors.hpp"

namespace mmcp {

template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw ShapeError("Mat: negative dimension");
        v_.assign(static_cast<size_t>(rows) * cols, T(0));
    }
    Mat(int rows, int cols, std::initializer_list<T> vals) : Mat(rows, cols) {
        if (vals.size() != v_.size())
            throw ShapeError("Mat: initializer size mismatch");
        std::copy(vals.begin(), vals.end(), v_.begin());
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return v_.empty(); }

    T& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<T>& data() { return v_; }
    const std::vector<T>& data() const { return v_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> v_;
};

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("Mat multiply: inner dimensions differ");
    Mat<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw ShapeError("Mat-vector multiply: size mismatch");
    std::vector<T> y(a.rows(), T(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
    Mat<T> t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

template <typename T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const T& aij = a(ia, ja);
            if (aij == T(0)) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    k(ia * b.rows() + ib, ja * b.cols() + jb) = aij * b(ib, jb);
        }
    return k;
}

template <typename T>
T l1_norm(const Mat<T>& a) {
    using std::abs;
    T sum(0);
    for (const T& x : a.data()) sum += T(abs(x));
    return sum;
}

template <typename T>
T frobenius_sq(const Mat<T>& a) {
    T sum(0);
    for (const T& x : a.data()) sum += x * x;
    return sum;
}

// LU with partial pivoting. Exact for rational scalars.
template <typename T>
T determinant(Mat<T> m) {
    using std::abs;
    if (m.rows() != m.cols())
        throw ShapeError("determinant: matrix not square");
    const int n = m.rows();
    T det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        T best = T(abs(m(col, col)));
        for (int r = col + 1; r < n; ++r) {
            T cand = T(abs(m(r, col)));
            if (cand > best) { best = cand; pivot = r; }
        }
        if (best == T(0)) return T(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            T factor = m(r, col) / m(col, col);
            if (factor == T(0)) continue;
            for (int j = col; j < n; ++j)
                m(r, j) -= factor * m(col, j);
        }
    }
    return det;
}

// Gauss-Jordan with partial pivoting. Exact for rational scalars.
template <typename T>
Mat<T> inverse(Mat<T> m) {
    using std::abs;
    if (m.rows() != m.cols())
        throw ShapeError("inverse: matrix not square");
    const int n = m.rows();
    Mat<T> inv = Mat<T>::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        T best = T(abs(m(col, col)));
        for (int r = col + 1; r < n; ++r) {
            T cand = T(abs(m(r, col)));
            if (cand > best) { best = cand; pivot = r; }
        }
        if (best == T(0))
            throw SingularTransformError("inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(col, j), m(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        const T diag = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) /= diag;
            inv(col, j) /= diag;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const T factor = m(r, col);
            if (factor == T(0)) continue;
            for (int j = 0; j < n; ++j) {
                m(r, j) -= factor * m(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace mmcp
