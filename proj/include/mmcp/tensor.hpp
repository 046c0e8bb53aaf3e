#pragma once

// Dense order-3 tensor with mode-1-fastest linearization:
// linear index of (i,j,k) is i + n1*(j + n2*k), all zero-based.

#include <array>
#include <cstddef>
#include <vector>

#include "mmcp/errors.hpp"
#include "mmcp/matrix.hpp"

namespace mmcp {

template <typename T>
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int n1, int n2, int n3) : n_{n1, n2, n3} {
        if (n1 < 1 || n2 < 1 || n3 < 1)
            throw ShapeError("Tensor3: dimensions must be >= 1");
        v_.assign(static_cast<size_t>(n1) * n2 * n3, T(0));
    }

    int dim(int mode) const { return n_[mode - 1]; } // mode is 1, 2 or 3
    std::array<int, 3> dims() const { return n_; }
    size_t size() const { return v_.size(); }

    T& operator()(int i, int j, int k) { return v_[index(i, j, k)]; }
    const T& operator()(int i, int j, int k) const { return v_[index(i, j, k)]; }

    size_t index(int i, int j, int k) const {
        return static_cast<size_t>(i) +
               static_cast<size_t>(n_[0]) * (static_cast<size_t>(j) + static_cast<size_t>(n_[1]) * k);
    }

    std::vector<T>& values() { return v_; }
    const std::vector<T>& values() const { return v_; }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.n_ == b.n_ && a.v_ == b.v_;
    }

private:
    std::array<int, 3> n_{0, 0, 0};
    std::vector<T> v_;
};

template <typename T>
Tensor3<T> operator-(const Tensor3<T>& a, const Tensor3<T>& b) {
    if (a.dims() != b.dims())
        throw ShapeError("Tensor3 subtract: shape mismatch");
    Tensor3<T> d = a;
    for (size_t i = 0; i < d.size(); ++i) d.values()[i] -= b.values()[i];
    return d;
}

template <typename T>
T frobenius_sq(const Tensor3<T>& t) {
    T sum(0);
    for (const T& x : t.values()) sum += x * x;
    return sum;
}

template <typename T>
T sum_entries(const Tensor3<T>& t) {
    T sum(0);
    for (const T& x : t.values()) sum += x;
    return sum;
}

// Mode-i product: contracts m's columns against the tensor's mode-i fiber.
// The output mode-i size is m.rows().
template <typename T>
Tensor3<T> mode_product(const Tensor3<T>& t, const Mat<T>& m, int mode) {
    if (mode < 1 || mode > 3)
        throw ShapeError("mode_product: mode must be 1, 2 or 3");
    if (m.cols() != t.dim(mode))
        throw ShapeError("mode_product: matrix columns must match tensor mode size");
    std::array<int, 3> nd = t.dims();
    nd[mode - 1] = m.rows();
    Tensor3<T> out(nd[0], nd[1], nd[2]);
    const int n1 = t.dim(1), n2 = t.dim(2), n3 = t.dim(3);
    for (int k = 0; k < n3; ++k)
        for (int j = 0; j < n2; ++j)
            for (int i = 0; i < n1; ++i) {
                const T& x = t(i, j, k);
                if (x == T(0)) continue;
                switch (mode) {
                    case 1:
                        for (int r = 0; r < m.rows(); ++r) out(r, j, k) += m(r, i) * x;
                        break;
                    case 2:
                        for (int r = 0; r < m.rows(); ++r) out(i, r, k) += m(r, j) * x;
                        break;
                    default:
                        for (int r = 0; r < m.rows(); ++r) out(i, j, r) += m(r, k) * x;
                        break;
                }
            }
    return out;
}

// Index permutation with the Matlab permute() convention: dimension d of the
// result is dimension perm[d] of the input (perm entries are 1-based).
template <typename T>
Tensor3<T> cyclic_permute(const Tensor3<T>& t, std::array<int, 3> perm) {
    std::array<bool, 3> seen{false, false, false};
    for (int d : perm) {
        if (d < 1 || d > 3 || seen[d - 1])
            throw ShapeError("cyclic_permute: perm must be a permutation of (1,2,3)");
        seen[d - 1] = true;
    }
    Tensor3<T> out(t.dim(perm[0]), t.dim(perm[1]), t.dim(perm[2]));
    std::array<int, 3> src;
    for (int k = 0; k < out.dim(3); ++k)
        for (int j = 0; j < out.dim(2); ++j)
            for (int i = 0; i < out.dim(1); ++i) {
                const std::array<int, 3> dst{i, j, k};
                for (int d = 0; d < 3; ++d) src[perm[d] - 1] = dst[d];
                out(i, j, k) = t(src[0], src[1], src[2]);
            }
    return out;
}

} // namespace mmcp
