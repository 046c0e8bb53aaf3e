#pragma once

// Problem dimensions for the product of an E (P x Q) with an F (Q x S) matrix.

#include <string>

#include "mmcp/errors.hpp"

namespace mmcp {

struct MatMulDims {
    int p = 1; // rows of E
    int q = 1; // inner dimension
    int s = 1; // columns of F

    MatMulDims() = default;
    MatMulDims(int p_, int q_, int s_) : p(p_), q(q_), s(s_) {
        if (p < 1 || q < 1 || s < 1)
            throw ShapeError("MatMulDims: dimensions must be >= 1");
    }

    // Mode sizes of the multiplication tensor: (PQ, QS, PS).
    int mode1() const { return p * q; } // indexes vec(E^T), row-major scan of E
    int mode2() const { return q * s; } // indexes vec(F^T), row-major scan of F
    int mode3() const { return p * s; } // indexes vec(G), column-major scan of G

    long long entry_count() const {
        return static_cast<long long>(mode1()) * mode2() * mode3();
    }

    bool cubic() const { return p == q && q == s; }

    std::string acronym() const {
        return std::to_string(p) + std::to_string(q) + std::to_string(s);
    }

    friend bool operator==(const MatMulDims&, const MatMulDims&) = default;
};

} // namespace mmcp
