#pragma once

// Exact rational scalar (GMP mpq_class) plus parsing/printing helpers used by
// the factor file format and the snapping code.

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

#include "mmcp/errors.hpp"

namespace mmcp {

using Rational = mpq_class;

// Accepts "n" or "n/d" in base 10. Result is canonicalized (reduced, den > 0).
inline Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw ParseError("rational: empty string");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical "num/den" form, e.g. "0/1", "-1/2".
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        throw ParseError("rational: non-finite double");
    return mpq_class(x);
}

// Nearest p/q with 1 <= q <= max_den, accepted only within tol of x.
inline std::optional<Rational> nearest_rational(double x, int max_den, double tol) {
    std::optional<Rational> best;
    double best_err = tol;
    for (int den = 1; den <= max_den; ++den) {
        const double num = std::round(x * den);
        const double err = std::abs(x - num / den);
        if (err <= best_err) {
            best_err = err;
            best = Rational(static_cast<long>(num), den);
            best->canonicalize();
        }
    }
    return best;
}

} // namespace mmcp
