#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pastlife {

/// Support of a lifetime law: an interval contained in [0, +inf).
/// An unbounded right endpoint is stored as IEEE +infinity, never as a
/// large finite sentinel.
struct Support {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();

    Support() = default;
    Support(double lo, double hi) : lower(lo), upper(hi) {
        if (!(lower >= 0.0))
            throw std::invalid_argument("Support: lower endpoint must be >= 0");
        if (!(lower < upper))
            throw std::invalid_argument("Support: lower must be strictly below upper");
    }

    bool upper_is_finite() const { return std::isfinite(upper); }

    bool contains_interior(double x) const { return x > lower && x < upper; }
};

} // namespace pastlife
