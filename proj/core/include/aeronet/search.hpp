#pragma once

#include <functional>

namespace aeronet {

// Binary search for the smallest x in [0, x_max] with feasible(x) true, given
// that feasibility is monotone in x. Stops when the bracket width is <= err
// and returns the feasible upper end. The caller must have verified
// feasible(x_max) beforehand.
inline double min_feasible(double x_max, double err,
                           const std::function<bool(double)>& feasible) {
    double lo = 0.0;
    double hi = x_max;
    if (feasible(0.0)) return 0.0;
    while (hi - lo > err) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

}  // namespace aeronet
