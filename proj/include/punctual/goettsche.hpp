#ifndef PUNCTUAL_GOETTSCHE_HPP
#define PUNCTUAL_GOETTSCHE_HPP

#include <mutex>
#include <vector>

#include "punctual/lpoly.hpp"
#include "punctual/tseries.hpp"

namespace punctual {

// Generating series of the punctual Hilbert schemes of a surface at a point,
//   prod_{m>=1} (1 - L^{m-1} t^m)^{-1},
// truncated at the given order (Goettsche's formula, punctual version).
inline TSeries goettsche_series(long order) {
    TSeries r = TSeries::one(order);
    for (long m = 1; m <= order; ++m) {
        TSeries f(order);
        for (long j = 0; m * j <= order; ++j) f.set_coeff(m * j, lpow((m - 1) * j));
        r *= f;
    }
    return r;
}

// [Hilb^d(A^2)_0]: the coefficient of t^d above. Euler specialisation is the
// ordinary partition number p(d).
inline LPoly goettsche_punctual(long d) {
    if (d < 0) return LPoly();
    if (d == 0) return LPoly(1);
    static std::vector<LPoly> cache; // grows monotonically, guarded below
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (static_cast<long>(cache.size()) <= d) {
        TSeries s = goettsche_series(d);
        cache.clear();
        for (long i = 0; i <= d; ++i) cache.push_back(s.coeff(i));
    }
    return cache[static_cast<std::size_t>(d)];
}

} // namespace punctual

#endif
