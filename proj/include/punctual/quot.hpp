#ifndef PUNCTUAL_QUOT_HPP
#define PUNCTUAL_QUOT_HPP

#include "punctual/plethystic.hpp"

namespace punctual {

// Strata of the punctual Quot scheme of O^r on A^n, refined by the rank s of
// the fibre of the quotient at the origin. Tabulated for d in {3, 4}; for
// d = 4, s = 2 the two Hilbert-Samuel rows are summed.
inline LPoly quot_stratum(long s, long d, long n, long r) {
    if (d != 3 && d != 4) throw out_of_range_error("quot_stratum: strata are tabulated for d in {3,4}");
    if (s < 1 || s > d) throw out_of_range_error("quot_stratum: need 1 <= s <= d");
    if (d == 3) {
        switch (s) {
        case 1: return hilb_punctual(3, n) * proj(r - 1).shifted(2 * (r - 1));
        case 2: return gauss(2, r) * proj(2 * n - 1).shifted(r - 2);
        default: return gauss(3, r);
        }
    }
    switch (s) {
    case 1: return hilb_punctual(4, n) * proj(r - 1).shifted(3 * (r - 1));
    case 2: {
        LPoly curv = gauss(2, r) * proj(n - 1) * proj(1);
        curv = curv.shifted(2 * (n + r - 2) - 1);
        LPoly square = gauss(2, r) * gauss(2, 2 * n);
        return curv + square.shifted(2 * (r - 2));
    }
    case 3: return gauss(3, r) * proj(3 * n - 1).shifted(r - 3);
    default: return gauss(4, r);
    }
}

// [Quot_{A^n}(O^r, d)_0]. Closed forms for d <= 2, stratum sums for d in
// {3, 4}; the tables stop at d = 4.
inline LPoly quot_punctual(long d, long n, long r) {
    if (d < 0) return LPoly();
    if (d == 0) return LPoly(1);
    if (n < 1 || r < 0) throw std::invalid_argument("quot_punctual: need n >= 1, r >= 0");
    if (d == 1) return proj(r - 1);
    if (d == 2) return proj(r - 1) * proj(n - 1).shifted(r - 1) + gauss(2, r);
    if (d > 4) throw out_of_range_error("quot_punctual: strata are known only for d <= 4");
    LPoly v;
    for (long s = 1; s <= d; ++s) v += quot_stratum(s, d, n, r);
    return v;
}

// The polynomial correction U_4(x, y) in the closed form of the length-4
// generating function, as a coefficient grid.
using U4Data = BiSeries;

inline U4Data u4() {
    BiSeries u(4, 3);
    u.set_coeff(0, 0, LPoly(1));
    u.set_coeff(1, 0, -(lpow(4) - lpow(2)));
    u.set_coeff(2, 0, -(lpow(6) + lpow(2)));
    u.set_coeff(3, 0, lpow(6));
    u.set_coeff(1, 1, -(lpow(3).scaled(2) + lpow(2).scaled(2) + lpow(1)));
    u.set_coeff(2, 1, lpow(8) + lpow(7).scaled(2) + lpow(6).scaled(2) + lpow(3) + lpow(2));
    u.set_coeff(3, 1, -(lpow(8) + lpow(7) + lpow(6) - lpow(5)));
    u.set_coeff(1, 2, lpow(3));
    u.set_coeff(2, 2, -(lpow(9) + lpow(8) + lpow(7) - lpow(6) - lpow(5).scaled(2) - lpow(4)));
    u.set_coeff(3, 2, -(lpow(6) + lpow(5)));
    u.set_coeff(2, 3, lpow(9) - lpow(6));
    u.set_coeff(3, 3, -lpow(9));
    u.set_coeff(4, 3, lpow(10));
    return u;
}

// The bivariate generating function
//   Quot_d(x, y) = sum_{n,r >= 0} [Quot_{A^{n+1}}(O^{r+1}, d)_0] x^n y^r,
// expanded from its closed product form and truncated at the given orders.
// The coefficient of x^n y^r is quot_punctual(d, n+1, r+1).
inline BiSeries quot_series(long d, long order_x, long order_y) {
    if (d < 1 || d > 4) throw out_of_range_error("quot_series: closed forms exist for 1 <= d <= 4");
    BiSeries r = BiSeries::from_x(zeta_proj(d - 1, order_x), order_x, order_y);
    r *= BiSeries::from_y(zeta_proj(d, order_y), order_x, order_y);
    if (d == 2 || d == 3) {
        for (long j = 1; j < d; ++j) {
            BiSeries f = BiSeries::one(order_x, order_y);
            if (order_x >= 1 && order_y >= 1) f.set_coeff(1, 1, -lpow(j));
            r *= f;
        }
    } else if (d == 4) {
        r *= BiSeries::from_x(geometric_lpow(4, order_x), order_x, order_y);
        BiSeries corr(order_x, order_y);
        BiSeries table = u4();
        for (long i = 0; i <= std::min(order_x, table.order_x()); ++i)
            for (long j = 0; j <= std::min(order_y, table.order_y()); ++j)
                corr.set_coeff(i, j, table.coeff(i, j));
        r *= corr;
    }
    return r;
}

// Higher-rank Omega classes: plethystic logarithm coefficients of
//   Quot_{n,r,0}(t) = sum_d [Quot_{A^n}(O^r, d)_0] t^d.
inline LPoly quot_omega(long d, long n, long r) {
    if (d < 1 || d > 4) throw out_of_range_error("quot_omega: punctual Quot data stops at d = 4");
    TSeries series(4);
    for (long e = 0; e <= 4; ++e) series.set_coeff(e, quot_punctual(e, n, r));
    return log_series(series).coeff(d);
}

// Quot series of a smooth n-fold with class x_class, for a locally free sheaf
// of rank r: prod_d zeta_{Omega^{n,r}_d [X]}(t^d), truncated at `order` <= 4.
inline TSeries quot_variety(const LPoly& x_class, long n, long r, long order) {
    if (order < 0) throw std::invalid_argument("quot_variety: negative order");
    if (order > 4) throw out_of_range_error("quot_variety: punctual Quot data stops at d = 4");
    TSeries out = TSeries::one(order);
    for (long d = 1; d <= order; ++d) {
        LPoly mu = quot_omega(d, n, r) * x_class;
        if (mu.is_zero()) continue;
        out *= zeta_class_pow(mu, d, order);
    }
    return out;
}

// Motive of the curvilinear locus of the punctual Quot scheme:
//   [P^{r-1}] L^{(d-1)(r-1)} [P^{n-1}] L^{(d-2)(n-1)}.
inline LPoly curvilinear_motive(long n, long r, long d) {
    if (n < 1 || r < 1 || d < 1)
        throw std::invalid_argument("curvilinear_motive: need n, r, d >= 1");
    return (proj(r - 1).shifted((d - 1) * (r - 1)) * proj(n - 1)).shifted((d - 2) * (n - 1));
}

// The unique elementary component of the length-4 Quot scheme is the closure
// of the stratum with Hilbert-Samuel function (2,2); its dimension must equal
// 4(r + n - 3), read off as the L-degree of that stratum's class.
inline bool elementary_dim_check(long n, long r) {
    if (n < 4 || r < 2) throw std::invalid_argument("elementary_dim_check: need n >= 4, r >= 2");
    LPoly square = (gauss(2, r) * gauss(2, 2 * n)).shifted(2 * (r - 2));
    return square.degree() == 4 * (r + n - 3);
}

} // namespace punctual

#endif
