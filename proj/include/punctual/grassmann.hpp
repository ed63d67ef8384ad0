#ifndef PUNCTUAL_GRASSMANN_HPP
#define PUNCTUAL_GRASSMANN_HPP

#include "punctual/lpoly.hpp"
#include "punctual/tseries.hpp"

namespace punctual {

// Motive of P^e: 1 + L + ... + L^e, zero for e < 0 by convention.
inline LPoly proj(long e) {
    LPoly r;
    for (long i = 0; i <= e; ++i) r += lpow(i);
    return r;
}

// Motive of the Grassmannian Gr(k, n) as a Gaussian binomial,
//   [n]_L! / ([k]_L! [n-k]_L!),
// computed by telescoping exact divisions so every partial quotient is a
// polynomial. Out-of-range parameters give zero, matching the summation
// conventions the identity suite relies on.
inline LPoly gauss(long k, long n) {
    if (k < 0 || n < 0 || k > n) return LPoly();
    if (k > n - k) k = n - k;
    LPoly q(1);
    for (long i = 1; i <= k; ++i) {
        LPoly num = lpow(n - k + i) - LPoly(1);
        LPoly den = lpow(i) - LPoly(1);
        q = LPoly::exact_div(q * num, den);
    }
    return q;
}

// Representative of [Gr(k, infinity)] modulo L^l_prec: the coefficient of t^k
// in prod_{i>=0} (1 - L^i t)^{-1}. Factors with i >= l_prec are congruent to 1,
// so the product is finite after reduction.
inline LPoly gr_infinity(long k, long l_prec) {
    if (k < 0 || l_prec < 1) throw std::invalid_argument("gr_infinity: need k >= 0 and l_prec >= 1");
    TSeries r = TSeries::one(k);
    for (long i = 0; i < l_prec; ++i) {
        r *= geometric_lpow(i, k);
        for (long j = 0; j <= k; ++j) r.set_coeff(j, r.coeff(j).reduced_mod_lpow(l_prec));
    }
    return r.coeff(k);
}

// Congruence criterion for divisibility of [Gr(k, n)] by [P^2]: true iff
// k = 1 (mod 3) and n = 0 (mod 3), or k = 2 (mod 3) and n != 2 (mod 3).
inline bool is_p2_divisible(long k, long n) {
    if (k <= 0 || k > n) throw std::invalid_argument("is_p2_divisible: need 0 < k <= n");
    long km = k % 3, nm = n % 3;
    return (km == 1 && nm == 0) || (km == 2 && nm != 2);
}

} // namespace punctual

#endif
