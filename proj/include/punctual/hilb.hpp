#ifndef PUNCTUAL_HILB_HPP
#define PUNCTUAL_HILB_HPP

#include <map>
#include <mutex>
#include <string>

#include "punctual/strata.hpp"
#include "punctual/tseries.hpp"

namespace punctual {

// [Hilb^d(A^n)_0], assembled from the fundamental strata:
//   sum_{k=1}^{d-1} [Gr(k,n)] L^{(n-k)(d-k-1)} [Y^k_{k,d}].
// Terms whose Grassmannian factor vanishes are skipped before the Y-class is
// consulted, so small ambient dimension (n <= 2) works for every d. Results
// are memoised; stored values are asserted to be honest polynomials in L.
inline LPoly hilb_punctual(long d, long n) {
    if (d < 0 || n < 0) return LPoly();
    if (d <= 1) return LPoly(1); // empty subscheme, single point
    static std::map<std::pair<long, long>, LPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({d, n});
        if (it != cache.end()) return it->second;
    }
    LPoly v;
    for (long k = 1; k <= d - 1; ++k) {
        LPoly g = gauss(k, n);
        if (g.is_zero()) continue;
        v += g.shifted((n - k) * (d - k - 1)) * y_class(k, d);
    }
    if (!v.is_zero() && v.valuation() < 0)
        throw invariant_violation("hilb_punctual: negative valuation in a published class");
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(d, n), v);
    return v;
}

// Inverse transform from Hilb-classes back to the fundamental strata:
//   [Y^k_{k,d}] = sum_{j=1}^{k} (-1)^{k+j} [Gr(j,k)]
//                   L^{(k-j)(d-j-1) - C(k-j,2)} [Hilb^d(A^j)_0].
inline LPoly y_from_hilb(long k, long d) {
    if (k < 1 || k > d - 1) throw std::invalid_argument("y_from_hilb: need 1 <= k <= d-1");
    LPoly v;
    for (long j = 1; j <= k; ++j) {
        LPoly term = gauss(j, k).shifted((k - j) * (d - j - 1) - binom2(k - j)) * hilb_punctual(d, j);
        if ((k + j) % 2 == 1) term = -term;
        v += term;
    }
    return v;
}

// (d-1)-term recursion computing [Hilb^d(A^m)_0] from the initial data
// [Hilb^d(A^gamma)_0], gamma = 1..d-1, valid for m >= d:
//   sum_gamma (-1)^{d+gamma+1} [Hilb^d(A^gamma)_0]
//     [Gr(m-d, m-gamma-1)] [Gr(gamma, m)] L^{C(d-gamma,2)}.
inline LPoly hilb_recursive(long d, long m) {
    if (!(m >= d && d > 1)) throw std::invalid_argument("hilb_recursive: need m >= d > 1");
    LPoly v;
    for (long g = 1; g <= d - 1; ++g) {
        LPoly term = hilb_punctual(d, g) * gauss(m - d, m - g - 1) * gauss(g, m);
        term = term.shifted(binom2(d - g));
        if ((d + g + 1) % 2 == 1) term = -term;
        v += term;
    }
    return v;
}

// The polynomial P_d with Z_d(t) = zeta_{P^{d-1}}(t) P_d(t).
struct PdPoly {
    long d = 0;
    TPoly poly;
};

inline LPoly p_coeff(long d, long i) {
    LPoly a;
    for (long alpha = 0; alpha <= i; ++alpha) {
        LPoly term = hilb_punctual(d, i - alpha + 1) * gauss(alpha, d).shifted(binom2(alpha));
        if (alpha % 2 == 1) term = -term;
        a += term;
    }
    return a;
}

// Same coefficient written against the fundamental strata; kept as the second
// route of the coefficient identity checks.
inline LPoly p_coeff_y_route(long d, long i) {
    LPoly a;
    for (long k = 0; k <= i; ++k) {
        LPoly term = gauss(i - k, d - k - 2).shifted(binom2(i - k)) * y_class(k + 1, d);
        if ((i - k) % 2 == 1) term = -term;
        a += term;
    }
    return a;
}

inline PdPoly p_poly(long d) {
    if (d < 1) throw std::invalid_argument("p_poly: need d >= 1");
    PdPoly p;
    p.d = d;
    if (d <= 3) {
        p.poly = TPoly(LPoly(1));
        return p;
    }
    std::vector<LPoly> cs;
    for (long i = 0; i <= d - 2; ++i) cs.push_back(p_coeff(d, i));
    p.poly = TPoly(std::move(cs));
    if (p.poly.eval_one() != LPoly(1))
        throw invariant_violation("p_poly: value at t=1 is not 1");
    if (d >= 4 && d <= 8 && p.poly.degree() != d - 2)
        throw invariant_violation("p_poly: degree is not d-2");
    return p;
}

// Z_d(t) = sum_n [Hilb^d(A^{n+1})_0] t^n = zeta_{P^{d-1}}(t) P_d(t).
inline TSeries z_series(long d, long order) {
    return zeta_proj(d - 1, order) * p_poly(d).poly.to_series(order);
}

// [Hilb^d(A^n)_0] = [Gr(d-1, n)] modulo L^{n-d+2}; a nonpositive modulus makes
// the congruence vacuous.
inline bool stab_check(long d, long n) {
    LPoly diff = hilb_punctual(d, n) - gauss(d - 1, n);
    if (diff.is_zero()) return true;
    long modulus = n - d + 2;
    if (modulus <= 0) return true;
    return diff.valuation() >= modulus;
}

// Limit class of the punctual Hilbert scheme in the L-adic completion; it
// coincides with the infinite Grassmannian Gr(d-1, infinity).
inline LPoly hilb_infinity(long d, long l_prec) {
    if (d < 1) throw std::invalid_argument("hilb_infinity: need d >= 1");
    return gr_infinity(d - 1, l_prec);
}

} // namespace punctual

#endif
