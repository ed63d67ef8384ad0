#ifndef PUNCTUAL_PLETHYSTIC_HPP
#define PUNCTUAL_PLETHYSTIC_HPP

#include <map>
#include <mutex>
#include <vector>

#include "punctual/hilb.hpp"
#include "punctual/tseries.hpp"

namespace punctual {

// Plethystic exponential of a series with zero constant term:
//   Exp(sum_d A_d t^d) = prod_d zeta_{A_d}(t^d).
inline TSeries exp_series(const TSeries& a) {
    if (!a.coeff(0).is_zero())
        throw nonzero_constant("exp_series: the argument must have zero constant term");
    const long n = a.order();
    TSeries r = TSeries::one(n);
    for (long d = 1; d <= n; ++d) {
        if (a.coeff(d).is_zero()) continue;
        r *= zeta_class_pow(a.coeff(d), d, n);
    }
    return r;
}

// Plethystic logarithm, the inverse of exp_series. Factors are peeled off
// lowest degree first: at step d the residual's t^d coefficient is A_d, and
// the residual is divided by zeta_{A_d}(t^d) (i.e. multiplied by the zeta
// function of -A_d).
inline TSeries log_series(const TSeries& h) {
    if (!h.coeff(0).is_one())
        throw non_unit_constant("log_series: the argument must have constant term 1");
    const long n = h.order();
    TSeries residual = h;
    TSeries a(n);
    for (long d = 1; d <= n; ++d) {
        LPoly ad = residual.coeff(d);
        a.set_coeff(d, ad);
        if (ad.is_zero()) continue;
        residual *= zeta_class_pow(-ad, d, n);
    }
    return a;
}

// Omega classes: the plethystic logarithm coefficients of the punctual
// Hilbert series of A^n,
//   Hilb_{n,0}(t) = Exp(sum_d Omega^n_d t^d).
// Only d <= 8 is within reach of the known punctual motives.
inline LPoly omega(long d, long n) {
    if (d < 1 || n < 1) throw std::invalid_argument("omega: need d, n >= 1");
    if (d > 8)
        throw unknown_stratum("omega: punctual Hilbert data stops at d = 8");
    static std::map<long, std::vector<LPoly>> cache; // n -> Omega^n_1..8
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second[static_cast<std::size_t>(d - 1)];
    }
    TSeries hilb(8);
    for (long e = 0; e <= 8; ++e) hilb.set_coeff(e, hilb_punctual(e, n));
    TSeries logh = log_series(hilb);
    std::vector<LPoly> row;
    for (long e = 1; e <= 8; ++e) row.push_back(logh.coeff(e));
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(n, std::move(row));
    return it->second[static_cast<std::size_t>(d - 1)];
}

// The polynomial Q_d with Omega_d(t) = sum_n Omega^{n+2}_d t^n equal to
// zeta_{P^{d-1}}(t) Q_d(t); constant L^{d-1} for d <= 3.
inline TPoly q_poly(long d) {
    if (d < 1) throw std::invalid_argument("q_poly: need d >= 1");
    if (d > 8) throw unknown_stratum("q_poly: punctual Hilbert data stops at d = 8");
    if (d <= 3) return TPoly(lpow(d - 1));
    std::vector<LPoly> cs;
    for (long i = 0; i <= d - 3; ++i) {
        LPoly c;
        for (long j = 0; j <= i; ++j) {
            LPoly term = omega(d, i - j + 2) * gauss(j, d).shifted(binom2(j));
            if (j % 2 == 1) term = -term;
            c += term;
        }
        cs.push_back(c);
    }
    return TPoly(std::move(cs));
}

// The Omega classes satisfy the same recursion as the Hilb classes:
//   Omega^m_d = sum_gamma (-1)^{d+gamma+1} Omega^gamma_d
//                 [Gr(m-d, m-gamma-1)] [Gr(gamma, m)] L^{C(d-gamma,2)}.
inline bool omega_recursion_check(long d, long m) {
    if (!(d >= 3 && m >= d)) throw std::invalid_argument("omega_recursion_check: need 3 <= d <= m");
    LPoly rhs;
    for (long g = 1; g <= d - 1; ++g) {
        LPoly term = omega(d, g) * gauss(m - d, m - g - 1) * gauss(g, m);
        term = term.shifted(binom2(d - g));
        if ((d + g + 1) % 2 == 1) term = -term;
        rhs += term;
    }
    return omega(d, m) == rhs;
}

// Hilbert series of a smooth n-fold with class x_class (a polynomial in L):
//   Hilb_X(t) = prod_d zeta_{Omega^n_d [X]}(t^d), truncated at `order`.
inline TSeries hilb_variety(const LPoly& x_class, long n, long order) {
    if (order < 0) throw std::invalid_argument("hilb_variety: negative order");
    if (order > 8) throw unknown_stratum("hilb_variety: punctual Hilbert data stops at d = 8");
    TSeries r = TSeries::one(order);
    for (long d = 1; d <= order; ++d) {
        LPoly mu = omega(d, n) * x_class;
        if (mu.is_zero()) continue;
        r *= zeta_class_pow(mu, d, order);
    }
    return r;
}

} // namespace punctual

#endif
