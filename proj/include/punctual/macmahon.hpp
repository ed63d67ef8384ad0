#ifndef PUNCTUAL_MACMAHON_HPP
#define PUNCTUAL_MACMAHON_HPP

#include <string>
#include <vector>

#include "punctual/macmahon_data.hpp"
#include "punctual/partitions.hpp"
#include "punctual/plethystic.hpp"
#include "punctual/rational.hpp"

namespace punctual {

// MacMahon's proposed exponent binom(d+n-3, n-2) for the generating function
// of (n-1)-dimensional partitions.
inline BigInt macmahon_coeff(long d, long n) {
    if (d < 1 || n < 2) throw std::invalid_argument("macmahon_coeff: need d >= 1, n >= 2");
    return binomial(d + n - 3, n - 2);
}

// epsilon_d(n) = binom(d+n-3, n-2) - chi(Omega^n_d). The n = 1 column is
// exact (both sides count the single trivial partition), so it is zero by
// definition here rather than through binomial conventions at negative
// lower index.
inline BigInt epsilon(long d, long n) {
    if (d < 1 || n < 1) throw std::invalid_argument("epsilon: need d, n >= 1");
    if (d > 8) throw unknown_stratum("epsilon: Omega classes stop at d = 8");
    if (n == 1) return BigInt();
    return macmahon_coeff(d, n) - omega(d, n).specialize_euler();
}

inline RationalPoly r_poly(long d) {
    for (const auto& row : r_poly_table()) {
        if (row.d != d) continue;
        BigInt den = BigInt::from_string(row.denominator);
        std::vector<Rational> asc;
        for (auto it = row.coeffs_desc.rbegin(); it != row.coeffs_desc.rend(); ++it)
            asc.emplace_back(BigInt::from_string(*it), den);
        return RationalPoly(std::move(asc));
    }
    throw out_of_range_error("r_poly: tabulated for 6 <= d <= 26");
}

// Checks epsilon_d(n) = binom(n,4) r_d(n) for 1 <= n <= n_max, with r_d from
// the embedded table. Verifiable end to end only for d <= 8.
inline bool r_poly_check(long d, long n_max) {
    if (d < 6 || d > 8)
        throw unknown_stratum("r_poly_check: Omega classes stop at d = 8 (and the product "
                              "formula is exact below d = 6)");
    RationalPoly r = r_poly(d);
    for (long n = 1; n <= n_max; ++n) {
        Rational lhs(epsilon(d, n));
        Rational rhs = Rational(binomial(n, 4)) * r.eval(BigInt(n));
        if (lhs != rhs) return false;
    }
    return true;
}

// Naive motivic analogue of MacMahon's exponent:
//   bar Omega^n_d = [Gr(n-2, d-3+n)] L^{d-1}   for n >= 2.
// The n = 1 column is taken to be the true Omega^1_d (1 for d = 1, else 0);
// with that reading the barred classes satisfy the same recursions as the
// honest ones, which is what the checks below exercise.
inline LPoly bar_omega(long d, long n) {
    if (d < 1 || n < 1) throw std::invalid_argument("bar_omega: need d, n >= 1");
    if (n == 1) return d == 1 ? LPoly(1) : LPoly();
    return gauss(n - 2, d - 3 + n).shifted(d - 1);
}

// Coefficient of t^d in Exp(sum_e bar Omega^n_e t^e).
inline LPoly bar_hilb(long d, long n) {
    if (d < 0 || n < 1) throw std::invalid_argument("bar_hilb: need d >= 0, n >= 1");
    if (d == 0) return LPoly(1);
    TSeries a(d);
    for (long e = 1; e <= d; ++e) a.set_coeff(e, bar_omega(e, n));
    return exp_series(a).coeff(d);
}

// Formal fundamental strata obtained by running the inversion formula on the
// barred Hilb classes. These may be Laurent; no polynomiality is asserted.
inline LPoly bar_y(long k, long d) {
    if (k < 1 || d < 1) throw std::invalid_argument("bar_y: need k, d >= 1");
    LPoly v;
    for (long j = 1; j <= k; ++j) {
        LPoly term = gauss(j, k).shifted((k - j) * (d - j - 1) - binom2(k - j)) * bar_hilb(d, j);
        if ((k + j) % 2 == 1) term = -term;
        v += term;
    }
    return v;
}

// Motivic discrepancies.
inline LPoly eps_mot(long d, long n) { return bar_omega(d, n) - omega(d, n); }
inline LPoly e_mot(long k, long d) { return bar_y(k, d) - y_class(k, d); }

// Integer power series expansion of M_k(t) over its denominator
//   (1-t)^{2k+3} prod_{i=0}^{k} (1-(2+i)t)^{k+1-i}.
inline std::vector<BigInt> andrews_series(long k, long order) {
    if (k < 0 || k > 2) throw out_of_range_error("andrews_series: numerators tabulated for k <= 2");
    std::vector<BigInt> s(static_cast<std::size_t>(order) + 1);
    const auto& num = andrews_numerators()[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < num.size() && i < s.size(); ++i) s[i] = BigInt(num[i]);
    auto mul_geom = [&](long c, long e) {
        // multiply by (1 - c t)^{-e}
        for (long rep = 0; rep < e; ++rep) {
            for (std::size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1] * BigInt(c);
        }
    };
    mul_geom(1, 2 * k + 3);
    for (long i = 0; i <= k; ++i) mul_geom(2 + i, k + 1 - i);
    return s;
}

// Comparison of the conjectured generating function against the motivic-error
// sequence e_{6+k+i, 4+i} (length 6+k+i, embedding dimension 4+i) evaluated
// at L = 1, on every index reachable with d <= 8 data.
struct AndrewsReport {
    long k = 0;
    struct Row {
        long i;
        BigInt series_value;
        BigInt error_value;
        bool match;
    };
    std::vector<Row> rows;
    long first_unreachable = 0; // indices >= this need data past d = 8
    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }
};

inline AndrewsReport andrews_check(long k) {
    if (k < 0 || k > 2) throw out_of_range_error("andrews_check: numerators tabulated for k <= 2");
    AndrewsReport rep;
    rep.k = k;
    long max_i = 8 - 6 - k; // reachable while the length 6+k+i stays <= 8
    std::vector<BigInt> series = andrews_series(k, std::max<long>(max_i, 0));
    for (long i = 0; i <= max_i; ++i) {
        long length = 6 + k + i, emb = 4 + i;
        BigInt lhs = series[static_cast<std::size_t>(i)];
        BigInt rhs = e_mot(emb, length).specialize_euler();
        rep.rows.push_back({i, lhs, rhs, lhs == rhs});
    }
    rep.first_unreachable = max_i + 1;
    return rep;
}

} // namespace punctual

#endif
