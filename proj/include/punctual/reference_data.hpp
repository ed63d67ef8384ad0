#ifndef PUNCTUAL_REFERENCE_DATA_HPP
#define PUNCTUAL_REFERENCE_DATA_HPP

#include <utility>
#include <vector>

#include "punctual/grassmann.hpp"
#include "punctual/lpoly.hpp"
#include "punctual/tseries.hpp"

// Frozen reference values used by the verification suite and the golden
// tests. Polynomials are stored as parseable strings or, where the source
// presents them in factored form, as the literal product.

namespace punctual::refdata {

inline TPoly parse_tpoly(const std::vector<const char*>& coeffs) {
    std::vector<LPoly> cs;
    cs.reserve(coeffs.size());
    for (const char* s : coeffs) cs.push_back(LPoly::parse(s));
    return TPoly(std::move(cs));
}

// ---- P_d, the numerators of the Z_d series, d = 1..8 ----
inline TPoly pd(long d) {
    switch (d) {
    case 1:
    case 2:
    case 3: return parse_tpoly({"1"});
    case 4: return parse_tpoly({"1", "L^2", "-L^2"});
    case 5: return parse_tpoly({"1", "L^3 + L^2", "L^5 - L^3 - L^2", "-L^5"});
    case 6:
        return parse_tpoly({"1", "2*L^4 + 2*L^3 + L^2",
                            "L^8 + 2*L^7 + L^6 - L^5 - 3*L^4 - 2*L^3 - L^2",
                            "-2*L^8 - 2*L^7 - L^6 + L^5 + L^4", "L^8"});
    case 7:
        return parse_tpoly(
            {"1", "L^2 + 2*L^3 + 3*L^4 + 2*L^5",
             "-L^2 - 2*L^3 - 4*L^4 - 4*L^5 - L^6 + 3*L^7 + 5*L^8 + 5*L^9 + L^10",
             "L^4 + 2*L^5 + L^6 - 3*L^7 - 7*L^8 - 10*L^9 - 6*L^10 - 2*L^11 + 3*L^12 + 2*L^13 "
             "+ 2*L^14 + L^15 + L^16",
             "2*L^8 + 5*L^9 + 6*L^10 + 3*L^11 - L^12 - 4*L^13 - 3*L^14 - 3*L^15 - 2*L^16 - L^17",
             "-L^10 - L^11 - 2*L^12 + 2*L^13 + L^14 + 2*L^15 + L^16 + L^17"});
    case 8:
        return parse_tpoly(
            {"1", "3*L^6 + 4*L^5 + 4*L^4 + 2*L^3 + L^2",
             "3*L^12 + 9*L^11 + 12*L^10 + 10*L^9 + 3*L^8 - 3*L^7 - 7*L^6 - 7*L^5 - 5*L^4 "
             "- 2*L^3 - L^2",
             "L^21 + L^20 + 3*L^19 + 5*L^18 + 7*L^17 + 9*L^16 + 10*L^15 + 3*L^14 - 7*L^13 "
             "- 19*L^12 - 25*L^11 - 22*L^10 - 12*L^9 - 2*L^8 + 4*L^7 + 4*L^6 + 3*L^5 + L^4",
             "L^26 + L^25 + 2*L^24 + L^23 + L^22 - 2*L^21 - 5*L^20 - 11*L^19 - 15*L^18 "
             "- 20*L^17 - 18*L^16 - 11*L^15 + 4*L^14 + 15*L^13 + 21*L^12 + 17*L^11 + 10*L^10 "
             "+ 2*L^9 - L^8 - L^7",
             "-L^27 - 2*L^26 - 3*L^25 - 3*L^24 - 3*L^23 - L^22 + 2*L^21 + 8*L^20 + 12*L^19 "
             "+ 15*L^18 + 13*L^17 + 8*L^16 - L^15 - 7*L^14 - 8*L^13 - 5*L^12 - L^11",
             "L^27 + L^26 + 2*L^25 + L^24 + 2*L^23 - L^21 - 4*L^20 - 4*L^19 - 5*L^18 + L^16 "
             "+ 2*L^15"});
    default: throw std::invalid_argument("refdata::pd: d must be 1..8");
    }
}

// ---- Q_d, the numerators of the Omega_d series, d = 1..8 ----
inline TPoly qd(long d) {
    switch (d) {
    case 1: return parse_tpoly({"1"});
    case 2: return parse_tpoly({"L"});
    case 3: return parse_tpoly({"L^2"});
    case 4: return parse_tpoly({"L^3", "L^5 - L^2"});
    case 5: return parse_tpoly({"L^4", "L^7 + L^6 - L^4 - L^3", "L^9 + L^8 - L^6 - L^5"});
    case 6:
        return parse_tpoly({"L^5", "2*L^9 + 3*L^8 + 2*L^7 - 2*L^6 - 3*L^5 - 2*L^4",
                            "L^12 + 3*L^11 + 2*L^10 - 2*L^9 - 6*L^8 - 3*L^7 + 3*L^5 + L^4",
                            "L^14 + 2*L^13 - L^11 - 2*L^10 + L^8"});
    case 7:
        return parse_tpoly(
            {"L^6", "2*L^11 + 4*L^10 + 4*L^9 - L^8 - 5*L^7 - 4*L^6 - L^5 + L^4",
             "L^16 + 4*L^15 + 9*L^14 + 10*L^13 + 4*L^12 - 10*L^11 - 17*L^10 - 13*L^9 - L^8 "
             "+ 5*L^7 + 5*L^6 + L^5",
             "2*L^18 + 4*L^17 + 4*L^16 - 2*L^15 - 11*L^14 - 14*L^13 - 6*L^12 + 5*L^11 "
             "+ 10*L^10 + 6*L^9 + L^8",
             "L^20 + 2*L^19 + L^18 - 2*L^16 + L^15 + 2*L^14 + 2*L^13 - 2*L^12 - L^11 - L^10"});
    case 8:
        return parse_tpoly(
            {"L^7", "3*L^13 + 7*L^12 + 9*L^11 + L^10 - 8*L^9 - 11*L^8 - 4*L^7 + L^6 + 2*L^5",
             "L^21 + L^20 + 3*L^19 + 9*L^18 + 20*L^17 + 27*L^16 + 19*L^15 - 12*L^14 - 39*L^13 "
             "- 51*L^12 - 28*L^11 + L^10 + 22*L^9 + 19*L^8 + 8*L^7 - L^6 - L^5",
             "L^26 + L^25 + 2*L^24 + 2*L^23 + 6*L^22 + 14*L^21 + 19*L^20 + 12*L^19 - 20*L^18 "
             "- 52*L^17 - 64*L^16 - 37*L^15 + 9*L^14 + 43*L^13 + 44*L^12 + 21*L^11 - 9*L^9 "
             "- 4*L^8 - L^7",
             "-L^27 - 2*L^26 + 4*L^24 + 8*L^23 + 4*L^22 - 7*L^21 - 16*L^20 - 9*L^19 + 10*L^18 "
             "+ 23*L^17 + 22*L^16 + 3*L^15 - 9*L^14 - 12*L^13 - 3*L^12 + L^10",
             "2*L^27 + 3*L^26 + 4*L^25 + L^24 - L^23 - L^22 + L^21 - 6*L^19 - 6*L^18 - L^17 "
             "+ L^16 + 2*L^15"});
    default: throw std::invalid_argument("refdata::qd: d must be 1..8");
    }
}

// ---- Omega^3_d, d = 1..8 ----
inline LPoly omega3(long d) {
    static const std::vector<const char*> rows = {
        "1",
        "L^2 + L",
        "L^4 + L^3 + L^2",
        "L^6 + 2*L^5 + L^4 + L^3 - L^2",
        "L^8 + 2*L^7 + 2*L^6 + L^5 - L^3",
        "L^10 + 3*L^9 + 4*L^8 + 3*L^7 - L^6 - 2*L^5 - 2*L^4",
        "L^12 + 3*L^11 + 5*L^10 + 5*L^9 - 4*L^7 - 3*L^6 - L^5 + L^4",
        "L^14 + 4*L^13 + 8*L^12 + 10*L^11 + 2*L^10 - 7*L^9 - 10*L^8 - 3*L^7 + L^6 + 2*L^5",
    };
    if (d < 1 || d > 8) throw std::invalid_argument("refdata::omega3: d must be 1..8");
    return LPoly::parse(rows[static_cast<std::size_t>(d - 1)]);
}

// ---- punctual motives on A^3 (d = 6..8) and A^4 (d = 4..8) ----
inline LPoly hilb_a3(long d) {
    switch (d) {
    case 6:
        return LPoly::parse("L^10 + 3*L^9 + 7*L^8 + 9*L^7 + 9*L^6 + 7*L^5 + 5*L^4 + 3*L^3 "
                            "+ 2*L^2 + L + 1");
    case 7:
        return LPoly::parse("L^12 + 3*L^11 + 8*L^10 + 14*L^9 + 16*L^8 + 14*L^7 + 11*L^6 "
                            "+ 7*L^5 + 5*L^4 + 3*L^3 + 2*L^2 + L + 1");
    case 8:
        return LPoly::parse("L^14 + 4*L^13 + 12*L^12 + 22*L^11 + 28*L^10 + 27*L^9 + 21*L^8 "
                            "+ 15*L^7 + 11*L^6 + 7*L^5 + 5*L^4 + 3*L^3 + 2*L^2 + L + 1");
    default: throw std::invalid_argument("refdata::hilb_a3: d must be 6..8");
    }
}

inline LPoly hilb_a4(long d) {
    switch (d) {
    case 4:
        return LPoly::parse("L^9 + 2*L^8 + 3*L^7 + 5*L^6 + 4*L^5 + 4*L^4 + 3*L^3 + 2*L^2 + L + 1");
    case 5:
        return LPoly::parse("L^12 + 2*L^11 + 4*L^10 + 7*L^9 + 9*L^8 + 9*L^7 + 9*L^6 + 6*L^5 "
                            "+ 5*L^4 + 3*L^3 + 2*L^2 + L + 1");
    case 6:
        return LPoly::parse("L^15 + 3*L^14 + 7*L^13 + 13*L^12 + 17*L^11 + 20*L^10 + 20*L^9 "
                            "+ 17*L^8 + 13*L^7 + 10*L^6 + 7*L^5 + 5*L^4 + 3*L^3 + 2*L^2 + L + 1");
    case 7:
        return LPoly::parse("L^18 + 3*L^17 + 9*L^16 + 19*L^15 + 30*L^14 + 38*L^13 + 44*L^12 "
                            "+ 39*L^11 + 34*L^10 + 26*L^9 + 20*L^8 + 14*L^7 + 11*L^6 + 7*L^5 "
                            "+ 5*L^4 + 3*L^3 + 2*L^2 + L + 1");
    case 8:
        return LPoly::parse("2*L^21 + 5*L^20 + 15*L^19 + 34*L^18 + 55*L^17 + 76*L^16 + 88*L^15 "
                            "+ 87*L^14 + 77*L^13 + 64*L^12 + 49*L^11 + 38*L^10 + 28*L^9 + 21*L^8 "
                            "+ 15*L^7 + 11*L^6 + 7*L^5 + 5*L^4 + 3*L^3 + 2*L^2 + L + 1");
    default: throw std::invalid_argument("refdata::hilb_a4: d must be 4..8");
    }
}

// ---- Hilbert scheme motives of P^3, d = 5..8 ----
inline LPoly hilb_p3(long d) {
    switch (d) {
    case 5:
        return LPoly::parse("L^15 + 2*L^14 + 7*L^13 + 17*L^12 + 39*L^11 + 67*L^10 + 97*L^9 "
                            "+ 114*L^8 + 111*L^7 + 90*L^6 + 59*L^5 + 33*L^4 + 14*L^3 + 6*L^2 "
                            "+ 2*L + 1");
    case 6:
        return LPoly::parse("L^18 + 2*L^17 + 7*L^16 + 18*L^15 + 45*L^14 + 92*L^13 + 167*L^12 "
                            "+ 242*L^11 + 306*L^10 + 316*L^9 + 282*L^8 + 206*L^7 + 131*L^6 "
                            "+ 68*L^5 + 32*L^4 + 14*L^3 + 6*L^2 + 2*L + 1");
    case 7:
        return LPoly::parse("L^21 + 2*L^20 + 7*L^19 + 18*L^18 + 47*L^17 + 105*L^16 + 220*L^15 "
                            "+ 385*L^14 + 587*L^13 + 761*L^12 + 843*L^11 + 799*L^10 + 647*L^9 "
                            "+ 449*L^8 + 266*L^7 + 142*L^6 + 66*L^5 + 32*L^4 + 14*L^3 + 6*L^2 "
                            "+ 2*L + 1");
    case 8:
        return LPoly::parse("L^24 + 2*L^23 + 7*L^22 + 18*L^21 + 48*L^20 + 111*L^19 + 251*L^18 "
                            "+ 498*L^17 + 891*L^16 + 1368*L^15 + 1847*L^14 + 2132*L^13 "
                            "+ 2150*L^12 + 1853*L^11 + 1395*L^10 + 904*L^9 + 522*L^8 + 272*L^7 "
                            "+ 136*L^6 + 66*L^5 + 32*L^4 + 14*L^3 + 6*L^2 + 2*L + 1");
    default: throw std::invalid_argument("refdata::hilb_p3: d must be 5..8");
    }
}

// ---- Quot scheme motives of P^3 with a rank-3 bundle, d = 2..4 ----
inline LPoly quot_p3(long d) {
    switch (d) {
    case 2:
        return LPoly::parse("L^10 + 3*L^9 + 9*L^8 + 14*L^7 + 20*L^6 + 19*L^5 + 17*L^4 + 10*L^3 "
                            "+ 6*L^2 + 2*L + 1");
    case 3:
        return LPoly::parse("L^15 + 3*L^14 + 12*L^13 + 30*L^12 + 58*L^11 + 88*L^10 + 111*L^9 "
                            "+ 114*L^8 + 99*L^7 + 75*L^6 + 47*L^5 + 27*L^4 + 14*L^3 + 6*L^2 "
                            "+ 2*L + 1");
    case 4:
        return LPoly::parse("L^20 + 3*L^19 + 13*L^18 + 39*L^17 + 102*L^16 + 202*L^15 + 346*L^14 "
                            "+ 480*L^13 + 581*L^12 + 590*L^11 + 533*L^10 + 415*L^9 + 297*L^8 "
                            "+ 187*L^7 + 113*L^6 + 60*L^5 + 32*L^4 + 14*L^3 + 6*L^2 + 2*L + 1");
    default: throw std::invalid_argument("refdata::quot_p3: d must be 2..4");
    }
}

// ---- higher-rank Omega classes for (n, r) = (3, 3), d = 1..4 ----
inline LPoly omega33(long d) {
    const LPoly L1 = lpow(1), L2 = lpow(2), L3 = lpow(3), L4 = lpow(4);
    switch (d) {
    case 1: return proj(2);
    case 2: return proj(2) * (L1 + LPoly(1)) * L3;
    case 3: return proj(2) * (L4 + L3 + L2.scaled(2) - LPoly(1)) * L4;
    case 4:
        // the polynomial factor carries the [P^2] common to the whole list;
        // this is the unique value consistent with the rank-3 Quot series of
        // P^3 and with the Euler-level rational form (chi = 12)
        return proj(2) *
               (lpow(6) + lpow(5).scaled(2) + L4.scaled(3) + L3.scaled(3) - L2.scaled(2) -
                L1.scaled(2) - LPoly(1)) *
               lpow(6);
    default: throw std::invalid_argument("refdata::omega33: d must be 1..4");
    }
}

// ---- motivic discrepancies bar(Omega) - Omega for small (d, n) ----
inline std::vector<std::pair<std::pair<long, long>, LPoly>> eps_mot_table() {
    const LPoly one_minus_l = LPoly(1) - lpow(1);
    const LPoly p2 = proj(2);
    const LPoly L1 = lpow(1), L2 = lpow(2), L3 = lpow(3), L4 = lpow(4);
    std::vector<std::pair<std::pair<long, long>, LPoly>> rows;
    rows.push_back({{4, 3}, one_minus_l * p2 * L2});
    rows.push_back({{4, 4}, one_minus_l * p2 * (L1 + LPoly(1)) * (L2 + LPoly(1)) * L2});
    rows.push_back({{5, 3}, one_minus_l * p2 * (L1 + LPoly(1)) * L3});
    rows.push_back(
        {{5, 4}, one_minus_l * p2 * (L2 + L1 + LPoly(1)) * (L1 + LPoly(1)) * (L2 + LPoly(1)) * L3});
    rows.push_back({{6, 3}, one_minus_l * p2 * (L2.scaled(2) + L1.scaled(3) + LPoly(2)) * L4});
    rows.push_back(
        {{6, 4},
         LPoly(1) + one_minus_l * p2 *
                        ((lpow(6).scaled(2) + lpow(5).scaled(5) + L4.scaled(6) + L3.scaled(5) +
                          L2.scaled(3) + L1 - LPoly(1)) *
                             (L2 + LPoly(1)) * L3 -
                         LPoly(1))});
    return rows;
}

// ---- motivic discrepancies bar(Y) - Y for small (d, k), keyed (d, k) ----
inline std::vector<std::pair<std::pair<long, long>, LPoly>> e_mot_table() {
    const LPoly one_minus_l = LPoly(1) - lpow(1);
    const LPoly p2 = proj(2);
    const LPoly L1 = lpow(1), L2 = lpow(2);
    std::vector<std::pair<std::pair<long, long>, LPoly>> rows;
    rows.push_back({{4, 3}, one_minus_l * p2 * L2});
    rows.push_back({{5, 3}, one_minus_l * p2 * (L2 + L1 + LPoly(1)) * L2});
    rows.push_back({{5, 4}, one_minus_l * p2 * (L1 + LPoly(1)) * (L2 + LPoly(1)) * L2});
    rows.push_back(
        {{6, 3}, one_minus_l * p2 * (L2.scaled(2) + L1 + LPoly(1)) * (L2 + L1 + LPoly(1)) * L2});
    rows.push_back({{6, 4}, LPoly(1) - one_minus_l * p2 *
                                           (lpow(9) - lpow(8) - lpow(7).scaled(3) -
                                            lpow(6).scaled(5) - lpow(5).scaled(6) -
                                            lpow(4).scaled(5) - lpow(3).scaled(2) - L2 + LPoly(1))});
    rows.push_back({{6, 5}, -(one_minus_l * proj(4) *
                              (lpow(5) - lpow(4) - lpow(3) - L2.scaled(3) - L1.scaled(2) -
                               LPoly(1)) *
                              L2)});
    return rows;
}

// ---- Euler specialisations of the Quot generating functions ----
// numerator grids (x-degree, y-degree) -> integer, and (a, b) with
// denominator (1-x)^a (1-y)^b
struct ChiQuotForm {
    std::vector<std::vector<long long>> numerator; // numerator[i][j]: x^i y^j
    long a, b;
};

inline ChiQuotForm chi_quot_form(long d) {
    switch (d) {
    case 1: return {{{1}}, 1, 2};
    case 2: return {{{1, 0}, {0, -1}}, 2, 3};
    case 3: return {{{1, 0, 0}, {0, -2, 0}, {0, 0, 1}}, 3, 4};
    case 4:
        return {{{1, 0, 0, 0}, {1, -5, 1, 0}, {-1, 2, 2, 0}, {0, 0, 0, -1}}, 4, 5};
    default: throw std::invalid_argument("refdata::chi_quot_form: d must be 1..4");
    }
}

} // namespace punctual::refdata

#endif
