#include <doctest.h>

#include "punctual/plethystic.hpp"
#include "punctual/reference_data.hpp"
#include "punctual/verify.hpp"

using namespace punctual;

TEST_CASE("plethystic exponential") {
    // Exp([X] t) = zeta_X(t)
    LPoly x = proj(3);
    TSeries a(6);
    a.set_coeff(1, x);
    CHECK(exp_series(a) == zeta_class(x, 6));

    CHECK(exp_series(TSeries(5)) == TSeries::one(5));

    TSeries b(3);
    b.set_coeff(1, LPoly(1));
    b.set_coeff(2, LPoly(1)); // t + t^2
    TSeries expect = geometric_lpow(0, 3);
    TSeries f2(3);
    f2.set_coeff(0, LPoly(1));
    f2.set_coeff(2, LPoly(1)); // 1/(1-t^2) truncated
    CHECK(exp_series(b) == expect * f2);

    TSeries bad = TSeries::one(3);
    CHECK_THROWS_AS(exp_series(bad), nonzero_constant);
}

TEST_CASE("plethystic logarithm") {
    TSeries geo = geometric_lpow(0, 5);
    TSeries lg = log_series(geo);
    CHECK(lg.coeff(1) == LPoly(1));
    for (long i = 2; i <= 5; ++i) CHECK(lg.coeff(i).is_zero());

    TSeries gs = goettsche_series(6);
    TSeries lgs = log_series(gs);
    for (long d = 1; d <= 6; ++d) CHECK(lgs.coeff(d) == lpow(d - 1));

    TSeries bad(3);
    CHECK_THROWS_AS(log_series(bad), non_unit_constant);
}

TEST_CASE("omega classes") {
    CHECK(omega(4, 3) == refdata::omega3(4));
    for (long d = 1; d <= 8; ++d) {
        CHECK(omega(d, 3) == refdata::omega3(d));
        CHECK(omega(d, 2) == (d == 1 ? LPoly(1) : lpow(d - 1)));
        CHECK(omega(d, 1) == (d == 1 ? LPoly(1) : LPoly()));
    }
    for (long n = 1; n <= 6; ++n) CHECK(omega(1, n) == LPoly(1));
    CHECK_THROWS_AS(omega(9, 3), unknown_stratum);
}

TEST_CASE("omega series numerators") {
    CHECK(q_poly(2) == TPoly(lpow(1)));
    CHECK(q_poly(4) == refdata::qd(4));
    CHECK(q_poly(8) == refdata::qd(8));
    for (long d = 1; d <= 8; ++d) CHECK(q_poly(d) == refdata::qd(d));
    CHECK_THROWS_AS(q_poly(9), unknown_stratum);
}

TEST_CASE("omega recursion") {
    CHECK(omega_recursion_check(3, 3));
    CHECK(omega_recursion_check(4, 6));
    CHECK(omega_recursion_check(8, 10));
}

TEST_CASE("Hilbert series of a variety") {
    // a point reproduces the punctual series
    TSeries pt = hilb_variety(LPoly(1), 3, 6);
    for (long d = 0; d <= 6; ++d) CHECK(pt.coeff(d) == hilb_punctual(d, 3));

    // symmetric powers of a curve
    TSeries line = hilb_variety(proj(1), 1, 6);
    for (long d = 0; d <= 6; ++d) CHECK(line.coeff(d) == proj(d));

    TSeries p3 = hilb_variety(proj(3), 3, 8);
    for (long d = 5; d <= 8; ++d) CHECK(p3.coeff(d) == refdata::hilb_p3(d));
    CHECK_THROWS_AS(hilb_variety(proj(3), 3, 9), unknown_stratum);
}

TEST_CASE("plethystic invariants") {
    for (const auto& c : verify_plethystic()) {
        INFO(c.name, " ", c.detail);
        CHECK(c.ok);
    }
}
