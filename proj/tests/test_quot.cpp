#include <doctest.h>

#include "punctual/quot.hpp"
#include "punctual/reference_data.hpp"
#include "punctual/verify.hpp"

using namespace punctual;

TEST_CASE("quot strata") {
    for (long n = 1; n <= 4; ++n)
        for (long r = 0; r <= 5; ++r) {
            CHECK(quot_stratum(3, 3, n, r) == gauss(3, r));
            CHECK(quot_stratum(4, 4, n, r) == gauss(4, r));
        }
    CHECK(quot_stratum(1, 3, 2, 1) == hilb_punctual(3, 2));
    CHECK_THROWS_AS(quot_stratum(1, 5, 2, 2), out_of_range_error);
    CHECK_THROWS_AS(quot_stratum(0, 4, 2, 2), out_of_range_error);
}

TEST_CASE("punctual quot motives") {
    for (long n = 1; n <= 5; ++n)
        for (long r = 1; r <= 5; ++r) {
            CHECK(quot_punctual(1, n, r) == proj(r - 1));
            CHECK(quot_punctual(0, n, r) == LPoly(1));
        }
    for (long d = 1; d <= 4; ++d)
        for (long n = 1; n <= 5; ++n) CHECK(quot_punctual(d, n, 1) == hilb_punctual(d, n));
    CHECK(quot_punctual(4, 1, 1) == LPoly(1));
    CHECK(quot_punctual(4, 2, 2).specialize_euler() == BigInt(20));
    CHECK_THROWS_AS(quot_punctual(5, 2, 2), out_of_range_error);
}

TEST_CASE("closed-form generating functions") {
    BiSeries q2 = quot_series(2, 4, 4);
    BiSeries expect =
        BiSeries::from_x(zeta_proj(1, 4), 4, 4) * BiSeries::from_y(zeta_proj(2, 4), 4, 4);
    BiSeries corr = BiSeries::one(4, 4);
    corr.set_coeff(1, 1, -lpow(1));
    CHECK(q2 == expect * corr);
    for (long n = 0; n <= 4; ++n)
        for (long r = 0; r <= 4; ++r) CHECK(q2.coeff(n, r) == quot_punctual(2, n + 1, r + 1));

    BiSeries q4 = quot_series(4, 4, 4);
    CHECK(q4.coeff(0, 0) == LPoly(1));
    for (long n = 0; n <= 4; ++n)
        for (long r = 0; r <= 4; ++r) CHECK(q4.coeff(n, r) == quot_punctual(4, n + 1, r + 1));
    CHECK_THROWS_AS(quot_series(5, 3, 3), out_of_range_error);
}

TEST_CASE("correction polynomial grid") {
    U4Data u = u4();
    CHECK(u.coeff(0, 0) == LPoly(1));
    CHECK(u.coeff(4, 3) == lpow(10));
    CHECK(u.coeff(3, 3) == -lpow(9));
    CHECK(u.coeff(1, 1) == LPoly::parse("-2*L^3 - 2*L^2 - L"));
    CHECK(u.coeff(0, 1).is_zero());
}

TEST_CASE("higher-rank omega classes and varieties") {
    CHECK(quot_omega(1, 3, 3) == proj(2));
    CHECK(quot_omega(2, 3, 3) == refdata::omega33(2));
    for (long d = 1; d <= 4; ++d) CHECK(quot_omega(d, 3, 3) == refdata::omega33(d));
    TSeries qv = quot_variety(proj(3), 3, 3, 4);
    CHECK(qv.coeff(4) == refdata::quot_p3(4));
    CHECK_THROWS_AS(quot_variety(proj(3), 3, 3, 5), out_of_range_error);
}

TEST_CASE("curvilinear locus and elementary component") {
    CHECK(curvilinear_motive(1, 1, 7) == LPoly(1));
    CHECK(curvilinear_motive(2, 2, 3) == proj(1).shifted(2) * proj(1).shifted(1));
    CHECK(elementary_dim_check(4, 2));
}

TEST_CASE("quot invariants") {
    for (const auto& c : verify_quot()) {
        INFO(c.name, " ", c.detail);
        CHECK(c.ok);
    }
}
