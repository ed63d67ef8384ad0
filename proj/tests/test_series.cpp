#include <doctest.h>

#include "punctual/grassmann.hpp"
#include "punctual/tseries.hpp"

using namespace punctual;

TEST_CASE("truncated arithmetic") {
    TSeries a = TSeries::one(2);
    a.set_coeff(1, LPoly(1)); // 1 + t
    TSeries b = TSeries::one(2);
    b.set_coeff(1, LPoly(-1)); // 1 - t
    TSeries prod = a * b;
    CHECK(prod.coeff(0) == LPoly(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == LPoly(-1));

    TSeries c = TSeries::one(2);
    c.set_coeff(1, lpow(1)); // 1 + L t
    TSeries sq = c * c;
    CHECK(sq.coeff(1) == lpow(1).scaled(2));
    CHECK(sq.coeff(2) == lpow(2));

    TSeries x = TSeries::constant(lpow(3), 0), y = TSeries::constant(proj(1), 0);
    CHECK((x * y).coeff(0) == lpow(3) * proj(1));

    CHECK_THROWS_AS(TSeries::one(2) + TSeries::one(3), order_mismatch);
    auto [ta, tb] = truncate_to_min(TSeries::one(5), TSeries::one(3));
    CHECK(ta.order() == 3);
    CHECK((ta + tb).order() == 3);
}

TEST_CASE("series inversion") {
    TSeries g = TSeries::one(3);
    g.set_coeff(1, LPoly(-1)); // 1 - t
    TSeries inv = g.inverse();
    for (long i = 0; i <= 3; ++i) CHECK(inv.coeff(i) == LPoly(1));

    TSeries zp1 = zeta_proj(1, 2);
    TSeries iz = zp1.inverse();
    CHECK(iz.coeff(0) == LPoly(1));
    CHECK(iz.coeff(1) == -proj(1));
    CHECK(iz.coeff(2) == lpow(1));

    TSeries bad = TSeries::constant(LPoly(2), 2);
    bad.set_coeff(1, LPoly(1));
    CHECK_THROWS_AS(bad.inverse(), non_unit_constant);
}

TEST_CASE("projective zeta functions") {
    TSeries z0 = zeta_proj(0, 3);
    for (long i = 0; i <= 3; ++i) CHECK(z0.coeff(i) == LPoly(1));
    TSeries z1 = zeta_proj(1, 3);
    CHECK(z1.coeff(0) == LPoly(1));
    CHECK(z1.coeff(1) == proj(1));
    CHECK(z1.coeff(2) == proj(2));
    CHECK(z1.coeff(3) == proj(3));
    TSeries empty = zeta_proj(-1, 5);
    CHECK(empty == TSeries::one(5));
}

TEST_CASE("zeta of an arbitrary class") {
    CHECK(zeta_class(LPoly(1), 4) == zeta_proj(0, 4));
    TSeries z = zeta_class(lpow(2) + lpow(1), 2);
    CHECK(z.coeff(1) == lpow(2) + lpow(1));
    CHECK(z.coeff(2) == lpow(4) + lpow(3) + lpow(2));
    TSeries neg = zeta_class(LPoly(-1), 3);
    CHECK(neg.coeff(0) == LPoly(1));
    CHECK(neg.coeff(1) == LPoly(-1));
    CHECK(neg.coeff(2).is_zero());
    CHECK(neg.coeff(3).is_zero());
}

TEST_CASE("bivariate series") {
    BiSeries id = BiSeries::one(3, 3);
    CHECK(id.coeff(0, 0) == LPoly(1));
    CHECK(id.coeff(1, 2).is_zero());

    // zeta_{P^0}(x) zeta_{P^1}(y): coefficient of x^n y^r is [P^r]
    BiSeries q = BiSeries::from_x(zeta_proj(0, 3), 3, 3) * BiSeries::from_y(zeta_proj(1, 3), 3, 3);
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j) CHECK(q.coeff(i, j) == proj(j));

    BiSeries f = BiSeries::one(3, 3);
    f.set_coeff(1, 1, -lpow(1)); // 1 - L x y
    BiSeries shifted = id * f;
    CHECK(shifted.coeff(1, 1) == -lpow(1));
    CHECK(shifted.coeff(0, 0) == LPoly(1));
    CHECK_THROWS_AS(BiSeries::one(2, 2) * BiSeries::one(2, 3), order_mismatch);
}

TEST_CASE("exact polynomials over the coefficient ring") {
    TPoly p(std::vector<LPoly>{LPoly(1), lpow(2), -lpow(2)});
    CHECK(p.degree() == 2);
    CHECK(p.eval_one() == LPoly(1));
    CHECK(p.to_string() == "1 + L^2*t - L^2*t^2");
    TPoly q(std::vector<LPoly>{proj(1), LPoly(1)});
    CHECK((p * q).degree() == 3);
    CHECK((p * q).coeff(0) == proj(1));
    CHECK(q.to_string() == "(L + 1) + t");
    CHECK(p.to_series(4).coeff(3).is_zero());
}
