#include <doctest.h>

#include "punctual/strata.hpp"
#include "punctual/verify.hpp"

using namespace punctual;

TEST_CASE("cubic-form strata classes") {
    CHECK(d_class(1) == LPoly(1));
    CHECK(d_class(2) == lpow(3) + lpow(2));
    CHECK(d_class(3) == proj(9) - gauss(1, 3) - gauss(2, 3) * (lpow(3) + lpow(2)));
    CHECK(d_class(3) == LPoly::parse("L^9 + L^8 + L^7 + L^6 - L^4 - L^3 - L^2"));
}

TEST_CASE("hilbert-samuel value strings") {
    HSFunction h({1, 3, 2, 1});
    CHECK(h.size() == 7);
    CHECK(h.embedding_dimension() == 3);
    CHECK(HSFunction::very_compressed(2, 3).size() == 6);
    CHECK(HSFunction::socle_one(4, 2).values() == std::vector<long>{1, 4, 2, 1});
    CHECK_THROWS_AS(HSFunction({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(HSFunction({1, 3, 0}), std::invalid_argument);
}

TEST_CASE("very compressed strata") {
    CHECK(hs_very_compressed(2, 3) == LPoly(1));
    CHECK(hs_very_compressed(3, 1) == proj(5));
    CHECK(hs_very_compressed(2, 4).is_zero());
}

TEST_CASE("socle-one strata") {
    CHECK(hs_stratum_1kr1(1, 1) == LPoly(1));
    CHECK(hs_stratum_1kr1(2, 1) == proj(1).shifted(2));
    CHECK(hs_stratum_1kr1(2, 3) == proj(1) + lpow(3) + lpow(2));
}

TEST_CASE("fundamental strata") {
    for (long d = 2; d <= 10; ++d) {
        CHECK(y_class(1, d) == LPoly(1));
        CHECK(y_class(d - 1, d) == LPoly(1));
    }
    CHECK(y_class(2, 4) == proj(2));
    CHECK(y_class(2, 4) == gauss(1, quadric_count(2)));
    CHECK(y_class(0, 5).is_zero());
    CHECK(y_class(5, 5).is_zero());
    CHECK(y_class(7, 5).is_zero());
    CHECK(y_class(0, 1) == LPoly(1));
    CHECK_THROWS_AS(y_class(3, 9), unknown_stratum);
    CHECK_THROWS_AS(y_class(4, 10), unknown_stratum);
    // known columns survive past d = 8
    CHECK(y_class(2, 9) == goettsche_punctual(9) - proj(1).shifted(7));
    CHECK(y_class(8, 9) == LPoly(1));
}

TEST_CASE("excess strata constants and classes") {
    CHECK(gamma(0, 0) == LPoly(1));
    CHECK(gamma(2, 2) == proj(2));
    CHECK(gamma(2, 3) ==
          LPoly::parse("L^8 + L^7 + 2*L^6 + 2*L^5 + 2*L^4 - L^2 - L"));
    CHECK_THROWS_AS(gamma(2, 5), out_of_range_error);
    CHECK(c_class(1, 1, 5) == proj(3));
    for (long k = 3; k <= 8; ++k) {
        LPoly sum = c_class(1, 1, k) + c_class(1, 2, k);
        CHECK(sum == y_class(k, k + 2));
        CHECK(sum == proj(quadric_count(k) - 1));
    }
    CHECK_THROWS_AS(c_class(3, 1, 4), out_of_range_error);
    // the division in the i = 4 class is exact for every k
    for (long k = 1; k <= 10; ++k) CHECK_NOTHROW(c_class(2, 4, k));
}

TEST_CASE("stratum invariants") {
    for (const auto& c : verify_strata()) {
        INFO(c.name, " ", c.detail);
        CHECK(c.ok);
    }
}
