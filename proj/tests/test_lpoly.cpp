#include <doctest.h>

#include "punctual/grassmann.hpp"
#include "punctual/lpoly.hpp"

using namespace punctual;

TEST_CASE("ring operations in canonical form") {
    LPoly l = lpow(1);
    CHECK((l + 1) + (l - 1) == l.scaled(2));
    CHECK((l + 1) * (l - 1) == lpow(2) - LPoly(1));
    CHECK(lpow(-2) * (lpow(3) + lpow(2)) == l + 1);
    CHECK((l - l).is_zero());
    CHECK(LPoly(0).is_zero());
    CHECK((l + 1).degree() == 1);
    CHECK((lpow(-2) + lpow(3)).valuation() == -2);
}

TEST_CASE("exact division") {
    LPoly l = lpow(1);
    CHECK(LPoly::exact_div(lpow(2) - LPoly(1), l - 1) == l + 1);
    CHECK_THROWS_AS(LPoly::exact_div(l + 1, l - 1), not_divisible);
    // a Laurent quotient
    CHECK(LPoly::exact_div(l + 1, lpow(-1) + lpow(-2)) == lpow(2));
    // quotient of a Gaussian binomial by [P^2], frozen from long division
    LPoly q = LPoly::exact_div(gauss(2, 6), proj(2));
    CHECK(q == LPoly::parse("L^6 + L^4 + L^3 + L^2 + 1"));
    CHECK(q * proj(2) == gauss(2, 6));
}

TEST_CASE("specialisations") {
    CHECK(proj(2).specialize_euler() == BigInt(3));
    CHECK(LPoly().specialize_euler().is_zero());
    CHECK(gauss(2, 4).specialize_weight().to_string("z") == "z^4 + z^3 + 2*z^2 + z + 1");
    CHECK(proj(1).specialize_weight().to_string("z") == "z + 1");
    CHECK_THROWS_AS(lpow(-1).specialize_weight(), negative_exponent);
}

TEST_CASE("rendering and parsing round trip") {
    CHECK(gauss(2, 4).to_string() == "L^4 + L^3 + 2*L^2 + L + 1");
    CHECK(LPoly().to_string() == "0");
    CHECK((lpow(2) - lpow(5)).to_string() == "-L^5 + L^2");
    CHECK(lpow(-2).to_string() == "L^-2");
    CHECK((lpow(1) - LPoly(3)).to_latex() == "\\mathbb{L} - 3");
    CHECK(gauss(2, 4).to_latex() ==
          "\\mathbb{L}^{4} + \\mathbb{L}^{3} + 2\\mathbb{L}^{2} + \\mathbb{L} + 1");
    CHECK(LPoly::parse("L^4 + L^3 + 2*L^2 + L + 1") == gauss(2, 4));
    CHECK(LPoly::parse("-L^5 + L^2") == lpow(2) - lpow(5));
    CHECK(LPoly::parse("7") == LPoly(7));
    CHECK(LPoly::parse("0").is_zero());
    CHECK(LPoly::parse("L^-2 - 1") == lpow(-2) - LPoly(1));
    CHECK_THROWS_AS(LPoly::parse("L^"), parse_error);
    CHECK_THROWS_AS(LPoly::parse(""), parse_error);
}

TEST_CASE("json term view is sorted by decreasing exponent") {
    auto pairs = (proj(2) + lpow(5).scaled(-4)).term_pairs_desc();
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0].first == 5);
    CHECK(pairs[0].second == "-4");
    CHECK(pairs[3].first == 0);
}
