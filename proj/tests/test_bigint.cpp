#include <doctest.h>

#include "punctual/bigint.hpp"
#include "punctual/rational.hpp"

using punctual::BigInt;
using punctual::Rational;

TEST_CASE("bigint arithmetic agrees with native integers") {
    for (long long a = -40; a <= 40; a += 7)
        for (long long b = -39; b <= 39; b += 5) {
            CHECK((BigInt(a) + BigInt(b)) == BigInt(a + b));
            CHECK((BigInt(a) - BigInt(b)) == BigInt(a - b));
            CHECK((BigInt(a) * BigInt(b)) == BigInt(a * b));
            if (b != 0) {
                auto dm = BigInt::divmod(BigInt(a), BigInt(b));
                CHECK(dm.quot == BigInt(a / b));
                CHECK(dm.rem == BigInt(a % b));
            }
        }
}

TEST_CASE("bigint survives multi-limb values") {
    BigInt a = BigInt::from_string("368278371840755647668884078592000");
    BigInt b = BigInt::from_string("25852016738884976640000");
    CHECK(a.to_string() == "368278371840755647668884078592000");
    auto dm = BigInt::divmod(a, b);
    CHECK((dm.quot * b + dm.rem) == a);
    CHECK(BigInt::from_string("-17").to_string() == "-17");
    BigInt two62 = 1;
    for (int i = 0; i < 62; ++i) two62 *= 2;
    CHECK(two62.to_string() == "4611686018427387904");
    CHECK((two62 * two62).to_string() == "21267647932558653966460912964485513216");
    CHECK(punctual::gcd(BigInt(462), BigInt(1071)) == BigInt(21));
}

TEST_CASE("binomial coefficients") {
    CHECK(punctual::binomial(7, 2) == BigInt(21));
    CHECK(punctual::binomial(10, 3) == BigInt(120));
    CHECK(punctual::binomial(5, -1).is_zero());
    CHECK(punctual::binomial(5, 9).is_zero());
    CHECK(punctual::binomial(0, 0) == BigInt(1));
    CHECK(punctual::binomial(BigInt(50), 25) == punctual::binomial(50, 25));
}

TEST_CASE("rationals normalise and evaluate") {
    Rational r(BigInt(4), BigInt(-6));
    CHECK(r.to_string() == "-2/3");
    CHECK((r + Rational(BigInt(2), BigInt(3))).is_zero());
    std::vector<Rational> cs = {Rational(BigInt(-38), BigInt(15)), Rational(BigInt(-1)),
                                Rational(BigInt(8), BigInt(15))};
    punctual::RationalPoly p(cs); // (8n^2 - 15n - 38)/15
    CHECK(p.eval(BigInt(5)) == Rational(BigInt(87), BigInt(15)));
}
