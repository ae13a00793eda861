#include <doctest.h>
#include <orbistring/cyclotomic.hpp>

#include <random>

using namespace orbistring;

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(9) == 6);
}

TEST_CASE("roots of unity")
{
    // zeta_4^2 = -1
    CHECK(CycloNumber::zeta_power(4, 2) == CycloNumber(-1, 4));
    // 1 + zeta_3 + zeta_3^2 = 0
    CycloNumber s = CycloNumber(1, 3) + CycloNumber::zeta_power(3, 1) + CycloNumber::zeta_power(3, 2);
    CHECK(s.is_zero());
    // zeta_6 = -zeta_3^2 across levels
    CHECK(CycloNumber::zeta_power(6, 1) == -CycloNumber::zeta_power(3, 2));
    CHECK(CycloNumber::zeta_power(8, 2) == CycloNumber::zeta_power(4, 1));
    CHECK(CycloNumber::zeta_power(5, -1) == CycloNumber::zeta_power(5, 4));
}

TEST_CASE("printing")
{
    CHECK(CycloNumber().to_string() == "0");
    CHECK(CycloNumber(make_rational(-3, 2)).to_string() == "-3/2");
    CycloNumber x = CycloNumber(2, 5) - CycloNumber::zeta_power(5, 1) * CycloNumber(make_rational(1, 3), 5) +
                    CycloNumber::zeta_power(5, 3);
    CHECK(x.to_string() == "2 - 1/3*z + z^3");
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(3);
    for (int level : {3, 4, 5, 7, 8, 12}) {
        CAPTURE(level);
        auto random = [&] {
            std::vector<Rational> c(level);
            for (auto& v : c)
                v = make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
            return CycloNumber::from_polynomial(level, c);
        };
        for (int t = 0; t < 20; ++t) {
            CycloNumber a = random(), b = random(), c = random();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero())
                CHECK(a * a.inverse() == CycloNumber(1, level));
        }
    }
}
