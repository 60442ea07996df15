#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stardef/random.hpp"
#include "stardef/suites.hpp"

using namespace stardef;

TEST_CASE("rationals are canonical")
{
    CHECK(ratio(2, 4) == ratio(1, 2));
    CHECK(ratio(3, -6) == ratio(-1, 2));
    CHECK(to_string(ratio(6, 4)) == "3/2");
}

TEST_CASE("Gaussian rationals")
{
    QI i = QI::unit();
    CHECK(i * i == QI(-1));
    QI z(ratio(1, 2), ratio(-3, 4));
    CHECK(z * z.inverse() == QI(1));
    CHECK((z.conj() * z).is_real());
    CHECK((z.conj() * z).real() == z.norm());
    CHECK_THROWS_AS(QI(0).inverse(), std::domain_error);
}

TEST_CASE("series precision")
{
    Series a({QI(1), QI(2)}, true);
    Series b({QI(0), QI(1), QI(3)}, false);
    SUBCASE("exact plus exact keeps the longer order")
    {
        Series c = a + Series({QI(1)}, true);
        CHECK(c.exact());
        CHECK(c.order() == 1);
    }
    SUBCASE("exact times exact adds orders")
    {
        Series c = a * a;
        CHECK(c.exact());
        CHECK(c.order() == 2);
        CHECK(c.coeff(2) == QI(4));
        CHECK(c.coeff(7) == QI(0));
    }
    SUBCASE("an inexact operand caps the order")
    {
        Series c = a * b;
        CHECK_FALSE(c.exact());
        CHECK(c.order() == 2);
        CHECK_THROWS_AS(c.coeff(3), std::out_of_range);
    }
    SUBCASE("dropping a nonzero coefficient marks truncation")
    {
        CHECK_FALSE(a.truncated(0).exact());
        CHECK(Series({QI(1), QI(0)}, true).truncated(0).exact());
        CHECK(a.truncated(5).exact());
    }
}

TEST_CASE("signs of real series")
{
    CHECK(sign(RealSeries({Rational(0), Rational(2)}, true)).is_positive());
    CHECK(sign(RealSeries({Rational(0), Rational(-2)}, true)).order == 1);
    CHECK(sign(RealSeries({Rational(0)}, true)).is_zero());
    CHECK(sign(RealSeries({Rational(0), Rational(0)}, false)).is_undetermined());
    CHECK(sign(Series({QI(0), QI(0), QI(-1)}, true)).is_negative());
}

TEST_CASE("series literals")
{
    Series s = parse_series("1/2 + 3*l - l^2");
    CHECK(s.coeff(0) == QI(ratio(1, 2)));
    CHECK(s.coeff(1) == QI(3));
    CHECK(s.coeff(2) == QI(-1));
    CHECK(parse_series("i*l").coeff(1) == QI::unit());
    CHECK_THROWS(parse_series("1 +"));
}

TEST_CASE("ordered ring properties on seeded series")
{
    SuiteReport r = ordered_ring_suite(300, 7);
    for (const auto& f : r.failures) INFO(f);
    CHECK(r.pass());
    CHECK(r.cases == 1500);
}

TEST_CASE("ordered ring oracle: sign agrees with the leading coefficient")
{
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        RealSeries a = rng.real_series();
        std::optional<Rational> lead;
        for (const auto& c : a.coefficients())
            if (c != 0) {
                lead = c;
                break;
            }
        Sign s = sign(a);
        if (!lead) {
            CHECK(s.is_zero());
        } else {
            CHECK(s.is_positive() == (*lead > 0));
            CHECK(s.is_negative() == (*lead < 0));
        }
    }
}
