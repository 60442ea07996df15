#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stardef/functionals.hpp"
#include "stardef/random.hpp"

using namespace stardef;

namespace {

const VariableFrame R1 = VariableFrame::real(1);

Point origin() { return Point(2, QI(0)); }

}  // namespace

TEST_CASE("classical functionals")
{
    ClassicalFunctional d = delta_at(R1, real_point({Rational(1), Rational(2)}));
    CHECK(d(parse_polynomial("q1*p1 + l", R1)) == parse_series("2 + l"));
    CHECK(d.is_nonnegative_point_mass());

    ClassicalFunctional m = discrete_measure(R1, {origin(), real_point({Rational(1), Rational(0)})},
                                             {QI(ratio(1, 2)), QI(ratio(1, 2))});
    CHECK(m(parse_polynomial("q1^2", R1)) == Series(QI(ratio(1, 2))));
    CHECK_THROWS_AS(discrete_measure(R1, {origin()}, {QI(-1)}), std::invalid_argument);
    CHECK_THROWS_AS(discrete_measure(R1, {origin()}, {QI::unit()}), std::invalid_argument);

    ClassicalFunctional dd(R1);
    dd.add_term(origin(), DiffOperator::from_symbol(parse_polynomial("q1^2", R1)), QI(1));
    CHECK(dd(parse_polynomial("q1^2 + p1", R1)) == Series(2));
    CHECK_FALSE(dd.is_nonnegative_point_mass());
    CHECK_THROWS(dd.add_term(origin(), DiffOperator::partial(R1, 0, Polynomial::variable(R1, 0)), QI(1)));
}

TEST_CASE("evaluation precision")
{
    EquivalenceTransform t = make_T_laplace(R1, Rational(1), 2);
    DeformedFunctional w = deform_via_T(delta_at(R1, origin()), t);
    Polynomial low = parse_polynomial("q1^2 + p1^2", R1);
    CHECK(func_eval(w, low, 5).exact());
    CHECK(func_eval(w, low, 5) == parse_series("l"));
    Polynomial high = parse_polynomial("q1^6", R1);
    CHECK_THROWS_AS(func_eval(w, high, 3), std::invalid_argument);
    CHECK_FALSE(func_eval(w, high, 2).exact());

    DeformedFunctional c = DeformedFunctional::classical(delta_at(R1, origin()));
    CHECK(func_eval(c, high.scaled(parse_series("1 + l^4")), 6).exact());
}

TEST_CASE("deform_via_T matches the Laplacian oracle")
{
    EquivalenceTransform t = make_T_laplace(R1, Rational(1), 4);
    Rng rng(41);
    for (int k = 0; k < 20; ++k) {
        Point x = rng.point(R1);
        DeformedFunctional w = deform_via_T(delta_at(R1, x), t);
        Polynomial f = rng.polynomial(R1, 4);
        CHECK(func_eval(w, f, 4) == oracle::laplace_exp(f, 4).eval(x).truncated(4));
    }
}

TEST_CASE("partition of unity deformation")
{
    EquivalenceTransform t = make_T_laplace(R1, Rational(1), 4);
    StarProduct w = make_weyl(1, 4);
    ClassicalFunctional d = delta_at(R1, origin());
    Rng rng(43);
    SUBCASE("a single constant chart reduces to deform_via_T")
    {
        DeformedFunctional a = partition_deform(d, {{Polynomial::constant(R1, Series(1)), t}}, w, 4);
        DeformedFunctional b = deform_via_T(d, t);
        for (int k = 0; k < 15; ++k) {
            Polynomial f = rng.polynomial(R1, 4);
            CHECK(func_eval(a, f, 4) == func_eval(b, f, 4));
        }
    }
    SUBCASE("two constant charts with |chi|^2 summing to one")
    {
        Polynomial c1 = Polynomial::constant(R1, Series(QI(ratio(3, 5))));
        Polynomial c2 = Polynomial::constant(R1, Series(QI(Rational(0), ratio(4, 5))));
        DeformedFunctional a = partition_deform(d, {{c1, t}, {c2, t}}, w, 4);
        DeformedFunctional b = deform_via_T(d, t);
        for (int k = 0; k < 15; ++k) {
            Polynomial f = rng.polynomial(R1, 4);
            CHECK(func_eval(a, f, 4) == func_eval(b, f, 4));
        }
    }
    SUBCASE("a family that is not a partition of unity is rejected")
    {
        Polynomial half = Polynomial::constant(R1, Series(QI(ratio(1, 2))));
        try {
            partition_deform(d, {{half, t}}, w, 4);
            FAIL("expected PartitionError");
        } catch (const PartitionError& e) {
            CHECK(e.residual() == Polynomial::constant(R1, Series(QI(ratio(-3, 4)))));
        }
    }
}

TEST_CASE("audit grid order")
{
    auto grid = audit_grid(R1, 2, 3, 1);
    // 6 monomials, 15 pair sums, 15 complex pair sums, 3 random.
    CHECK(grid.size() == 39);
    CHECK(grid[0] == parse_polynomial("1", R1));
    CHECK(grid[6] == parse_polynomial("1 + q1", R1));
    CHECK(grid[21] == parse_polynomial("1 + i*q1", R1));
    CHECK(audit_grid(R1, 2, 3, 1) == grid);
}

TEST_CASE("positivity audits")
{
    StarProduct w = make_weyl(1, 4);
    DeformedFunctional d = DeformedFunctional::classical(delta_at(R1, origin()));
    PositivityReport bad = positivity_audit(d, w, 2, 4, 10, 1);
    REQUIRE(bad.verdict == PositivityReport::Verdict::Violation);
    CHECK(*bad.witness == parse_polynomial("q1^2 + p1^2", R1));
    CHECK(*bad.value == parse_series("-l^2").truncated(4));

    DeformedFunctional good = deform_via_T(delta_at(R1, origin()), make_T_laplace(R1, Rational(1), 4));
    CHECK(positivity_audit(good, w, 2, 4, 10, 1).verdict == PositivityReport::Verdict::NoViolationFound);

    StarProduct k = make_wick(1, 4);
    DeformedFunctional dk = DeformedFunctional::classical(delta_at(VariableFrame::holomorphic(1), Point(2, QI(0))));
    CHECK(positivity_audit(dk, k, 2, 4, 10, 1).verdict == PositivityReport::Verdict::CertifiedPositive);
}

TEST_CASE("Cauchy-Schwarz")
{
    StarProduct k = make_wick(1, 4);
    const VariableFrame c1 = VariableFrame::holomorphic(1);
    DeformedFunctional d = DeformedFunctional::classical(delta_at(c1, Point(2, QI(0))));
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        Polynomial a = rng.polynomial(c1, 2), b = rng.polynomial(c1, 2);
        CauchySchwarzReport r = cauchy_schwarz_check(d, k, a, b, 4);
        CHECK(r.symmetric);
        CHECK(r.pass);
    }
    StarProduct w = make_weyl(1, 4);
    DeformedFunctional dw = DeformedFunctional::classical(delta_at(R1, origin()));
    PositivityReport prior = positivity_audit(dw, w, 2, 4, 0, 1);
    CauchySchwarzReport r = cauchy_schwarz_check(dw, w, parse_polynomial("q1", R1), parse_polynomial("p1", R1), 4, &prior);
    CHECK(r.skipped);
}
