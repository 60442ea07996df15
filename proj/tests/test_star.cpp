#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stardef/random.hpp"
#include "stardef/star.hpp"

using namespace stardef;

TEST_CASE("Weyl terms match the Moyal expansion")
{
    for (std::size_t n : {1, 2}) {
        StarProduct w = make_weyl(n, 4);
        Rng rng(100 + n);
        for (int t = 0; t < 15; ++t) {
            Polynomial f = rng.polynomial(w.frame(), 4), g = rng.polynomial(w.frame(), 4);
            for (std::size_t r = 0; r <= 4; ++r) CHECK(w.mu(r).apply(f, g) == oracle::moyal_term(f, g, r));
        }
    }
}

TEST_CASE("Wick terms match the exponential expansion")
{
    for (std::size_t n : {1, 2}) {
        StarProduct k = make_wick(n, 4);
        Rng rng(200 + n);
        for (int t = 0; t < 15; ++t) {
            Polynomial f = rng.polynomial(k.frame(), 4), g = rng.polynomial(k.frame(), 4);
            for (std::size_t r = 0; r <= 4; ++r) CHECK(k.mu(r).apply(f, g) == oracle::wick_term(f, g, r));
        }
    }
}

TEST_CASE("star_mul sums the graded terms")
{
    StarProduct w = make_weyl(1, 4);
    Polynomial q = parse_polynomial("q1", w.frame()), p = parse_polynomial("p1", w.frame());
    Polynomial comm = star_mul(w, q, p, 4) - star_mul(w, p, q, 4);
    CHECK(comm == Polynomial::constant(w.frame(), parse_series("i*l")));
    CHECK(comm.exact());
    Rng rng(9);
    Polynomial f = rng.polynomial(w.frame(), 3), g = rng.polynomial(w.frame(), 3);
    CHECK(star_mul(w, f, g, 4) == oracle::series_product(f, g, 4, oracle::moyal_term));
}

TEST_CASE("truncation beyond the stored order is refused or marked")
{
    StarProduct w = make_weyl(1, 2);
    Polynomial f = parse_polynomial("q1^3", w.frame()), g = parse_polynomial("p1^3", w.frame());
    // Degree 3 needs mu_3, which is not stored: exact evaluation is impossible.
    CHECK_THROWS(star_mul(w, f, g, 3));
    Polynomial h = star_mul(w, f, g, 2);
    CHECK_FALSE(h.exact());
    // Low degree inputs are exact beyond the stored order.
    Polynomial q = parse_polynomial("q1", w.frame());
    CHECK(star_mul(w, q, q, 5).exact());
}

TEST_CASE("associativity and Hermiticity")
{
    for (const auto& p : {make_weyl(1, 4), make_wick(1, 4), make_weyl(2, 3)}) {
        LawReport a = assoc_check(p, 3, p.order());
        LawReport h = hermitian_check(p, 3, p.order());
        CHECK_MESSAGE(a.pass, p.name() << " " << a.detail);
        CHECK_MESSAGE(h.pass, p.name() << " " << h.detail);
        CHECK(a.cases > 0);
    }
}

TEST_CASE("a deliberately broken product fails the associativity law")
{
    StarProduct w = make_weyl(1, 2);
    std::vector<BidiffOperator> terms = w.graded_terms();
    terms[2] = terms[2].scaled(Series(2));
    StarProduct bad(w.frame(), terms, "broken", true);
    LawReport r = assoc_check(bad, 3, 2);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.size() == 3);
}

TEST_CASE("derivation exponentials")
{
    const VariableFrame c1 = VariableFrame::holomorphic(1);
    const VariableFrame r1 = VariableFrame::real(1);
    SUBCASE("d/dz with scale 2 is the Wick product")
    {
        StarProduct e = make_exp_product(c1, {DiffOperator::partial(c1, 0, Polynomial::constant(c1, Series(1)))},
                                         Rational(2), 4, 4);
        StarProduct k = make_wick(1, 4);
        for (std::size_t r = 0; r <= 4; ++r) CHECK(e.mu(r) == k.mu(r));
    }
    SUBCASE("non-commuting derivations are rejected with a witness")
    {
        std::vector<DiffOperator> ds{DiffOperator::partial(r1, 0, Polynomial::constant(r1, Series(1))),
                                     DiffOperator::partial(r1, 1, Polynomial::variable(r1, 0))};
        try {
            make_exp_product(r1, ds, Rational(1), 2, 3);
            FAIL("expected NonCommutingDerivations");
        } catch (const NonCommutingDerivations& e) {
            const DiffOperator& a = ds[e.first()];
            DiffOperator b = e.with_conjugate() ? ds[e.second()].conj() : ds[e.second()];
            Polynomial comm = a.apply(b.apply(e.witness())) - b.apply(a.apply(e.witness()));
            CHECK_FALSE(comm.is_zero());
            CHECK(comm == e.value());
        }
    }
    SUBCASE("higher order operators are rejected")
    {
        DiffOperator d2(r1);
        d2.add_term({2, 0}, Polynomial::constant(r1, Series(1)));
        CHECK_THROWS_AS(make_exp_product(r1, {d2}, Rational(1), 2, 3), std::invalid_argument);
    }
}

TEST_CASE("sum-of-squares form of the Wick terms")
{
    StarProduct k = make_wick(2, 4);
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = rng.polynomial(k.frame(), 4);
        for (std::size_t r = 1; r <= 4; ++r) {
            auto terms = sum_of_squares(k, f, r);
            for (const auto& s : terms) CHECK(s.weight > 0);
            CHECK(sum_of_squares_value(terms, k.frame()) == oracle::wick_term(f.conj(), f, r));
        }
    }
}

TEST_CASE("e^{l Laplacian} intertwines Weyl and Wick")
{
    StarProduct w = make_weyl(1, 4), k = make_wick(1, 4);
    EquivalenceTransform t = make_T_laplace(VariableFrame::real(1), Rational(1), 4);
    CHECK(t.is_real());
    CHECK(t.is_constant_coefficient());
    LawReport r = check_equivalence(t, w, k, 3, 4);
    CHECK_MESSAGE(r.pass, r.detail);
    LawReport wrong = check_equivalence(make_T_laplace(VariableFrame::real(1), Rational(-1), 4), w, k, 3, 4);
    CHECK_FALSE(wrong.pass);
}

TEST_CASE("transform terms and inverse")
{
    const VariableFrame r1 = VariableFrame::real(1);
    EquivalenceTransform t = make_T_laplace(r1, Rational(1), 4);
    EquivalenceTransform s = transform_invert(t, 4);
    Rng rng(23);
    for (int k = 0; k < 10; ++k) {
        Polynomial f = rng.polynomial(r1, 5);
        CHECK(transform_apply(t, f, 4) == oracle::laplace_exp(f, 4));
        CHECK(equal_up_to(transform_apply(s, transform_apply(t, f, 4), 4), f, 4));
    }
}

TEST_CASE("transported Weyl product is Wick in real coordinates")
{
    StarProduct w = make_weyl(1, 3), k = make_wick(1, 3);
    EquivalenceTransform t = make_T_laplace(VariableFrame::real(1), Rational(1), 3);
    StarProduct tw = transport_product(w, t, 3);
    Rng rng(29);
    for (int c = 0; c < 10; ++c) {
        Polynomial f = rng.polynomial(w.frame(), 3), g = rng.polynomial(w.frame(), 3);
        for (std::size_t r = 0; r <= 3; ++r)
            CHECK(tw.mu(r).apply(f, g) == frame_change(k.mu(r).apply(frame_change(f), frame_change(g))));
    }
}
