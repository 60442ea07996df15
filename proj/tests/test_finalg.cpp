#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stardef/positivity_bridge.hpp"
#include "stardef/suites.hpp"

using namespace stardef;

TEST_CASE("built-in algebras satisfy the axioms")
{
    for (const auto& a : {matrix_algebra(2), matrix_algebra(3), grassmann_algebra(1), grassmann_algebra(2),
                          grassmann_algebra(3), dual_numbers()}) {
        CHECK_NOTHROW(custom_algebra(a.name, a.labels, a.mu0, a.involution, a.unit));
    }
}

TEST_CASE("custom algebra validation rejects broken tables")
{
    FiniteStarAlgebra d = dual_numbers();
    MatrixQI j = d.involution;
    j(0, 1) = QI(1);  // e* = 1 + e is not involutive
    CHECK_THROWS_AS(custom_algebra("bad", d.labels, d.mu0, j, d.unit), AxiomError);
    MatrixQI mu = d.mu0;
    mu(0, 0) = QI(0);  // 1 1 = e: (1 1) e = 0 but 1 (1 e) = e
    mu(1, 0) = QI(1);
    CHECK_THROWS_AS(custom_algebra("bad", d.labels, mu, d.involution, std::nullopt), AxiomError);
}

TEST_CASE("matrix units multiply as E_ij E_jk = E_ik")
{
    FiniteStarAlgebra m = matrix_algebra(2);
    auto e = [&](std::size_t i, std::size_t j) { return basis_vector(m, i * 2 + j); };
    CHECK(alg_mul(m, e(0, 1), e(1, 0)) == e(0, 0));
    CHECK(is_zero_matrix<QI>(alg_mul(m, e(0, 1), e(0, 1))));
    CHECK(alg_star(m, e(0, 1)) == e(1, 0));
    CHECK(alg_star(m, e(0, 1) * QI::unit()) == e(1, 0) * (-QI::unit()));
}

TEST_CASE("Grassmann signs")
{
    FiniteStarAlgebra g = grassmann_algebra(2);
    VectorQI e1 = basis_vector(g, 1), e2 = basis_vector(g, 2), e12 = basis_vector(g, 3);
    CHECK(alg_mul(g, e1, e2) == e12);
    CHECK(alg_mul(g, e2, e1) == VectorQI(-e12));
    CHECK(is_zero_matrix<QI>(alg_mul(g, e1, e1)));
    // (e1 e2)* = e2* e1* = e2 e1 = -e1 e2.
    CHECK(alg_star(g, e12) == VectorQI(-e12));
}

TEST_CASE("PSD certificates")
{
    MatrixQI m(2, 2);
    m << QI(2), QI(1), QI(1), QI(2);
    CHECK(psd_certificate(m).positive);
    m << QI(1), QI(2), QI(2), QI(1);
    PsdCertificate c = psd_certificate(m);
    CHECK_FALSE(c.positive);
    CHECK(c.failing_index.has_value());
    m << QI(1), QI::unit(), -QI::unit(), QI(1);
    CHECK(psd_certificate(m).positive);
    m << QI(1), QI(1), QI(0), QI(1);
    CHECK_THROWS_AS(psd_certificate(m), NotHermitian);
}

TEST_CASE("PSD certificate agrees with sampled quadratic forms")
{
    Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        MatrixQI b(3, 3);
        for (Eigen::Index i = 0; i < 3; ++i)
            for (Eigen::Index j = 0; j < 3; ++j) b(i, j) = rng.scalar(2);
        MatrixQI h = multiply(adjoint(b), b);
        CHECK(psd_certificate(h).positive);
        MatrixQI s = h;
        s(0, 0) -= QI(50);
        // A negative diagonal entry is a negative value <e_k, S e_k>.
        bool any_negative = false;
        for (Eigen::Index k = 0; k < 3; ++k) any_negative = any_negative || s(k, k).real() < 0;
        if (any_negative) CHECK_FALSE(psd_certificate(s).positive);
    }
}

TEST_CASE("Grassmann positive cone is the ray at 1")
{
    for (std::size_t n : {1, 2, 3}) {
        SuiteReport r = grassmann_cone_suite(n, 100, 60 + n);
        CHECK(r.pass());
        FiniteStarAlgebra g = grassmann_algebra(n);
        FiniteFunctional w{VectorQI::Constant(g.d(), QI(0))};
        w.covector(0) = QI(1);
        CHECK(grassmann_functional_positive(g, w));
        w.covector(g.d() - 1) = QI(ratio(1, 100));
        CHECK_FALSE(grassmann_functional_positive(g, w));
        CHECK_FALSE(grassmann_functional_positive_gram(g, w));
    }
}

TEST_CASE("separating functionals")
{
    for (std::size_t n : {2, 3}) {
        FiniteStarAlgebra m = matrix_algebra(n);
        Rng rng(70 + n);
        for (int t = 0; t < 30; ++t) {
            VectorQI h = random_hermitian(m, rng);
            SeparatingFunctional s = find_separating_functional(m, h);
            CHECK_FALSE(s.value.is_zero());
            CHECK(s.value == s.omega(h));
            // Vector states are positive: omega(b* b) = |b v|^2.
            VectorQI b = random_hermitian(m, rng) + basis_vector(m, 1) * QI::unit();
            QI val = s.omega(alg_mul(m, alg_star(m, b), b));
            CHECK(val.is_real());
            CHECK(val.real() >= 0);
        }
        CHECK_THROWS(find_separating_functional(m, VectorQI::Constant(m.d(), QI(0))));
        CHECK_THROWS_AS(find_separating_functional(m, basis_vector(m, 1)), NotHermitian);
    }
}
