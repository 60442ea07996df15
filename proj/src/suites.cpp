#include "stardef/suites.hpp"

namespace stardef {

Cochain random_cochain(const FiniteStarAlgebra& a, std::size_t arity, Rng& rng)
{
    Cochain c = Cochain::zero(a, arity);
    for (Eigen::Index i = 0; i < c.values.size(); ++i)
        if (rng.range(0, 2) == 0) c.values.data()[i] = rng.scalar(3);
    return c;
}

SuiteReport hochschild_sign_suite(const FiniteStarAlgebra& a, std::size_t trials, std::uint64_t seed)
{
    SuiteReport rep{"hochschild-signs", 0, {}};
    Rng rng(seed);
    Cochain mu0 = Cochain::product(a);
    rep.check(cochain_star(a, mu0) == mu0, "mu_0* != mu_0");
    rep.check(gerstenhaber_bracket(a, mu0, mu0).is_zero(), "[mu_0, mu_0] != 0");
    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(rng.range(1, 3));
        const auto m = static_cast<std::size_t>(rng.range(0, static_cast<long>(4 - n)));
        Cochain phi = random_cochain(a, n, rng);
        Cochain psi = random_cochain(a, m, rng);
        const std::string tag = " (trial " + std::to_string(t) + ", arities " + std::to_string(n) + "," + std::to_string(m) + ")";

        const bool odd = ((n - 1) * (m + 1)) % 2 == 1;  // (n-1)(m-1) mod 2
        Cochain lhs = cochain_star(a, gerstenhaber_product(a, phi, psi));
        Cochain rhs = gerstenhaber_product(a, cochain_star(a, phi), cochain_star(a, psi));
        rep.check(lhs == (odd ? rhs.scaled(QI(-1)) : rhs), "star of the Gerstenhaber product" + tag);

        const std::size_t k = static_cast<std::size_t>(rng.range(0, 3));
        Cochain chi = random_cochain(a, k, rng);
        Cochain dchi = hochschild_delta(a, chi);
        Cochain ds = hochschild_delta(a, cochain_star(a, chi));
        rep.check(cochain_star(a, dchi) == (k % 2 == 0 ? ds.scaled(QI(-1)) : ds), "star of delta" + tag);
        rep.check(hochschild_delta(a, dchi).is_zero(), "delta^2 != 0" + tag);

        Cochain h = hermitian_decompose(a, chi).hermitian;
        Cochain dh = hochschild_delta(a, h);
        rep.check(k % 2 == 1 ? is_hermitian(a, dh) : is_antihermitian(a, dh), "parity of delta on Hermitian cochains" + tag);
    }
    return rep;
}

SuiteReport ordered_ring_suite(std::size_t trials, std::uint64_t seed)
{
    SuiteReport rep{"ordered-ring", 0, {}};
    Rng rng(seed);
    auto positive = [&]() {
        for (;;) {
            RealSeries a = rng.real_series();
            Sign s = sign(a);
            if (s.is_positive()) return a;
            if (s.is_negative()) return RealSeries(-a);
        }
    };
    for (std::size_t t = 0; t < trials; ++t) {
        const std::string tag = " (trial " + std::to_string(t) + ")";
        RealSeries a = positive(), b = positive();
        rep.check(sign(a + b).is_positive(), "P + P not in P" + tag);
        rep.check(sign(a * b).is_positive(), "P P not in P" + tag);

        RealSeries c = rng.real_series();
        int count = (sign(c).is_positive() ? 1 : 0) + (c.is_zero() ? 1 : 0) + (sign(-c).is_positive() ? 1 : 0);
        rep.check(count == 1, "trichotomy" + tag);

        QI z = rng.scalar();
        Rational zz = (z.conj() * z).real();
        rep.check((z.conj() * z).is_real() && zz >= 0, "conj(z) z < 0" + tag);

        const auto n = static_cast<std::size_t>(rng.range(0, 3));
        RealSeries x = rng.real_series(), y = rng.real_series();
        rep.check((x.truncated(n) * y.truncated(n)).truncated(n) == (x * y).truncated(n), "truncation consistency" + tag);
    }
    return rep;
}

SuiteReport grassmann_cone_suite(std::size_t n, std::size_t trials, std::uint64_t seed)
{
    SuiteReport rep{"grassmann-cone", 0, {}};
    FiniteStarAlgebra g = grassmann_algebra(n);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        FiniteFunctional w{VectorQI::Constant(g.d(), QI(0))};
        switch (t % 4) {
        case 0:  // on the ray
            w.covector(0) = QI(rng.nonnegative_rational());
            break;
        case 1:  // negative or complex at 1
            w.covector(0) = rng.scalar();
            break;
        case 2:  // a single higher component
            w.covector(0) = QI(rng.nonnegative_rational());
            w.covector(rng.range(1, g.d() - 1)) = rng.scalar();
            break;
        default:
            for (Eigen::Index s = 0; s < g.d(); ++s)
                if (rng.coin()) w.covector(s) = rng.scalar();
        }
        bool direct = grassmann_functional_positive(g, w);
        bool gram = grassmann_functional_positive_gram(g, w);
        rep.check(direct == gram, "characterization disagrees with the Gram route (trial " + std::to_string(t) + ")");
    }
    return rep;
}

}  // namespace stardef
