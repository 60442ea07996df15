#include "stardef/random.hpp"

namespace stardef {

Rational Rng::rational(long bound)
{
    long num = range(-bound, bound);
    long den = range(1, bound);
    return ratio(num, den);
}

Rational Rng::nonnegative_rational(long bound)
{
    long num = range(0, bound);
    long den = range(1, bound);
    return ratio(num, den);
}

QI Rng::scalar(long bound, bool complex)
{
    Rational re = rational(bound);
    Rational im = complex ? rational(bound) : Rational(0);
    return QI(re, im);
}

Polynomial Rng::polynomial(const VariableFrame& frame, unsigned degree, std::size_t max_terms, bool complex)
{
    const auto monomials = monomials_up_to(frame, degree);
    const std::size_t count = static_cast<std::size_t>(range(1, static_cast<long>(max_terms)));
    Polynomial f(frame);
    for (std::size_t t = 0; t < count; ++t) {
        const auto& e = monomials[next() % monomials.size()];
        QI c = scalar(3, complex);
        if (c.is_zero()) c = QI(1);
        f = f + Polynomial::monomial(frame, e, Series(c));
    }
    return f;
}

Point Rng::point(const VariableFrame& frame, long bound)
{
    if (frame.is_real()) {
        std::vector<Rational> x;
        for (std::size_t v = 0; v < frame.num_vars(); ++v) x.push_back(rational(bound));
        return real_point(x);
    }
    std::vector<QI> z;
    for (std::size_t v = 0; v < frame.n; ++v) z.push_back(scalar(bound));
    return holomorphic_point(z);
}

RealSeries Rng::real_series(std::size_t max_order, long bound)
{
    std::size_t order = static_cast<std::size_t>(range(0, static_cast<long>(max_order)));
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= order; ++k) c.push_back(rational(bound));
    return RealSeries(std::move(c), true);
}

}  // namespace stardef
