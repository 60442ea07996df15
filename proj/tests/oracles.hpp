#ifndef STARDEF_TESTS_ORACLES_HPP
#define STARDEF_TESTS_ORACLES_HPP

// Reference computations written from the defining formulas. They use only
// polynomial arithmetic, derivatives and the algebra's multiplication table.

#include <tuple>
#include <vector>

#include "stardef/finalg.hpp"
#include "stardef/hochschild.hpp"
#include "stardef/poly.hpp"

namespace oracle {

using namespace stardef;

struct Leg {
    std::size_t left, right;
    QI coeff;
};

struct Pair {
    Polynomial a, b;
    QI coeff;
};

/// (sum_legs c d_left (x) d_right)^r applied to f (x) g, then multiplied out.
inline Polynomial bidiff_power(const Polynomial& f, const Polynomial& g, const std::vector<Leg>& legs, std::size_t r)
{
    std::vector<Pair> cur{{f, g, QI(1)}};
    for (std::size_t s = 0; s < r; ++s) {
        std::vector<Pair> next;
        for (const auto& p : cur)
            for (const auto& l : legs) {
                Polynomial a = p.a.diff(l.left), b = p.b.diff(l.right);
                if (!a.is_zero() && !b.is_zero()) next.push_back({a, b, p.coeff * l.coeff});
            }
        cur = std::move(next);
    }
    Polynomial out(f.frame());
    for (const auto& p : cur) out += (p.a * p.b).scaled(p.coeff);
    return out;
}

inline QI power(const QI& x, std::size_t r)
{
    QI out(1);
    for (std::size_t k = 0; k < r; ++k) out *= x;
    return out;
}

inline Rational fact(std::size_t r)
{
    Rational out(1);
    for (std::size_t k = 2; k <= r; ++k) out *= k;
    return out;
}

/// Moyal term (1/r!) (i/2)^r P^r with P = sum_k d_qk (x) d_pk - d_pk (x) d_qk.
inline Polynomial moyal_term(const Polynomial& f, const Polynomial& g, std::size_t r)
{
    const std::size_t n = f.frame().n;
    std::vector<Leg> legs;
    for (std::size_t k = 0; k < n; ++k) {
        legs.push_back({k, n + k, QI(1)});
        legs.push_back({n + k, k, QI(-1)});
    }
    QI c = power(QI(Rational(0), Rational(1, 2)), r) * QI(Rational(1) / fact(r));
    return bidiff_power(f, g, legs, r).scaled(c);
}

/// Wick term (2^r / r!) (sum_k d_zk (x) d_zbk)^r.
inline Polynomial wick_term(const Polynomial& f, const Polynomial& g, std::size_t r)
{
    const std::size_t n = f.frame().n;
    std::vector<Leg> legs;
    for (std::size_t k = 0; k < n; ++k) legs.push_back({k, n + k, QI(1)});
    QI c = power(QI(2), r) * QI(Rational(1) / fact(r));
    return bidiff_power(f, g, legs, r).scaled(c);
}

/// sum_{r <= N} l^r term(f, g, r).
template <class Term>
Polynomial series_product(const Polynomial& f, const Polynomial& g, std::size_t n, Term term)
{
    Polynomial out(f.frame());
    for (std::size_t r = 0; r <= n; ++r) out += term(f, g, r).scaled(Series::lambda_power(r));
    return out;
}

/// Delta^r f / r! with Delta = (1/4) sum_k (d_qk^2 + d_pk^2) on a real frame.
inline Polynomial laplace_term(const Polynomial& f, std::size_t r)
{
    Polynomial cur = f;
    for (std::size_t s = 0; s < r; ++s) {
        Polynomial next(f.frame());
        for (std::size_t v = 0; v < f.frame().num_vars(); ++v) next += cur.diff(v).diff(v);
        cur = next.scaled(QI(Rational(1, 4)));
    }
    return cur.scaled(QI(Rational(1) / fact(r)));
}

/// e^{l Delta} f up to l^N.
inline Polynomial laplace_exp(const Polynomial& f, std::size_t n)
{
    Polynomial out(f.frame());
    for (std::size_t r = 0; r <= n; ++r) out += laplace_term(f, r).scaled(Series::lambda_power(r));
    return out;
}

// Finite algebras. Cochain columns are indexed by tuples with the first
// argument most significant.

inline std::size_t column(const std::vector<std::size_t>& t, std::size_t d)
{
    std::size_t c = 0;
    for (auto i : t) c = c * d + i;
    return c;
}

inline VectorQI product_of(const FiniteStarAlgebra& a, std::size_t i, std::size_t j)
{
    return a.mu0.col(static_cast<Eigen::Index>(i * a.dim() + j));
}

inline VectorQI eval(const Cochain& phi, const std::vector<std::size_t>& t, std::size_t d)
{
    return phi.values.col(static_cast<Eigen::Index>(column(t, d)));
}

/// x * y for coordinate vectors, from the structure constants.
inline VectorQI mul(const FiniteStarAlgebra& a, const VectorQI& x, const VectorQI& y)
{
    VectorQI out = VectorQI::Constant(a.d(), QI(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            QI c = x(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j));
            if (!c.is_zero()) out += product_of(a, i, j) * c;
        }
    return out;
}

inline VectorQI unit_vector(const FiniteStarAlgebra& a, std::size_t i)
{
    VectorQI v = VectorQI::Constant(a.d(), QI(0));
    v(static_cast<Eigen::Index>(i)) = QI(1);
    return v;
}

/// Alternating-sum Hochschild differential:
/// a0 phi(a1..an) + sum_j (-1)^(j+1) phi(.., aj a(j+1), ..) + (-1)^(n+1) phi(a0..a(n-1)) an.
inline Cochain delta(const FiniteStarAlgebra& a, const Cochain& phi)
{
    const std::size_t d = a.dim(), n = phi.arity;
    Cochain out = Cochain::zero(a, n + 1);
    std::size_t cols = 1;
    for (std::size_t k = 0; k <= n; ++k) cols *= d;
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::size_t> t(n + 1);
        for (std::size_t k = 0, rest = c; k <= n; ++k) {
            t[n - k] = rest % d;
            rest /= d;
        }
        VectorQI v = VectorQI::Constant(a.d(), QI(0));
        v += mul(a, unit_vector(a, t[0]), eval(phi, {t.begin() + 1, t.end()}, d));
        for (std::size_t j = 0; j < n; ++j) {
            VectorQI p = product_of(a, t[j], t[j + 1]);
            for (std::size_t k = 0; k < d; ++k) {
                QI ck = p(static_cast<Eigen::Index>(k));
                if (ck.is_zero()) continue;
                std::vector<std::size_t> s(t.begin(), t.begin() + static_cast<long>(j));
                s.push_back(k);
                s.insert(s.end(), t.begin() + static_cast<long>(j) + 2, t.end());
                v += eval(phi, s, d) * (j % 2 == 0 ? -ck : ck);
            }
        }
        VectorQI last = mul(a, eval(phi, {t.begin(), t.end() - 1}, d), unit_vector(a, t[n]));
        v += (n % 2 == 1 ? last : VectorQI(-last));
        out.values.col(static_cast<Eigen::Index>(c)) = v;
    }
    return out;
}

/// phi(x, y) for a 2-cochain, by bilinear expansion.
inline VectorQI apply2(const FiniteStarAlgebra& a, const Cochain& phi, const VectorQI& x, const VectorQI& y)
{
    VectorQI out = VectorQI::Constant(a.d(), QI(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            QI c = x(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j));
            if (!c.is_zero()) out += eval(phi, {i, j}, a.dim()) * c;
        }
    return out;
}

/// sum_{s+t=r} mu_s(mu_t(x, y), z) - mu_s(x, mu_t(y, z)) for mu_0 = product.
inline VectorQI assoc_defect(const FiniteStarAlgebra& a, const std::vector<Cochain>& mu, std::size_t r,
                             const VectorQI& x, const VectorQI& y, const VectorQI& z)
{
    VectorQI out = VectorQI::Constant(a.d(), QI(0));
    for (std::size_t s = 0; s <= r; ++s) {
        const std::size_t t = r - s;
        out += apply2(a, mu[s], apply2(a, mu[t], x, y), z) - apply2(a, mu[s], x, apply2(a, mu[t], y, z));
    }
    return out;
}

/// phi* (x1..xn) = phi(xn*, .., x1*)* on basis tuples.
inline Cochain star(const FiniteStarAlgebra& a, const Cochain& phi)
{
    const std::size_t d = a.dim(), n = phi.arity;
    Cochain out = Cochain::zero(a, n);
    std::size_t cols = 1;
    for (std::size_t k = 0; k < n; ++k) cols *= d;
    auto star_vec = [&](const VectorQI& v) {
        VectorQI w = VectorQI::Constant(a.d(), QI(0));
        for (Eigen::Index i = 0; i < a.d(); ++i)
            if (!v(i).is_zero()) w += a.involution.col(i) * v(i).conj();
        return w;
    };
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::size_t> t(n);
        for (std::size_t k = 0, rest = c; k < n; ++k) {
            t[n - 1 - k] = rest % d;
            rest /= d;
        }
        // Expand the starred arguments e_i* = sum_k J(k, i) e_k multilinearly.
        std::vector<std::pair<std::vector<std::size_t>, QI>> terms{{{}, QI(1)}};
        for (std::size_t k = 0; k < n; ++k) {
            const auto src = static_cast<Eigen::Index>(t[n - 1 - k]);
            std::vector<std::pair<std::vector<std::size_t>, QI>> next;
            for (const auto& [s, c0] : terms)
                for (Eigen::Index m = 0; m < a.d(); ++m) {
                    QI jm = a.involution(m, src);
                    if (jm.is_zero()) continue;
                    auto s2 = s;
                    s2.push_back(static_cast<std::size_t>(m));
                    next.push_back({s2, c0 * jm});
                }
            terms = std::move(next);
        }
        VectorQI v = VectorQI::Constant(a.d(), QI(0));
        for (const auto& [s, c0] : terms) v += eval(phi, s, d) * c0;
        out.values.col(static_cast<Eigen::Index>(c)) = star_vec(v);
    }
    return out;
}

}  // namespace oracle

#endif
