#include "stardef/positivity_bridge.hpp"

#include <algorithm>

namespace stardef {

PositivityReport strong_positivity_certify(const StarProduct& p, unsigned degree_bound, std::size_t n,
                                           std::size_t trials, std::uint64_t seed)
{
    PositivityReport rep;
    rep.degree_bound = degree_bound;
    rep.order = n;
    rep.trials = trials;
    rep.seed = seed;

    bool trivial = true;
    for (std::size_t r = 1; r <= p.order(); ++r) trivial = trivial && p.mu(r).is_zero();
    if (trivial && p.derivative_graded()) {
        rep.verdict = PositivityReport::Verdict::CertifiedPositive;
        rep.method = "trivial";
        rep.certificate = "mu_r = 0 for r >= 1";
        return rep;
    }

    const auto grid = audit_grid(p.frame(), degree_bound, trials, seed);
    if (p.exp_data()) {
        rep.method = "sum-of-squares";
        for (const auto& f : grid) {
            ++rep.cases;
            for (std::size_t r = 1; r <= std::min(n, p.order()); ++r) {
                Polynomial lhs = p.mu(r).apply(f.conj(), f);
                Polynomial rhs = sum_of_squares_value(sum_of_squares(p, f, r), p.frame());
                if (lhs != rhs)
                    throw std::logic_error("strong_positivity_certify: sum-of-squares identity fails on " + to_string(f));
            }
        }
        rep.verdict = PositivityReport::Verdict::CertifiedPositive;
        rep.certificate = "mu_r(conj f, f) = s^r sum_K |D^K conj f|^2 / K! checked on " + std::to_string(rep.cases) +
                          " polynomials, r <= " + std::to_string(std::min(n, p.order()));
        return rep;
    }

    rep.method = "point-evaluation";
    std::vector<Point> points{Point(p.frame().num_vars(), QI(0))};
    Rng rng(seed);
    for (int k = 0; k < 4; ++k) points.push_back(rng.point(p.frame()));
    for (const auto& f : grid) {
        ++rep.cases;
        Polynomial sq = star_mul(p, f.conj(), f, n);
        for (const auto& x : points) {
            Series v = sq.eval(x);
            if (!is_real(v) || sign(v).is_negative()) {
                rep.verdict = PositivityReport::Verdict::Violation;
                rep.witness = f;
                rep.value = v;
                rep.point = x;
                return rep;
            }
        }
    }
    rep.verdict = PositivityReport::Verdict::NoViolationFound;
    return rep;
}

std::vector<VectorQI> star_square(const DeformationCandidate& c, const VectorQI& a)
{
    std::vector<VectorQI> out;
    VectorQI as = alg_star(c.algebra, a);
    for (std::size_t r = 0; r <= c.order(); ++r) out.push_back(apply2(c.algebra, c.mu(r), as, a));
    return out;
}

Series DeformedFiniteFunctional::operator()(const std::vector<VectorQI>& a, std::size_t n) const
{
    std::vector<QI> coeffs(n + 1, QI(0));
    for (std::size_t r = 0; r < grades.size() && r <= n; ++r)
        for (std::size_t s = 0; s < a.size() && r + s <= n; ++s) coeffs[r + s] += grades[r](a[s]);
    return Series(std::move(coeffs), false);
}

DeformedFiniteFunctional FunctionalPolicy::deform(const FiniteFunctional& omega0, std::size_t order, Eigen::Index d) const
{
    if (kind == Kind::Identity) return {{omega0}};
    DeformedFiniteFunctional w;
    for (const auto& s : inverse_series(t, order, d)) {
        VectorQI cov = VectorQI::Constant(d, QI(0));
        for (Eigen::Index j = 0; j < d; ++j)
            for (Eigen::Index k = 0; k < d; ++k)
                if (!s(k, j).is_zero()) cov(j) += omega0.covector(k) * s(k, j);
        w.grades.push_back({cov});
    }
    return w;
}

namespace {

VectorQI random_element(const FiniteStarAlgebra& a, Rng& rng)
{
    VectorQI x(a.d());
    for (Eigen::Index i = 0; i < a.d(); ++i) x(i) = rng.scalar(3);
    return x;
}

std::vector<VectorQI> sample_elements(const FiniteStarAlgebra& a, std::size_t trials, Rng& rng)
{
    std::vector<VectorQI> out;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) out.push_back(basis_vector(a, i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            out.push_back(basis_vector(a, i) + basis_vector(a, j));
            VectorQI v = basis_vector(a, i);
            v(static_cast<Eigen::Index>(j)) = QI::unit();
            out.push_back(v);
        }
    for (std::size_t t = 0; t < trials; ++t) out.push_back(random_element(a, rng));
    return out;
}

std::vector<VectorQI> sample_vectors(std::size_t n, Rng& rng)
{
    const auto ni = static_cast<Eigen::Index>(n);
    auto unit = [ni](Eigen::Index i) {
        VectorQI v = VectorQI::Constant(ni, QI(0));
        v(i) = QI(1);
        return v;
    };
    std::vector<VectorQI> out;
    for (Eigen::Index i = 0; i < ni; ++i) out.push_back(unit(i));
    for (Eigen::Index i = 0; i < ni; ++i)
        for (Eigen::Index j = i + 1; j < ni; ++j) {
            out.push_back(unit(i) + unit(j));
            VectorQI v = unit(i);
            v(j) = QI::unit();
            out.push_back(v);
        }
    for (int k = 0; k < 4; ++k) {
        VectorQI v(ni);
        for (Eigen::Index i = 0; i < ni; ++i) v(i) = rng.scalar(3);
        out.push_back(v);
    }
    return out;
}

}  // namespace

FinitePositivityReport strong_positivity_certify(const DeformationCandidate& c, std::size_t trials, std::uint64_t seed)
{
    const FiniteStarAlgebra& a = c.algebra;
    if (a.kind != FiniteStarAlgebra::Kind::Matrix)
        throw std::invalid_argument("strong_positivity_certify: matrix algebra required");
    FinitePositivityReport rep;
    bool trivial = true;
    for (std::size_t r = 1; r <= c.order(); ++r) trivial = trivial && c.mu(r).is_zero();
    if (trivial) {
        rep.verdict = PositivityReport::Verdict::CertifiedPositive;
        rep.method = "trivial";
        return rep;
    }
    rep.method = "vector-states";
    Rng rng(seed);
    const auto elements = sample_elements(a, trials, rng);
    const auto vectors = sample_vectors(a.param, rng);
    for (const auto& x : elements) {
        ++rep.cases;
        const auto sq = star_square(c, x);
        for (std::size_t r = 1; r < sq.size(); ++r)
            if (!element_positive_matrix(a, sq[r]).positive &&
                std::find(rep.hypothesis_failures.begin(), rep.hypothesis_failures.end(), r) == rep.hypothesis_failures.end())
                rep.hypothesis_failures.push_back(r);
        for (const auto& v : vectors) {
            FiniteFunctional w = vector_state(a, v);
            std::vector<QI> coeffs;
            for (const auto& m : sq) coeffs.push_back(w(m));
            Series s(std::move(coeffs), false);
            if (!is_real(s) || sign(s).is_negative()) {
                rep.verdict = PositivityReport::Verdict::Violation;
                rep.witness = x;
                rep.vector = v;
                rep.value = s;
                return rep;
            }
        }
    }
    rep.verdict = PositivityReport::Verdict::NoViolationFound;
    return rep;
}

VectorQI random_hermitian(const FiniteStarAlgebra& a, Rng& rng)
{
    for (;;) {
        VectorQI x = random_element(a, rng);
        VectorQI h = x + alg_star(a, x);
        if (!is_zero_matrix<QI>(h)) return h;
    }
}

bool separate_deformed(const DeformationCandidate& c, const FunctionalPolicy& policy, const std::vector<VectorQI>& a,
                       std::uint64_t seed, std::string* failure)
{
    const FiniteStarAlgebra& alg = c.algebra;
    auto fail = [&](const std::string& why) {
        if (failure) *failure = why;
        return false;
    };
    std::optional<std::size_t> r0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (!is_hermitian(alg, a[r])) throw NotHermitian("separate_deformed: coefficient " + std::to_string(r) + " is not Hermitian");
        if (!r0 && !is_zero_matrix<QI>(a[r])) r0 = r;
    }
    if (!r0) throw std::invalid_argument("separate_deformed: element is zero");

    SeparatingFunctional sep = find_separating_functional(alg, a[*r0]);
    const std::size_t n = std::max(*r0, c.order());
    DeformedFiniteFunctional w = policy.deform(sep.omega, n, alg.d());
    Series value = w(a, n);
    if (!is_real(value)) return fail("omega(A) is not real");
    Sign sg = sign(value);
    if (!sg.is_positive() && !sg.is_negative()) return fail("omega(A) vanishes up to order " + std::to_string(n));
    if (sg.order != *r0) return fail("leading order of omega(A) differs from that of A");

    Rng rng(seed);
    for (int k = 0; k < 8; ++k) {
        VectorQI b = random_element(alg, rng);
        Series s = w(star_square(c, b), c.order());
        if (!is_real(s) || sign(s).is_negative()) return fail("deformed functional is negative on a sampled B* * B");
    }
    return true;
}

ManyPositiveReport many_positive_check(const DeformationCandidate& c, const FunctionalPolicy& policy,
                                       std::size_t trials, std::uint64_t seed)
{
    ManyPositiveReport rep;
    Rng rng(seed);
    const std::size_t top = std::max<std::size_t>(c.order(), 1);
    for (std::size_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto r0 = static_cast<std::size_t>(rng.range(0, static_cast<long>(top)));
        std::vector<VectorQI> a;
        for (std::size_t r = 0; r <= top; ++r)
            a.push_back(r < r0 ? VectorQI(VectorQI::Constant(c.algebra.d(), QI(0))) : random_hermitian(c.algebra, rng));
        std::string why;
        if (separate_deformed(c, policy, a, rng.next(), &why)) {
            ++rep.successes;
        } else if (rep.pass) {
            rep.pass = false;
            rep.failure = "trial " + std::to_string(t) + ": " + why;
        }
    }
    return rep;
}

}  // namespace stardef
