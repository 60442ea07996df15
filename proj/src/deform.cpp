#include "stardef/deform.hpp"

namespace stardef {

DeformationCandidate DeformationCandidate::trivial(const FiniteStarAlgebra& a, std::size_t order)
{
    return {a, std::vector<Cochain>(order, Cochain::zero(a, 2))};
}

VectorQI apply2(const FiniteStarAlgebra& a, const Cochain& phi, const VectorQI& x, const VectorQI& y)
{
    if (phi.arity != 2) throw std::invalid_argument("apply2: 2-cochain required");
    const Eigen::Index d = a.d();
    VectorQI out = VectorQI::Constant(d, QI(0));
    for (Eigen::Index i = 0; i < d; ++i) {
        if (x(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < d; ++j) {
            if (y(j).is_zero()) continue;
            const QI w = x(i) * y(j);
            for (Eigen::Index k = 0; k < d; ++k)
                if (!phi.values(k, i * d + j).is_zero()) out(k) += w * phi.values(k, i * d + j);
        }
    }
    return out;
}

Cochain obstruction_rhs(const DeformationCandidate& c, std::size_t r)
{
    if (r == 0) throw std::invalid_argument("obstruction_rhs: order must be >= 1");
    if (c.order() + 1 < r)
        throw std::invalid_argument("obstruction_rhs: terms below order " + std::to_string(r) + " are missing");
    Cochain sum = Cochain::zero(c.algebra, 3);
    for (std::size_t s = 1; s < r; ++s) sum = sum + gerstenhaber_bracket(c.algebra, c.mu(s), c.mu(r - s));
    return sum.scaled(QI(ratio(1, 2)));
}

RealityReport rhs_reality_check(const DeformationCandidate& c, std::size_t r)
{
    RealityReport rep;
    for (std::size_t s = 1; s < r; ++s)
        if (!is_hermitian(c.algebra, c.mu(s))) {
            rep.hypothesis = false;
            rep.non_hermitian_orders.push_back(s);
        }
    rep.antihermitian = is_antihermitian(c.algebra, obstruction_rhs(c, r));
    return rep;
}

ProjectionResult hermitian_project(const FiniteStarAlgebra& a, const Cochain& mu, const Cochain& rhs)
{
    ProjectionResult res;
    res.precondition = hochschild_delta(a, mu) == rhs && is_antihermitian(a, rhs);
    res.projected = (mu + cochain_star(a, mu)).scaled(QI(ratio(1, 2)));
    res.solves = hochschild_delta(a, res.projected) == rhs;
    res.hermitian = is_hermitian(a, res.projected);
    return res;
}

SolveResult solve_order(const DeformationCandidate& c, std::size_t r, const Chooser& chooser)
{
    const FiniteStarAlgebra& a = c.algebra;
    Cochain rhs = obstruction_rhs(c, r);
    auto x = solve<QI>(delta_matrix(a, 2), rhs.flat());
    if (!x) {
        ObstructionClass ob;
        ob.order = r;
        ob.rhs = rhs;
        ob.cocycle = hochschild_delta(a, rhs).is_zero();
        return ob;
    }
    Cochain mu = Cochain::from_flat(a, 2, *x);
    if (auto it = chooser.seeds.find(r); it != chooser.seeds.end()) {
        if (it->second.arity != 2 || !hochschild_delta(a, it->second).is_zero())
            throw std::invalid_argument("solve_order: seed at order " + std::to_string(r) + " is not a 2-cocycle");
        mu = mu + it->second;
    }
    ProjectionResult p = hermitian_project(a, mu, rhs);
    if (!p.ok())
        throw std::logic_error("solve_order: Hermitian projection failed at order " + std::to_string(r) +
                               (p.precondition ? "" : " (right hand side is not anti-Hermitian)"));
    return p.projected;
}

DeformResult deform_up_to(const FiniteStarAlgebra& a, std::size_t order, const Chooser& chooser)
{
    DeformationCandidate c{a, {}};
    for (std::size_t r = 1; r <= order; ++r) {
        SolveResult s = solve_order(c, r, chooser);
        if (auto* ob = std::get_if<ObstructionClass>(&s)) return *ob;
        c.terms.push_back(std::get<Cochain>(s));
    }
    return c;
}

VerifyReport candidate_verify(const DeformationCandidate& c)
{
    VerifyReport rep;
    const FiniteStarAlgebra& a = c.algebra;
    const std::size_t d = a.dim(), big_r = c.order();
    for (std::size_t s = 1; s <= big_r; ++s)
        if (!is_hermitian(a, c.mu(s))) {
            rep.hermitian = false;
            rep.failing_order = s;
            return rep;
        }
    std::vector<Cochain> mu;
    for (std::size_t s = 0; s <= big_r; ++s) mu.push_back(c.mu(s));
    std::vector<VectorQI> e;
    for (std::size_t i = 0; i < d; ++i) e.push_back(basis_vector(a, i));
    for (std::size_t t = 0; t <= big_r; ++t)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    VectorQI diff = VectorQI::Constant(a.d(), QI(0));
                    for (std::size_t s = 0; s <= t; ++s) {
                        diff += apply2(a, mu[s], apply2(a, mu[t - s], e[i], e[j]), e[k]);
                        diff -= apply2(a, mu[s], e[i], apply2(a, mu[t - s], e[j], e[k]));
                    }
                    if (!is_zero_matrix<QI>(diff)) {
                        rep.associative = false;
                        rep.failing_order = t;
                        rep.witness = {i, j, k};
                        return rep;
                    }
                }
    return rep;
}

std::vector<MatrixQI> inverse_series(const std::vector<Cochain>& t, std::size_t order, Eigen::Index d)
{
    auto term = [&](std::size_t s) -> MatrixQI { return s <= t.size() ? t[s - 1].values : zeros<QI>(d, d); };
    std::vector<MatrixQI> inv{identity_matrix<QI>(d)};
    for (std::size_t r = 1; r <= order; ++r) {
        MatrixQI acc = zeros<QI>(d, d);
        for (std::size_t s = 1; s <= r; ++s) acc -= multiply<QI>(term(s), inv[r - s]);
        inv.push_back(std::move(acc));
    }
    return inv;
}

namespace {

MatrixQI kron(const MatrixQI& x, const MatrixQI& y)
{
    MatrixQI out = zeros<QI>(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            if (x(i, j).is_zero()) continue;
            for (Eigen::Index k = 0; k < y.rows(); ++k)
                for (Eigen::Index l = 0; l < y.cols(); ++l)
                    if (!y(k, l).is_zero()) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
        }
    return out;
}

}  // namespace

DeformationCandidate equivalence_apply(const std::vector<Cochain>& t, const DeformationCandidate& c)
{
    const FiniteStarAlgebra& a = c.algebra;
    const Eigen::Index d = a.d();
    for (std::size_t s = 0; s < t.size(); ++s) {
        if (t[s].arity != 1 || t[s].values.rows() != d) throw std::invalid_argument("equivalence_apply: T_s must be 1-cochains");
        if (!is_hermitian(a, t[s]))
            throw std::invalid_argument("equivalence_apply: T_" + std::to_string(s + 1) + " is not real (Hermitian)");
    }
    const std::size_t big_r = c.order();
    std::vector<MatrixQI> tm{identity_matrix<QI>(d)};
    for (std::size_t s = 1; s <= big_r; ++s) tm.push_back(s <= t.size() ? t[s - 1].values : zeros<QI>(d, d));
    std::vector<MatrixQI> inv = inverse_series(t, big_r, d);
    // W_u = sum_{p+q=u} S_p (x) S_q.
    std::vector<MatrixQI> w;
    for (std::size_t u = 0; u <= big_r; ++u) {
        MatrixQI acc = zeros<QI>(d * d, d * d);
        for (std::size_t p = 0; p <= u; ++p) acc += kron(inv[p], inv[u - p]);
        w.push_back(std::move(acc));
    }
    DeformationCandidate out{a, {}};
    for (std::size_t r = 1; r <= big_r; ++r) {
        MatrixQI acc = zeros<QI>(d, d * d);
        for (std::size_t s = 0; s <= r; ++s)
            for (std::size_t q = 0; s + q <= r; ++q) {
                MatrixQI inner = multiply<QI>(c.mu(q).values, w[r - s - q]);
                acc += multiply<QI>(tm[s], inner);
            }
        out.terms.push_back({2, acc});
    }
    if (candidate_verify(c).pass() && !candidate_verify(out).pass())
        throw std::logic_error("equivalence_apply: transported candidate fails verification");
    return out;
}

}  // namespace stardef
