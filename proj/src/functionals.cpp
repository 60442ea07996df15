#include "stardef/functionals.hpp"

#include <algorithm>

#include "stardef/random.hpp"

namespace stardef {

Point point_to_frame(const Point& x, const VariableFrame& from, VariableFrame::Kind kind)
{
    validate_point(from, x);
    if (from.kind == kind) return x;
    const std::size_t n = from.n;
    Point out(2 * n);
    const QI i = QI::unit();
    if (from.is_real()) {
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = x[k] + i * x[k + n];
            out[k + n] = x[k] - i * x[k + n];
        }
    } else {
        // q = (z + zb)/2, p = (z - zb)/(2i).
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = (x[k] + x[k + n]) * QI(ratio(1, 2));
            out[k + n] = (x[k] - x[k + n]) * QI(Rational(0), ratio(-1, 2));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

void ClassicalFunctional::add_term(const Point& x, const DiffOperator& op, const QI& weight)
{
    validate_point(frame_, x);
    require_same_frame(frame_, op.frame(), "ClassicalFunctional");
    if (!op.is_constant_coefficient()) throw std::invalid_argument("ClassicalFunctional: operator must have constant coefficients");
    if (weight.is_zero() || op.is_zero()) return;
    terms_.push_back({x, op, weight});
}

Series ClassicalFunctional::operator()(const Polynomial& f) const
{
    require_same_frame(frame_, f.frame(), "ClassicalFunctional");
    Series sum = Series::zero(f.precision());
    for (const auto& t : terms_) sum = sum + t.op.apply(f).eval(t.point).scaled(t.weight);
    return sum;
}

bool ClassicalFunctional::is_nonnegative_point_mass() const
{
    const DiffOperator id = DiffOperator::identity(frame_);
    return std::all_of(terms_.begin(), terms_.end(), [&](const FunctionalTerm& t) {
        return t.op == id && t.weight.is_real() && t.weight.real() >= 0;
    });
}

ClassicalFunctional ClassicalFunctional::in_frame(VariableFrame::Kind kind) const
{
    if (frame_.kind == kind) return *this;
    ClassicalFunctional out(VariableFrame{kind, frame_.n});
    for (const auto& t : terms_) out.add_term(point_to_frame(t.point, frame_, kind), t.op.in_frame(kind), t.weight);
    return out;
}

ClassicalFunctional delta_at(const VariableFrame& frame, const Point& x)
{
    ClassicalFunctional w(frame);
    w.add_term(x, DiffOperator::identity(frame), QI(1));
    return w;
}

ClassicalFunctional discrete_measure(const VariableFrame& frame, const std::vector<Point>& points,
                                     const std::vector<QI>& weights)
{
    if (points.size() != weights.size()) throw std::invalid_argument("discrete_measure: points and weights differ in length");
    ClassicalFunctional w(frame);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (!weights[j].is_real()) throw std::invalid_argument("discrete_measure: weight " + to_string(weights[j]) + " is not real");
        if (weights[j].real() < 0)
            throw std::invalid_argument("discrete_measure: weight " + to_string(weights[j]) + " is negative");
        w.add_term(points[j], DiffOperator::identity(frame), weights[j]);
    }
    return w;
}

// ---------------------------------------------------------------------------

DeformedFunctional::DeformedFunctional(std::vector<ClassicalFunctional> grades, bool derivative_graded)
    : grades_(std::move(grades)), derivative_graded_(derivative_graded)
{
    if (grades_.empty()) throw std::invalid_argument("DeformedFunctional: omega_0 is required");
    for (const auto& g : grades_) require_same_frame(grades_.front().frame(), g.frame(), "DeformedFunctional");
}

DeformedFunctional DeformedFunctional::classical(const ClassicalFunctional& omega0)
{
    DeformedFunctional w({omega0}, true);
    w.complete_ = true;
    return w;
}

Series func_eval(const DeformedFunctional& omega, const Polynomial& f, std::size_t n)
{
    require_same_frame(omega.frame(), f.frame(), "func_eval");
    bool exact = false;
    std::size_t top = n;
    if (f.exact() && (omega.complete() || (omega.derivative_graded() && f.degree() <= omega.order()))) {
        exact = true;
        top = omega.complete() ? omega.order() : std::min<std::size_t>(f.degree(), omega.order());
    }
    if (!exact && n > omega.order())
        throw std::invalid_argument("func_eval: requested order exceeds the functional's expansion order");
    top = std::min(top, omega.order());
    Series sum = Series::zero(f.precision());
    for (std::size_t r = 0; r <= top; ++r) {
        Series v = omega.grade(r)(f);
        sum = sum + (r == 0 ? v : v * Series::lambda_power(r));
    }
    sum = sum.truncated(n);
    return exact ? sum : sum.as_inexact();
}

DeformedFunctional deform_via_T(const ClassicalFunctional& omega0, const EquivalenceTransform& t_any)
{
    EquivalenceTransform t = t_any.in_frame(omega0.frame().kind);
    if (!t.is_constant_coefficient()) throw std::invalid_argument("deform_via_T: T must have constant coefficients");
    std::vector<ClassicalFunctional> grades;
    for (std::size_t r = 0; r <= t.order(); ++r) {
        ClassicalFunctional g(omega0.frame());
        for (const auto& term : omega0.terms()) g.add_term(term.point, term.op.compose(t.term(r)), term.weight);
        grades.push_back(std::move(g));
    }
    return DeformedFunctional(std::move(grades), t.derivative_graded());
}

PartitionError::PartitionError(const Polynomial& residual)
    : std::invalid_argument("partition identity fails: sum conj(chi) chi - 1 = " + to_string(residual)), residual_(residual)
{
}

namespace {

/// f -> mu(c, f) as a differential operator in f.
DiffOperator left_multiplier(const BidiffOperator& mu, const Polynomial& c)
{
    DiffOperator d(mu.frame());
    for (const auto& [key, coeff] : mu.terms()) {
        Polynomial k = coeff * c.derivative(key.first);
        if (!k.is_zero()) d.add_term(key.second, k);
    }
    return d;
}

/// g -> mu(g, c).
DiffOperator right_multiplier(const BidiffOperator& mu, const Polynomial& c)
{
    DiffOperator d(mu.frame());
    for (const auto& [key, coeff] : mu.terms()) {
        Polynomial k = coeff * c.derivative(key.second);
        if (!k.is_zero()) d.add_term(key.first, k);
    }
    return d;
}

}  // namespace

DeformedFunctional partition_deform(const ClassicalFunctional& omega0_any, const std::vector<Chart>& charts,
                                    const StarProduct& p, std::size_t n)
{
    if (charts.empty()) throw std::invalid_argument("partition_deform: no charts given");
    const VariableFrame& frame = p.frame();
    ClassicalFunctional omega0 = omega0_any.in_frame(frame.kind);
    if (n > p.order()) throw std::invalid_argument("partition_deform: order exceeds the product's expansion order");

    Polynomial residual = Polynomial::constant(frame, Series(-1));
    for (const auto& c : charts) {
        require_same_frame(frame, c.chi.frame(), "partition_deform");
        residual = residual + c.chi.conj() * c.chi;
    }
    if (!residual.is_zero()) throw PartitionError(residual);

    std::vector<ClassicalFunctional> grades(n + 1, ClassicalFunctional(frame));
    for (const auto& c : charts) {
        EquivalenceTransform t = c.t.in_frame(frame.kind);
        if (n > t.order()) throw std::invalid_argument("partition_deform: order exceeds a chart transform's expansion order");
        Polynomial chibar = c.chi.conj();
        // S_s f = sum_{a+b=s} mu_a(mu_b(conj chi, f), chi).
        std::vector<DiffOperator> left, right, sandwich;
        for (std::size_t r = 0; r <= n; ++r) {
            left.push_back(left_multiplier(p.mu(r), chibar));
            right.push_back(right_multiplier(p.mu(r), c.chi));
        }
        for (std::size_t s = 0; s <= n; ++s) {
            DiffOperator acc(frame);
            for (std::size_t a = 0; a <= s; ++a) acc = acc + right[a].compose(left[s - a]);
            sandwich.push_back(std::move(acc));
        }
        for (std::size_t r = 0; r <= n; ++r) {
            DiffOperator op_r(frame);
            for (std::size_t u = 0; u <= r; ++u) op_r = op_r + t.term(u).compose(sandwich[r - u]);
            for (const auto& term : omega0.terms())
                grades[r].add_term(term.point, term.op.compose(op_r).frozen_at(term.point), term.weight);
        }
    }
    return DeformedFunctional(std::move(grades), false);
}

// ---------------------------------------------------------------------------

std::string to_string(PositivityReport::Verdict v)
{
    switch (v) {
    case PositivityReport::Verdict::CertifiedPositive: return "CertifiedPositive";
    case PositivityReport::Verdict::NoViolationFound: return "NoViolationFound";
    case PositivityReport::Verdict::Violation: return "Violation";
    }
    return "?";
}

std::vector<Polynomial> audit_grid(const VariableFrame& frame, unsigned degree_bound, std::size_t trials,
                                   std::uint64_t seed)
{
    std::vector<Polynomial> mono;
    for (const auto& e : monomials_up_to(frame, degree_bound)) mono.push_back(Polynomial::monomial(frame, e));
    std::vector<Polynomial> grid = mono;
    for (std::size_t a = 0; a < mono.size(); ++a)
        for (std::size_t b = a + 1; b < mono.size(); ++b) grid.push_back(mono[a] + mono[b]);
    const QI i = QI::unit();
    for (std::size_t a = 0; a < mono.size(); ++a)
        for (std::size_t b = a + 1; b < mono.size(); ++b) grid.push_back(mono[a] + mono[b].scaled(i));
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) grid.push_back(rng.polynomial(frame, degree_bound));
    return grid;
}

PositivityReport positivity_audit(const DeformedFunctional& omega, const StarProduct& p, unsigned degree_bound,
                                  std::size_t n, std::size_t trials, std::uint64_t seed)
{
    require_same_frame(omega.frame(), p.frame(), "positivity_audit");
    PositivityReport rep;
    rep.degree_bound = degree_bound;
    rep.order = n;
    rep.trials = trials;
    rep.seed = seed;
    rep.method = "grid";

    bool certified = p.exp_data().has_value() && omega.grade(0).is_nonnegative_point_mass();
    for (std::size_t r = 1; r <= omega.order() && certified; ++r) certified = omega.grade(r).is_zero();

    for (const auto& f : audit_grid(p.frame(), degree_bound, trials, seed)) {
        ++rep.cases;
        Series v = func_eval(omega, star_mul(p, f.conj(), f, n), n);
        if (!is_real(v) || sign(v).is_negative()) {
            rep.verdict = PositivityReport::Verdict::Violation;
            rep.witness = f;
            rep.value = v;
            return rep;
        }
    }
    if (certified) {
        rep.verdict = PositivityReport::Verdict::CertifiedPositive;
        rep.method = "sum-of-squares";
        rep.certificate = "mu_r(conj f, f) = s^r sum_K |D^K conj f|^2 / K!, evaluated by nonnegative point masses";
    } else {
        rep.verdict = PositivityReport::Verdict::NoViolationFound;
    }
    return rep;
}

CauchySchwarzReport cauchy_schwarz_check(const DeformedFunctional& omega, const StarProduct& p, const Polynomial& a,
                                         const Polynomial& b, std::size_t n, const PositivityReport* prior)
{
    CauchySchwarzReport rep;
    if (prior && prior->verdict == PositivityReport::Verdict::Violation) {
        rep.skipped = true;
        rep.reason = "functional failed the positivity audit";
        if (prior->witness) rep.reason += " on " + to_string(*prior->witness);
        return rep;
    }
    Series aa = func_eval(omega, star_mul(p, a.conj(), a, n), n);
    Series bb = func_eval(omega, star_mul(p, b.conj(), b, n), n);
    Series ab = func_eval(omega, star_mul(p, a.conj(), b, n), n);
    Series ba = func_eval(omega, star_mul(p, b.conj(), a, n), n);
    rep.symmetric = equal_up_to(ab, conj(ba), n);
    rep.difference = (aa * bb - ab * conj(ab)).truncated(n);
    if (!is_real(rep.difference)) {
        rep.pass = false;
        rep.reason = "non-real difference";
        return rep;
    }
    rep.sign = sign(rep.difference);
    rep.pass = rep.symmetric && rep.sign.not_negative();
    return rep;
}

}  // namespace stardef
