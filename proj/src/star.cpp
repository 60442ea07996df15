#include "stardef/star.hpp"

#include <algorithm>

namespace stardef {

namespace {

Exponent zero_exponent(const VariableFrame& frame) { return Exponent(frame.num_vars(), 0); }

Exponent unit_exponent(const VariableFrame& frame, std::size_t v)
{
    Exponent e = zero_exponent(frame);
    e.at(v) = 1;
    return e;
}

Exponent add(const Exponent& a, const Exponent& b)
{
    Exponent c(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) c[v] = a[v] + b[v];
    return c;
}

Polynomial one(const VariableFrame& frame) { return Polynomial::constant(frame, Series(1)); }

/// All multi-indices of length m and total degree r.
std::vector<Exponent> compositions(std::size_t m, unsigned r)
{
    VariableFrame dummy;
    std::vector<Exponent> out;
    Exponent e(m, 0);
    auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
        if (v + 1 == m) {
            e[v] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[v] = k;
            self(self, v + 1, left - k);
        }
    };
    if (m == 0) return out;
    rec(rec, 0, r);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BidiffOperator

BidiffOperator BidiffOperator::pointwise(const VariableFrame& frame)
{
    BidiffOperator b(frame);
    b.add_term(zero_exponent(frame), zero_exponent(frame), one(frame));
    return b;
}

BidiffOperator BidiffOperator::tensor(const DiffOperator& left, const DiffOperator& right)
{
    require_same_frame(left.frame(), right.frame(), "BidiffOperator::tensor");
    BidiffOperator b(left.frame());
    for (const auto& [a, ca] : left.terms())
        for (const auto& [c, cc] : right.terms()) b.add_term(a, c, ca * cc);
    return b;
}

BidiffOperator BidiffOperator::after_product(const DiffOperator& d)
{
    if (!d.is_constant_coefficient()) throw std::invalid_argument("after_product: constant coefficients required");
    const VariableFrame& frame = d.frame();
    const std::size_t m = frame.num_vars();
    BidiffOperator out(frame);
    for (const auto& [alpha, c] : d.terms()) {
        // d^alpha (f g) = sum_{beta <= alpha} C(alpha, beta) d^beta f d^(alpha - beta) g.
        std::vector<Exponent> betas{Exponent()};
        for (std::size_t v = 0; v < m; ++v) {
            std::vector<Exponent> next;
            for (const auto& b : betas)
                for (unsigned k = 0; k <= alpha[v]; ++k) {
                    Exponent h = b;
                    h.push_back(k);
                    next.push_back(std::move(h));
                }
            betas = std::move(next);
        }
        for (const auto& beta : betas) {
            Rational w(1);
            Exponent rest(m);
            for (std::size_t v = 0; v < m; ++v) {
                w *= factorial(alpha[v]) / (factorial(beta[v]) * factorial(alpha[v] - beta[v]));
                rest[v] = alpha[v] - beta[v];
            }
            out.add_term(beta, rest, c.scaled(QI(w)));
        }
    }
    return out;
}

bool BidiffOperator::is_constant_coefficient() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.degree() == 0; });
}

unsigned BidiffOperator::min_left_order() const
{
    unsigned m = ~0u;
    for (const auto& [k, c] : terms_) m = std::min(m, total_degree(k.first));
    return terms_.empty() ? 0 : m;
}

unsigned BidiffOperator::min_right_order() const
{
    unsigned m = ~0u;
    for (const auto& [k, c] : terms_) m = std::min(m, total_degree(k.second));
    return terms_.empty() ? 0 : m;
}

void BidiffOperator::add_term(const Exponent& left, const Exponent& right, const Polynomial& coeff)
{
    require_same_frame(frame_, coeff.frame(), "BidiffOperator");
    if (left.size() != frame_.num_vars() || right.size() != frame_.num_vars())
        throw std::invalid_argument("BidiffOperator: multi-index arity mismatch");
    Key key{left, right};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial BidiffOperator::apply(const Polynomial& f, const Polynomial& g) const
{
    require_same_frame(frame_, f.frame(), "BidiffOperator::apply");
    require_same_frame(frame_, g.frame(), "BidiffOperator::apply");
    std::map<Exponent, Polynomial> df, dg;
    auto deriv = [](std::map<Exponent, Polynomial>& cache, const Polynomial& p, const Exponent& a) -> const Polynomial& {
        auto it = cache.find(a);
        if (it == cache.end()) it = cache.emplace(a, p.derivative(a)).first;
        return it->second;
    };
    Polynomial out(frame_);
    out = out.with_precision(combine_mul(f.precision(), g.precision()));
    for (const auto& [key, c] : terms_) {
        const Polynomial& a = deriv(df, f, key.first);
        if (a.is_zero()) continue;
        const Polynomial& b = deriv(dg, g, key.second);
        if (b.is_zero()) continue;
        out = out + c * a * b;
    }
    return out;
}

BidiffOperator operator*(const BidiffOperator& a, const BidiffOperator& b)
{
    require_same_frame(a.frame_, b.frame_, "BidiffOperator::*");
    if (!a.is_constant_coefficient() || !b.is_constant_coefficient())
        throw std::invalid_argument("BidiffOperator composition requires constant coefficients");
    BidiffOperator out(a.frame_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(add(ka.first, kb.first), add(ka.second, kb.second), ca * cb);
    return out;
}

BidiffOperator operator+(const BidiffOperator& a, const BidiffOperator& b)
{
    require_same_frame(a.frame_, b.frame_, "BidiffOperator::+");
    BidiffOperator out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BidiffOperator BidiffOperator::scaled(const Series& c) const
{
    BidiffOperator out(frame_);
    for (const auto& [k, p] : terms_) out.add_term(k.first, k.second, p.scaled(c));
    return out;
}

bool operator==(const BidiffOperator& a, const BidiffOperator& b)
{
    if (!(a.frame_ == b.frame_) || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string to_string(const BidiffOperator& b)
{
    if (b.is_zero()) return "0";
    auto partials = [&](const Exponent& e) {
        std::string s;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!s.empty()) s += "*";
            s += "d_" + b.frame().var_name(v);
            if (e[v] > 1) s += "^" + std::to_string(e[v]);
        }
        return s.empty() ? std::string("1") : s;
    };
    std::string out;
    for (const auto& [k, c] : b.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")*[" + partials(k.first) + " (x) " + partials(k.second) + "]";
    }
    return out;
}

// ---------------------------------------------------------------------------
// StarProduct

StarProduct::StarProduct(const VariableFrame& frame, std::vector<BidiffOperator> graded, std::string name,
                         bool derivative_graded, std::optional<ExpDerivationData> exp_data)
    : frame_(frame), graded_(std::move(graded)), name_(std::move(name)), derivative_graded_(derivative_graded),
      exp_data_(std::move(exp_data))
{
    if (graded_.empty()) throw std::invalid_argument("StarProduct: at least mu_0 is required");
    for (const auto& b : graded_) require_same_frame(frame_, b.frame(), "StarProduct");
    if (!(graded_[0] == BidiffOperator::pointwise(frame_)))
        throw std::invalid_argument("StarProduct: mu_0 must be the pointwise product");
}

StarProduct exp_product_of_symbol(const BidiffOperator& x, std::size_t order, const std::string& name)
{
    if (!x.is_constant_coefficient()) throw std::invalid_argument("exp_product_of_symbol: constant coefficients required");
    std::vector<BidiffOperator> graded{BidiffOperator::pointwise(x.frame())};
    BidiffOperator power = graded[0];
    for (std::size_t r = 1; r <= order; ++r) {
        power = power * x;
        graded.push_back(power.scaled(Series(QI(Rational(1) / factorial(static_cast<unsigned>(r))))));
    }
    bool graded_flag = x.min_left_order() >= 1 && x.min_right_order() >= 1;
    return StarProduct(x.frame(), std::move(graded), name, graded_flag);
}

StarProduct make_weyl(std::size_t n, std::size_t order)
{
    if (n == 0) throw std::invalid_argument("make_weyl: n >= 1 required");
    VariableFrame frame = VariableFrame::real(n);
    BidiffOperator poisson(frame);
    Polynomial c = Polynomial::constant(frame, Series(QI(Rational(0), ratio(1, 2))));
    for (std::size_t k = 0; k < n; ++k) {
        poisson.add_term(unit_exponent(frame, k), unit_exponent(frame, k + n), c);
        poisson.add_term(unit_exponent(frame, k + n), unit_exponent(frame, k), -c);
    }
    return exp_product_of_symbol(poisson, order, "weyl:n=" + std::to_string(n));
}

StarProduct make_wick(std::size_t n, std::size_t order)
{
    if (n == 0) throw std::invalid_argument("make_wick: n >= 1 required");
    VariableFrame frame = VariableFrame::holomorphic(n);
    std::vector<DiffOperator> ds;
    for (std::size_t k = 0; k < n; ++k) ds.push_back(DiffOperator::partial(frame, k, one(frame)));
    return make_exp_product(frame, ds, Rational(2), order, 1, "wick:n=" + std::to_string(n));
}

NonCommutingDerivations::NonCommutingDerivations(std::size_t i, std::size_t j, bool with_conjugate, Polynomial witness,
                                                 Polynomial value)
    : std::invalid_argument("derivations D" + std::to_string(i + 1) + " and D" + std::to_string(j + 1) +
                            (with_conjugate ? "*" : "") + " do not commute on " + to_string(witness)),
      i_(i), j_(j), with_conjugate_(with_conjugate), witness_(std::move(witness)), value_(std::move(value))
{
}

StarProduct make_exp_product(const VariableFrame& frame, const std::vector<DiffOperator>& derivations,
                             const Rational& scale, std::size_t order, unsigned degree_bound, const std::string& name)
{
    if (derivations.empty()) throw std::invalid_argument("make_exp_product: no derivations given");
    if (scale <= 0) throw std::invalid_argument("make_exp_product: scale must be positive");
    bool constant = true;
    std::vector<DiffOperator> conjugates;
    for (const auto& d : derivations) {
        require_same_frame(frame, d.frame(), "make_exp_product");
        for (const auto& [a, c] : d.terms())
            if (total_degree(a) != 1) throw std::invalid_argument("make_exp_product: derivations must be first-order vector fields");
        constant = constant && d.is_constant_coefficient();
        conjugates.push_back(d.conj());
    }

    const auto monomials = monomials_up_to(frame, degree_bound);
    for (std::size_t i = 0; i < derivations.size(); ++i) {
        for (std::size_t j = 0; j < derivations.size(); ++j) {
            for (int star = 0; star < 2; ++star) {
                const DiffOperator& a = derivations[i];
                const DiffOperator& b = star ? conjugates[j] : derivations[j];
                for (const auto& e : monomials) {
                    Polynomial m = Polynomial::monomial(frame, e);
                    Polynomial c = a.apply(b.apply(m)) - b.apply(a.apply(m));
                    if (!c.is_zero()) throw NonCommutingDerivations(i, j, star == 1, m, c);
                }
            }
        }
    }

    const std::size_t m = derivations.size();
    // Powers D_k^e and (D_k*)^e, built by composition.
    std::vector<std::vector<DiffOperator>> pow(m), pow_conj(m);
    for (std::size_t k = 0; k < m; ++k) {
        pow[k].push_back(DiffOperator::identity(frame));
        pow_conj[k].push_back(DiffOperator::identity(frame));
    }
    std::vector<BidiffOperator> graded{BidiffOperator::pointwise(frame)};
    for (std::size_t r = 1; r <= order; ++r) {
        for (std::size_t k = 0; k < m; ++k) {
            pow[k].push_back(derivations[k].compose(pow[k].back()));
            pow_conj[k].push_back(conjugates[k].compose(pow_conj[k].back()));
        }
        BidiffOperator mu(frame);
        Rational s_r(1);
        for (std::size_t j = 0; j < r; ++j) s_r *= scale;
        for (const auto& kk : compositions(m, static_cast<unsigned>(r))) {
            DiffOperator left = DiffOperator::identity(frame);
            DiffOperator right = DiffOperator::identity(frame);
            Rational w = s_r;
            for (std::size_t k = 0; k < m; ++k) {
                if (kk[k] == 0) continue;
                left = left.compose(pow[k][kk[k]]);
                right = right.compose(pow_conj[k][kk[k]]);
                w /= factorial(kk[k]);
            }
            mu = mu + BidiffOperator::tensor(left, right).scaled(Series(QI(w)));
        }
        graded.push_back(std::move(mu));
    }
    return StarProduct(frame, std::move(graded), name, constant, ExpDerivationData{derivations, scale});
}

std::vector<SquareTerm> sum_of_squares(const StarProduct& p, const Polynomial& f, std::size_t r)
{
    if (!p.exp_data()) throw std::invalid_argument("sum_of_squares: product carries no derivation data");
    const auto& data = *p.exp_data();
    const std::size_t m = data.derivations.size();
    Polynomial fbar = f.conj();
    std::vector<SquareTerm> out;
    Rational s_r(1);
    for (std::size_t j = 0; j < r; ++j) s_r *= data.scale;
    for (const auto& kk : compositions(m, static_cast<unsigned>(r))) {
        Polynomial b = fbar;
        Rational w = s_r;
        for (std::size_t k = 0; k < m; ++k)
            for (unsigned e = 0; e < kk[k]; ++e) b = data.derivations[k].apply(b);
        for (std::size_t k = 0; k < m; ++k) w /= factorial(kk[k]);
        out.push_back({w, std::move(b)});
    }
    return out;
}

Polynomial sum_of_squares_value(const std::vector<SquareTerm>& terms, const VariableFrame& frame)
{
    Polynomial s(frame);
    for (const auto& t : terms) s = s + (t.factor * t.factor.conj()).scaled(QI(t.weight));
    return s;
}

Polynomial star_mul(const StarProduct& p, const Polynomial& f, const Polynomial& g, std::size_t n)
{
    require_same_frame(p.frame(), f.frame(), "star_mul");
    require_same_frame(p.frame(), g.frame(), "star_mul");
    bool exact = false;
    std::size_t top = n;
    if (p.derivative_graded() && f.exact() && g.exact()) {
        std::size_t vanish = std::min(f.degree(), g.degree());
        if (f.is_zero() || g.is_zero()) vanish = 0;
        if (vanish <= p.order()) {
            exact = true;
            top = vanish;
        }
    }
    if (!exact && n > p.order())
        throw std::invalid_argument("star_mul: requested order " + std::to_string(n) + " exceeds the expansion order " +
                                    std::to_string(p.order()) + " of " + p.name());
    Polynomial out(p.frame());
    for (std::size_t r = 0; r <= top; ++r) {
        Polynomial term = p.mu(r).apply(f, g);
        if (r > 0) term = term.scaled(Series::lambda_power(r));
        out = out + term;
    }
    if (exact) return out.truncated(n);
    return out.truncated(n).as_inexact();
}

namespace {

std::vector<Polynomial> monomial_grid(const VariableFrame& frame, unsigned degree_bound)
{
    std::vector<Polynomial> out;
    for (const auto& e : monomials_up_to(frame, degree_bound)) out.push_back(Polynomial::monomial(frame, e));
    return out;
}

}  // namespace

LawReport assoc_check(const StarProduct& p, unsigned degree_bound, std::size_t n)
{
    LawReport rep{"associativity", true, degree_bound, n, 0, {}, ""};
    const auto grid = monomial_grid(p.frame(), degree_bound);
    for (const auto& f : grid)
        for (const auto& g : grid) {
            Polynomial fg = star_mul(p, f, g, n);
            for (const auto& h : grid) {
                ++rep.cases;
                Polynomial lhs = star_mul(p, fg, h, n);
                Polynomial rhs = star_mul(p, f, star_mul(p, g, h, n), n);
                if (!equal_up_to(lhs, rhs, n)) {
                    rep.pass = false;
                    rep.witness = {f, g, h};
                    rep.detail = "(f*g)*h - f*(g*h) = " + to_string((lhs - rhs).truncated(n));
                    return rep;
                }
            }
        }
    return rep;
}

LawReport hermitian_check(const StarProduct& p, unsigned degree_bound, std::size_t n)
{
    LawReport rep{"hermiticity", true, degree_bound, n, 0, {}, ""};
    const auto grid = monomial_grid(p.frame(), degree_bound);
    for (const auto& f : grid)
        for (const auto& g : grid) {
            ++rep.cases;
            Polynomial lhs = star_mul(p, f, g, n).conj();
            Polynomial rhs = star_mul(p, g.conj(), f.conj(), n);
            if (!equal_up_to(lhs, rhs, n)) {
                rep.pass = false;
                rep.witness = {f, g};
                rep.detail = "conj(f*g) - conj(g)*conj(f) = " + to_string((lhs - rhs).truncated(n));
                return rep;
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// EquivalenceTransform

EquivalenceTransform::EquivalenceTransform(const VariableFrame& frame, std::vector<DiffOperator> graded, std::string name,
                                           bool derivative_graded)
    : frame_(frame), graded_(std::move(graded)), name_(std::move(name)), derivative_graded_(derivative_graded)
{
    if (graded_.empty()) throw std::invalid_argument("EquivalenceTransform: T_0 is required");
    for (const auto& d : graded_) require_same_frame(frame_, d.frame(), "EquivalenceTransform");
    if (!(graded_[0] == DiffOperator::identity(frame_)))
        throw std::invalid_argument("EquivalenceTransform: T_0 must be the identity");
}

EquivalenceTransform EquivalenceTransform::identity(const VariableFrame& frame, std::size_t order)
{
    std::vector<DiffOperator> g{DiffOperator::identity(frame)};
    for (std::size_t r = 1; r <= order; ++r) g.emplace_back(frame);
    return EquivalenceTransform(frame, std::move(g), "id", true);
}

bool EquivalenceTransform::is_constant_coefficient() const
{
    return std::all_of(graded_.begin(), graded_.end(), [](const DiffOperator& d) { return d.is_constant_coefficient(); });
}

bool EquivalenceTransform::is_real() const
{
    return std::all_of(graded_.begin(), graded_.end(), [](const DiffOperator& d) { return d.conj() == d; });
}

EquivalenceTransform EquivalenceTransform::in_frame(VariableFrame::Kind kind) const
{
    if (frame_.kind == kind) return *this;
    std::vector<DiffOperator> g;
    for (const auto& d : graded_) g.push_back(d.in_frame(kind));
    return EquivalenceTransform(g.front().frame(), std::move(g), name_, derivative_graded_);
}

EquivalenceTransform make_T_laplace(const VariableFrame& frame, const Rational& scale, std::size_t order)
{
    const std::size_t n = frame.n;
    Polynomial laplace(frame);
    for (std::size_t k = 0; k < n; ++k) {
        if (frame.is_real()) {
            Exponent qq = zero_exponent(frame), pp = zero_exponent(frame);
            qq[k] = 2;
            pp[k + n] = 2;
            laplace = laplace + Polynomial::monomial(frame, qq, Series(QI(ratio(1, 4)))) +
                      Polynomial::monomial(frame, pp, Series(QI(ratio(1, 4))));
        } else {
            laplace = laplace + Polynomial::monomial(frame, add(unit_exponent(frame, k), unit_exponent(frame, k + n)));
        }
    }
    Polynomial x = laplace.scaled(QI(scale));
    std::vector<DiffOperator> g{DiffOperator::identity(frame)};
    Polynomial power = one(frame);
    for (std::size_t r = 1; r <= order; ++r) {
        power = power * x;
        g.push_back(DiffOperator::from_symbol(power.scaled(QI(Rational(1) / factorial(static_cast<unsigned>(r))))));
    }
    return EquivalenceTransform(frame, std::move(g), "exp(l*" + to_string(scale) + "*laplace)", true);
}

Polynomial transform_apply(const EquivalenceTransform& t, const Polynomial& f, std::size_t n)
{
    require_same_frame(t.frame(), f.frame(), "transform_apply");
    bool exact = false;
    std::size_t top = n;
    if (t.derivative_graded() && f.exact() && f.degree() <= t.order()) {
        exact = true;
        top = f.degree();
    }
    if (!exact && n > t.order())
        throw std::invalid_argument("transform_apply: requested order exceeds the expansion order of " + t.name());
    Polynomial out(t.frame());
    for (std::size_t r = 0; r <= top; ++r) {
        Polynomial term = t.term(r).apply(f);
        if (r > 0) term = term.scaled(Series::lambda_power(r));
        out = out + term;
    }
    if (exact) return out.truncated(n);
    return out.truncated(n).as_inexact();
}

EquivalenceTransform transform_invert(const EquivalenceTransform& t, std::size_t n)
{
    if (n > t.order()) throw std::invalid_argument("transform_invert: order exceeds the expansion order");
    std::vector<DiffOperator> s{DiffOperator::identity(t.frame())};
    for (std::size_t r = 1; r <= n; ++r) {
        DiffOperator acc(t.frame());
        for (std::size_t k = 1; k <= r; ++k) acc = acc + t.term(k).compose(s[r - k]);
        s.push_back(acc.scaled(Series(-1)));
    }
    return EquivalenceTransform(t.frame(), std::move(s), "inverse(" + t.name() + ")", t.derivative_graded());
}

LawReport check_equivalence(const EquivalenceTransform& t, const StarProduct& p, const StarProduct& q,
                            unsigned degree_bound, std::size_t n)
{
    if (p.frame().n != q.frame().n || p.frame().n != t.frame().n)
        throw FrameMismatch("check_equivalence: products and transform act on different dimensions");
    LawReport rep{"equivalence " + t.name() + ": " + p.name() + " -> " + q.name(), true, degree_bound, n, 0, {}, ""};
    const auto kind_t = t.frame().kind;
    const auto kind_q = q.frame().kind;
    const auto grid = monomial_grid(p.frame(), degree_bound);
    std::vector<Polynomial> images;
    for (const auto& f : grid) images.push_back(to_frame(transform_apply(t, to_frame(f, kind_t), n), kind_q));
    for (std::size_t a = 0; a < grid.size(); ++a)
        for (std::size_t b = 0; b < grid.size(); ++b) {
            ++rep.cases;
            Polynomial lhs = transform_apply(t, to_frame(star_mul(p, grid[a], grid[b], n), kind_t), n);
            Polynomial rhs = to_frame(star_mul(q, images[a], images[b], n), kind_t);
            if (!equal_up_to(lhs, rhs, n)) {
                rep.pass = false;
                rep.witness = {grid[a], grid[b]};
                rep.detail = "T(f*g) - Tf*Tg = " + to_string((lhs - rhs).truncated(n));
                return rep;
            }
        }
    return rep;
}

StarProduct transport_product(const StarProduct& p, const EquivalenceTransform& t, std::size_t order)
{
    require_same_frame(p.frame(), t.frame(), "transport_product");
    if (order > p.order() || order > t.order()) throw std::invalid_argument("transport_product: order exceeds the expansions");
    const VariableFrame& frame = p.frame();
    EquivalenceTransform inv = transform_invert(t, order);
    DiffOperator id = DiffOperator::identity(frame);
    // W_u = sum_{c+d=u} S_c (x) S_d.
    std::vector<BidiffOperator> w;
    for (std::size_t u = 0; u <= order; ++u) {
        BidiffOperator acc(frame);
        for (std::size_t c = 0; c <= u; ++c) acc = acc + BidiffOperator::tensor(inv.term(c), inv.term(u - c));
        w.push_back(std::move(acc));
    }
    std::vector<BidiffOperator> lifted;
    for (std::size_t a = 0; a <= order; ++a) lifted.push_back(BidiffOperator::after_product(t.term(a)));
    std::vector<BidiffOperator> graded;
    for (std::size_t r = 0; r <= order; ++r) {
        BidiffOperator acc(frame);
        for (std::size_t a = 0; a <= r; ++a)
            for (std::size_t b = 0; a + b <= r; ++b) acc = acc + lifted[a] * p.mu(b) * w[r - a - b];
        graded.push_back(std::move(acc));
    }
    return StarProduct(frame, std::move(graded), "transport(" + p.name() + ", " + t.name() + ")");
}

}  // namespace stardef
