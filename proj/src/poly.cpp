#include "stardef/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "stardef/expr_parser.hpp"

namespace stardef {

std::string VariableFrame::var_name(std::size_t v) const
{
    if (v >= num_vars()) throw std::out_of_range("variable index out of range");
    std::size_t k = v % n + 1;
    bool second = v >= n;
    if (is_real()) return (second ? "p" : "q") + std::to_string(k);
    return (second ? "zb" : "z") + std::to_string(k);
}

std::optional<std::size_t> VariableFrame::var_index(const std::string& name) const
{
    std::string prefix;
    std::size_t i = 0;
    while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) prefix += name[i++];
    if (i == name.size()) return std::nullopt;
    for (std::size_t j = i; j < name.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(name[j]))) return std::nullopt;
    std::size_t k = std::stoul(name.substr(i));
    if (k < 1 || k > n) return std::nullopt;
    if (is_real()) {
        if (prefix == "q") return k - 1;
        if (prefix == "p") return n + k - 1;
    } else {
        if (prefix == "z") return k - 1;
        if (prefix == "zb") return n + k - 1;
    }
    return std::nullopt;
}

std::size_t VariableFrame::conj_var(std::size_t v) const
{
    if (is_real()) return v;
    return v < n ? v + n : v - n;
}

std::string VariableFrame::to_string() const { return (is_real() ? "real:" : "holomorphic:") + std::to_string(n); }

VariableFrame VariableFrame::parse(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("frame must look like real:n or holomorphic:n");
    std::string kind = text.substr(0, colon);
    std::size_t n = std::stoul(text.substr(colon + 1));
    if (n == 0) throw std::invalid_argument("frame dimension must be positive");
    if (kind == "real") return real(n);
    if (kind == "holomorphic" || kind == "holo") return holomorphic(n);
    throw std::invalid_argument("unknown frame kind '" + kind + "'");
}

void require_same_frame(const VariableFrame& a, const VariableFrame& b, const char* where)
{
    if (!(a == b)) throw FrameMismatch(std::string(where) + ": frame mismatch (" + a.to_string() + " vs " + b.to_string() + ")");
}

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Point holomorphic_point(const std::vector<QI>& z)
{
    Point x(z);
    for (const auto& w : z) x.push_back(w.conj());
    return x;
}

Point real_point(const std::vector<Rational>& x)
{
    Point p;
    for (const auto& r : x) p.emplace_back(r);
    return p;
}

void validate_point(const VariableFrame& frame, const Point& x)
{
    if (x.size() != frame.num_vars())
        throw std::invalid_argument("point arity " + std::to_string(x.size()) + " does not match frame " + frame.to_string());
    if (frame.is_real()) {
        for (const auto& c : x)
            if (!c.is_real()) throw std::invalid_argument("real frame requires real coordinates");
    } else {
        for (std::size_t k = 0; k < frame.n; ++k)
            if (x[k + frame.n] != x[k].conj()) throw std::invalid_argument("holomorphic point must pair z with conj(z)");
    }
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const VariableFrame& frame) : frame_(frame), precision_{0, true} {}

Polynomial Polynomial::constant(const VariableFrame& frame, const Series& c)
{
    return monomial(frame, Exponent(frame.num_vars(), 0), c);
}

Polynomial Polynomial::variable(const VariableFrame& frame, std::size_t v)
{
    Exponent e(frame.num_vars(), 0);
    e.at(v) = 1;
    return monomial(frame, e);
}

Polynomial Polynomial::monomial(const VariableFrame& frame, const Exponent& e, const Series& c)
{
    if (e.size() != frame.num_vars()) throw std::invalid_argument("monomial arity does not match frame");
    Polynomial p(frame);
    p.terms_.emplace(e, c);
    p.normalize(c.precision());
    return p;
}

void Polynomial::normalize(const Precision& p)
{
    precision_ = p;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.with_precision(p);
        if (it->second.stored_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

unsigned Polynomial::degree() const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Series Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    if (it == terms_.end()) return Series::zero(precision_);
    return it->second;
}

Polynomial Polynomial::grade(std::size_t k) const
{
    Polynomial g(frame_);
    for (const auto& [e, c] : terms_) {
        if (k > c.order()) continue;
        if (c.coefficients()[k] != QI(0)) g.terms_.emplace(e, Series(c.coefficients()[k]));
    }
    return g;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    require_same_frame(a.frame_, b.frame_, "poly_add");
    Precision p = combine_add(a.precision_, b.precision_);
    Polynomial r(a.frame_);
    r.terms_ = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end())
            r.terms_.emplace(e, c);
        else
            it->second = it->second + c;
    }
    r.normalize(p);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_frame(a.frame_, b.frame_, "poly_mul");
    Precision p = combine_mul(a.precision_, b.precision_);
    Polynomial r(a.frame_);
    Exponent e(a.frame_.num_vars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            Series c = (ca * cb).with_precision(p);
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_.emplace(e, std::move(c));
            else
                it->second = it->second + c;
        }
    }
    r.normalize(p);
    return r;
}

Polynomial Polynomial::scaled(const Series& c) const
{
    Precision p = combine_mul(precision_, c.precision());
    Polynomial r(frame_);
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, (a * c).with_precision(p));
    r.normalize(p);
    return r;
}

Polynomial Polynomial::diff(std::size_t v) const
{
    if (v >= frame_.num_vars()) throw std::out_of_range("diff: unknown variable");
    Polynomial r(frame_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent f = e;
        f[v] -= 1;
        r.terms_.emplace(f, c.scaled(QI(static_cast<long>(e[v]))));
    }
    r.normalize(precision_);
    return r;
}

Polynomial Polynomial::derivative(const Exponent& alpha) const
{
    if (alpha.size() != frame_.num_vars()) throw std::invalid_argument("derivative: multi-index arity mismatch");
    Polynomial r(frame_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        Rational factor(1);
        bool zero = false;
        for (std::size_t v = 0; v < e.size() && !zero; ++v) {
            if (alpha[v] > e[v]) {
                zero = true;
                break;
            }
            for (unsigned j = 0; j < alpha[v]; ++j) factor *= e[v] - j;
            f[v] -= alpha[v];
        }
        if (zero) continue;
        r.terms_.emplace(f, c.scaled(QI(factor)));
    }
    r.normalize(precision_);
    return r;
}

Polynomial Polynomial::conj() const
{
    Polynomial r(frame_);
    for (const auto& [e, c] : terms_) {
        Exponent f(e.size());
        for (std::size_t v = 0; v < e.size(); ++v) f[frame_.conj_var(v)] = e[v];
        r.terms_.emplace(f, stardef::conj(c));
    }
    r.precision_ = precision_;
    return r;
}

Series Polynomial::eval(const Point& x) const
{
    if (x.size() != frame_.num_vars()) throw std::invalid_argument("eval: point arity does not match frame " + frame_.to_string());
    Series sum = Series::zero(precision_);
    std::vector<std::vector<QI>> powers(x.size(), std::vector<QI>{QI(1)});
    for (const auto& [e, c] : terms_) {
        QI m(1);
        for (std::size_t v = 0; v < e.size(); ++v) {
            while (powers[v].size() <= e[v]) powers[v].push_back(powers[v].back() * x[v]);
            if (e[v] > 0) m *= powers[v][e[v]];
        }
        if (m.is_zero()) continue;
        sum = sum + c.scaled(m);
    }
    return sum;
}

Polynomial Polynomial::truncated(std::size_t n) const
{
    if (n >= precision_.order && !precision_.exact) return *this;
    bool lost = false;
    for (const auto& [e, c] : terms_)
        if (!c.truncated(n).exact() && c.exact()) lost = true;
    Polynomial r(*this);
    r.normalize({n, precision_.exact && !lost});
    return r;
}

Polynomial Polynomial::as_inexact() const
{
    Polynomial r(*this);
    r.normalize({precision_.order, false});
    return r;
}

Polynomial Polynomial::with_precision(const Precision& p) const
{
    Polynomial r(*this);
    r.normalize(p);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!(a.frame_ == b.frame_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

bool equal_up_to(const Polynomial& a, const Polynomial& b, std::size_t n)
{
    if (!(a.frame() == b.frame())) return false;
    Polynomial d = a - b;
    for (const auto& [e, c] : d.terms()) {
        std::size_t top = std::min(n, c.order());
        for (std::size_t k = 0; k <= top; ++k)
            if (c.coefficients()[k] != QI(0)) return false;
    }
    return true;
}

Polynomial substitute(const Polynomial& f, const VariableFrame& target, const std::vector<Polynomial>& images)
{
    if (images.size() != f.frame().num_vars()) throw std::invalid_argument("substitute: wrong number of images");
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t v = 0; v < images.size(); ++v) {
        require_same_frame(images[v].frame(), target, "substitute");
        powers[v].push_back(Polynomial::constant(target, Series(1)));
    }
    Polynomial r(target);
    r = r.with_precision(f.precision());
    for (const auto& [e, c] : f.terms()) {
        Polynomial m = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            while (powers[v].size() <= e[v]) powers[v].push_back(powers[v].back() * images[v]);
            if (e[v] > 0) m = m * powers[v][e[v]];
        }
        r = r + m;
    }
    return r;
}

Polynomial frame_change(const Polynomial& f)
{
    const VariableFrame& src = f.frame();
    const std::size_t n = src.n;
    const QI half(ratio(1, 2));
    const QI i = QI::unit();
    std::vector<Polynomial> images(src.num_vars());
    if (src.is_real()) {
        VariableFrame dst = VariableFrame::holomorphic(n);
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial z = Polynomial::variable(dst, k);
            Polynomial zb = Polynomial::variable(dst, k + n);
            images[k] = (z + zb).scaled(half);
            images[k + n] = (z - zb).scaled(half * (-i));
        }
        return substitute(f, dst, images);
    }
    VariableFrame dst = VariableFrame::real(n);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial q = Polynomial::variable(dst, k);
        Polynomial ip = Polynomial::variable(dst, k + n).scaled(i);
        images[k] = q + ip;
        images[k + n] = q - ip;
    }
    return substitute(f, dst, images);
}

Polynomial to_frame(const Polynomial& f, const VariableFrame::Kind kind)
{
    if (f.frame().kind == kind) return f;
    return frame_change(f);
}

std::vector<Exponent> monomials_up_to(const VariableFrame& frame, unsigned d)
{
    std::vector<Exponent> out;
    const std::size_t m = frame.num_vars();
    for (unsigned deg = 0; deg <= d; ++deg) {
        // Lexicographically descending exponents of total degree `deg`.
        Exponent e(m, 0);
        std::vector<Exponent> level;
        auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
            if (v + 1 == m) {
                e[v] = left;
                level.push_back(e);
                return;
            }
            for (unsigned k = left + 1; k-- > 0;) {
                e[v] = k;
                self(self, v + 1, left - k);
            }
        };
        rec(rec, 0, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest degree first reads more naturally.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += f.frame().var_name(v);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string cs = to_string(c);
        bool negative = false;
        bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (!compound && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (mono.empty())
            body = compound ? "(" + cs + ")" : cs;
        else if (cs == "1")
            body = mono;
        else
            body = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (first)
            out << (negative ? "-" : "") << body;
        else
            out << (negative ? " - " : " + ") << body;
        first = false;
    }
    return out.str();
}

Polynomial parse_polynomial(const std::string& text, const VariableFrame& frame)
{
    ExpressionParser<Polynomial> parser(
        text,
        [&frame](const std::string& name) -> Polynomial {
            if (name == "l") return Polynomial::constant(frame, Series::lambda_power(1));
            if (name == "i") return Polynomial::constant(frame, Series(QI::unit()));
            if (auto v = frame.var_index(name)) return Polynomial::variable(frame, *v);
            VariableFrame other = frame.is_real() ? VariableFrame::holomorphic(frame.n) : VariableFrame::real(frame.n);
            if (other.var_index(name)) throw std::invalid_argument("variable '" + name + "' belongs to another frame than " + frame.to_string());
            throw std::invalid_argument("unknown variable '" + name + "' for frame " + frame.to_string());
        },
        [&frame](const Rational& r) { return Polynomial::constant(frame, Series(QI(r))); });
    return parser.parse();
}

Polynomial parse_polynomial(const std::string& text)
{
    bool real = false;
    bool holo = false;
    std::size_t n = 1;
    for (std::size_t i = 0; i < text.size();) {
        if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        std::string name = text.substr(start, i - start);
        std::size_t digits = name.find_first_of("0123456789");
        if (digits == std::string::npos) continue;
        std::string prefix = name.substr(0, digits);
        std::size_t k = std::stoul(name.substr(digits));
        if (prefix == "q" || prefix == "p")
            real = true;
        else if (prefix == "z" || prefix == "zb")
            holo = true;
        else
            continue;
        n = std::max(n, k);
    }
    if (real && holo) throw ParseError("polynomial mixes real (q, p) and holomorphic (z, zb) variables", 0);
    return parse_polynomial(text, holo ? VariableFrame::holomorphic(n) : VariableFrame::real(n));
}

// ---------------------------------------------------------------------------
// DiffOperator

DiffOperator DiffOperator::identity(const VariableFrame& frame)
{
    DiffOperator d(frame);
    d.add_term(Exponent(frame.num_vars(), 0), Polynomial::constant(frame, Series(1)));
    return d;
}

DiffOperator DiffOperator::partial(const VariableFrame& frame, std::size_t v, const Polynomial& coeff)
{
    DiffOperator d(frame);
    Exponent e(frame.num_vars(), 0);
    e.at(v) = 1;
    d.add_term(e, coeff);
    return d;
}

DiffOperator DiffOperator::from_symbol(const Polynomial& symbol)
{
    DiffOperator d(symbol.frame());
    for (const auto& [e, c] : symbol.terms()) d.add_term(e, Polynomial::constant(symbol.frame(), c));
    return d;
}

void DiffOperator::add_term(const Exponent& alpha, const Polynomial& coeff)
{
    require_same_frame(frame_, coeff.frame(), "DiffOperator");
    if (alpha.size() != frame_.num_vars()) throw std::invalid_argument("DiffOperator: multi-index arity mismatch");
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(alpha, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

bool DiffOperator::is_constant_coefficient() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.degree() == 0; });
}

unsigned DiffOperator::min_order() const
{
    unsigned m = ~0u;
    for (const auto& [a, c] : terms_) m = std::min(m, total_degree(a));
    return terms_.empty() ? 0 : m;
}

unsigned DiffOperator::max_order() const
{
    unsigned m = 0;
    for (const auto& [a, c] : terms_) m = std::max(m, total_degree(a));
    return m;
}

Polynomial DiffOperator::apply(const Polynomial& f) const
{
    require_same_frame(frame_, f.frame(), "DiffOperator::apply");
    Polynomial r(frame_);
    r = r.with_precision(f.precision());
    for (const auto& [a, c] : terms_) r = r + c * f.derivative(a);
    return r;
}

DiffOperator DiffOperator::compose(const DiffOperator& other) const
{
    require_same_frame(frame_, other.frame_, "DiffOperator::compose");
    DiffOperator out(frame_);
    const std::size_t m = frame_.num_vars();
    for (const auto& [alpha, a] : terms_) {
        // Enumerate gamma <= alpha with Leibniz weights C(alpha, gamma).
        std::vector<Exponent> gammas{Exponent()};
        for (std::size_t v = 0; v < m; ++v) {
            std::vector<Exponent> next;
            for (const auto& g : gammas)
                for (unsigned k = 0; k <= alpha[v]; ++k) {
                    Exponent h = g;
                    h.push_back(k);
                    next.push_back(std::move(h));
                }
            gammas = std::move(next);
        }
        for (const auto& gamma : gammas) {
            Rational binom(1);
            Exponent rest(m);
            for (std::size_t v = 0; v < m; ++v) {
                binom *= factorial(alpha[v]) / (factorial(gamma[v]) * factorial(alpha[v] - gamma[v]));
                rest[v] = alpha[v] - gamma[v];
            }
            for (const auto& [beta, b] : other.terms_) {
                Polynomial db = b.derivative(gamma);
                if (db.is_zero()) continue;
                Exponent order(m);
                for (std::size_t v = 0; v < m; ++v) order[v] = rest[v] + beta[v];
                out.add_term(order, (a * db).scaled(QI(binom)));
            }
        }
    }
    return out;
}

DiffOperator DiffOperator::conj() const
{
    DiffOperator out(frame_);
    for (const auto& [a, c] : terms_) {
        Exponent b(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) b[frame_.conj_var(v)] = a[v];
        out.add_term(b, c.conj());
    }
    return out;
}

Polynomial DiffOperator::symbol() const
{
    if (!is_constant_coefficient()) throw std::logic_error("symbol: operator has non-constant coefficients");
    Polynomial s(frame_);
    for (const auto& [a, c] : terms_) s = s + Polynomial::monomial(frame_, a, c.coefficient(Exponent(frame_.num_vars(), 0)));
    return s;
}

DiffOperator DiffOperator::frozen_at(const Point& x) const
{
    DiffOperator out(frame_);
    for (const auto& [a, c] : terms_) out.add_term(a, Polynomial::constant(frame_, c.eval(x)));
    return out;
}

DiffOperator DiffOperator::in_frame(VariableFrame::Kind kind) const
{
    if (frame_.kind == kind) return *this;
    const std::size_t n = frame_.n;
    const QI half(ratio(1, 2));
    const QI i = QI::unit();
    std::vector<Polynomial> images(frame_.num_vars());
    VariableFrame dst;
    if (frame_.is_real()) {
        // d/dq = d/dz + d/dzb, d/dp = i d/dz - i d/dzb.
        dst = VariableFrame::holomorphic(n);
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial dz = Polynomial::variable(dst, k);
            Polynomial dzb = Polynomial::variable(dst, k + n);
            images[k] = dz + dzb;
            images[k + n] = (dz - dzb).scaled(i);
        }
    } else {
        // d/dz = (d/dq - i d/dp)/2, d/dzb = (d/dq + i d/dp)/2.
        dst = VariableFrame::real(n);
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial dq = Polynomial::variable(dst, k);
            Polynomial idp = Polynomial::variable(dst, k + n).scaled(i);
            images[k] = (dq - idp).scaled(half);
            images[k + n] = (dq + idp).scaled(half);
        }
    }
    return from_symbol(substitute(symbol(), dst, images));
}

DiffOperator DiffOperator::scaled(const Series& c) const
{
    DiffOperator out(frame_);
    for (const auto& [a, p] : terms_) out.add_term(a, p.scaled(c));
    return out;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b)
{
    require_same_frame(a.frame_, b.frame_, "DiffOperator::+");
    DiffOperator out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + b.scaled(Series(-1)); }

bool operator==(const DiffOperator& a, const DiffOperator& b)
{
    if (!(a.frame_ == b.frame_) || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [e, c] : a.terms_) {
        auto it = b.terms_.find(e);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string to_string(const DiffOperator& d)
{
    if (d.is_zero()) return "0";
    std::string out;
    for (const auto& [a, c] : d.terms()) {
        if (!out.empty()) out += " + ";
        std::string dd;
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (a[v] == 0) continue;
            dd += "d_" + d.frame().var_name(v);
            if (a[v] > 1) dd += "^" + std::to_string(a[v]);
        }
        out += "(" + to_string(c) + ")" + (dd.empty() ? "" : "*" + dd);
    }
    return out;
}

}  // namespace stardef
