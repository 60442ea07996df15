#include "stardef/scalars.hpp"

#include <sstream>

#include "stardef/expr_parser.hpp"

namespace stardef {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const QI& z)
{
    const Rational& a = z.real();
    const Rational& b = z.imag();
    if (b == 0) return to_string(a);

    std::string im;
    Rational mag = abs(b);
    if (mag == 1)
        im = "i";
    else
        im = to_string(mag) + "*i";

    if (a == 0) return (b < 0 ? "-" : "") + im;
    return to_string(a) + (b < 0 ? " - " : " + ") + im;
}

bool needs_parens(const QI& z) { return z.real() != 0 && z.imag() != 0; }

Precision combine_add(const Precision& a, const Precision& b)
{
    if (a.exact && b.exact) return {std::max(a.order, b.order), true};
    if (a.exact) return {b.order, false};
    if (b.exact) return {a.order, false};
    return {std::min(a.order, b.order), false};
}

Precision combine_mul(const Precision& a, const Precision& b)
{
    if (a.exact && b.exact) return {a.order + b.order, true};
    return combine_add(a, b);
}

std::string to_string(const Sign& s)
{
    switch (s.kind) {
    case Sign::Kind::Positive:
        return "positive";
    case Sign::Kind::Negative:
        return "negative";
    case Sign::Kind::Zero:
        return "zero";
    case Sign::Kind::Undetermined:
        return "undetermined at order " + std::to_string(s.order);
    }
    return "?";
}

Sign sign(const RealSeries& a)
{
    const auto& c = a.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        int s = sgn(c[k]);
        if (s > 0) return {Sign::Kind::Positive, k};
        if (s < 0) return {Sign::Kind::Negative, k};
    }
    if (a.exact()) return {Sign::Kind::Zero, 0};
    return {Sign::Kind::Undetermined, a.order()};
}

bool is_real(const Series& a)
{
    for (const auto& c : a.coefficients())
        if (!c.is_real()) return false;
    return true;
}

Sign sign(const Series& a)
{
    if (!is_real(a)) throw std::domain_error("sign: series has non-real coefficients: " + to_string(a));
    return sign(real_part(a));
}

Series conj(const Series& a)
{
    std::vector<QI> v;
    v.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) v.push_back(c.conj());
    return Series(std::move(v), a.exact());
}

RealSeries real_part(const Series& a)
{
    std::vector<Rational> v;
    for (const auto& c : a.coefficients()) v.push_back(c.real());
    return RealSeries(std::move(v), a.exact());
}

RealSeries imag_part(const Series& a)
{
    std::vector<Rational> v;
    for (const auto& c : a.coefficients()) v.push_back(c.imag());
    return RealSeries(std::move(v), a.exact());
}

Series complexify(const RealSeries& a)
{
    std::vector<QI> v;
    for (const auto& c : a.coefficients()) v.emplace_back(c);
    return Series(std::move(v), a.exact());
}

bool equal_up_to(const Series& a, const Series& b, std::size_t n)
{
    for (std::size_t k = 0; k <= n; ++k) {
        bool ka = k <= a.order() || a.exact();
        bool kb = k <= b.order() || b.exact();
        if (!ka || !kb) break;
        if (a.coeff(k) != b.coeff(k)) return false;
    }
    return true;
}

namespace {

template <class T>
std::string series_text(const FormalSeries<T>& s)
{
    std::ostringstream out;
    bool first = true;
    const auto& c = s.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == T(0)) continue;
        QI z(c[k]);
        std::string mono = k == 0 ? "" : (k == 1 ? "l" : "l^" + std::to_string(k));
        std::string coeff;
        bool negative = false;
        if (z.is_real()) {
            negative = z.real() < 0;
            Rational m = abs(z.real());
            if (m != 1 || mono.empty()) coeff = to_string(m);
        } else if (z.real() == 0) {
            negative = z.imag() < 0;
            coeff = to_string(QI(Rational(0), abs(z.imag())));
        } else {
            coeff = "(" + to_string(z) + ")";
        }
        std::string body = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
        if (first)
            out << (negative ? "-" : "") << body;
        else
            out << (negative ? " - " : " + ") << body;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

std::string to_string(const Series& s) { return series_text(s); }
std::string to_string(const RealSeries& s) { return series_text(s); }

Series parse_series(const std::string& text)
{
    ExpressionParser<Series> parser(
        text,
        [](const std::string& name) -> Series {
            if (name == "l") return Series::lambda_power(1);
            if (name == "i") return Series(QI::unit());
            throw std::invalid_argument("unknown symbol '" + name + "'");
        },
        [](const Rational& r) { return Series(QI(r)); });
    return parser.parse();
}

QI parse_scalar(const std::string& text)
{
    Series s = parse_series(text);
    if (s.degree() != 0) throw ParseError("scalar expected, got a series in l: " + text, 0);
    return s.coeff(0);
}

}  // namespace stardef
