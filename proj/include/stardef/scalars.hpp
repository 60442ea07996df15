#ifndef STARDEF_SCALARS_HPP
#define STARDEF_SCALARS_HPP

// Exact ordered scalars: Q, Q(i), and truncated formal power series in the
// deformation parameter l over either of them.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace stardef {

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Quadratic extension T(i) with i^2 = -1.
template <class T>
class Complex {
public:
    Complex() : re_(0), im_(0) {}
    Complex(int re) : re_(re), im_(0) {}
    Complex(long re) : re_(re), im_(0) {}
    Complex(const T& re) : re_(re), im_(0) {}
    Complex(T re, T im) : re_(std::move(re)), im_(std::move(im)) {}

    static Complex unit() { return Complex(T(0), T(1)); }

    const T& real() const { return re_; }
    const T& imag() const { return im_; }

    bool is_real() const { return im_ == 0; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    Complex conj() const { return Complex(re_, -im_); }

    /// conj(z) * z as an element of the base ring.
    T norm() const { return T(re_ * re_ + im_ * im_); }

    Complex inverse() const
    {
        if (is_zero()) throw std::domain_error("Complex: division by zero");
        T n = norm();
        return Complex(T(re_ / n), T(-im_ / n));
    }

    Complex operator-() const { return Complex(T(-re_), T(-im_)); }

    Complex& operator+=(const Complex& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o)
    {
        T r = re_ * o.re_ - im_ * o.im_;
        T i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) { return *this *= o.inverse(); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    /// Lexicographic on (re, im); only used for ordered containers.
    friend bool operator<(const Complex& a, const Complex& b)
    {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    T re_;
    T im_;
};

using QI = Complex<Rational>;

inline QI conj(const QI& z) { return z.conj(); }
inline Rational conj(const Rational& r) { return r; }

std::string to_string(const QI& z);
inline std::ostream& operator<<(std::ostream& os, const QI& z) { return os << to_string(z); }

/// True when printing `z` as a factor needs parentheses.
bool needs_parens(const QI& z);

/// Truncation state of a formal series: coefficients 0..order are known;
/// when `exact` is set every coefficient beyond `order` is known to vanish.
struct Precision {
    std::size_t order = 0;
    bool exact = true;

    friend bool operator==(const Precision&, const Precision&) = default;
};

Precision combine_add(const Precision& a, const Precision& b);
Precision combine_mul(const Precision& a, const Precision& b);

struct Sign {
    enum class Kind { Positive, Negative, Zero, Undetermined };

    Kind kind = Kind::Zero;
    // Index of the leading coefficient for Positive/Negative; the truncation
    // order for Undetermined.
    std::size_t order = 0;

    bool is_positive() const { return kind == Kind::Positive; }
    bool is_negative() const { return kind == Kind::Negative; }
    bool is_zero() const { return kind == Kind::Zero; }
    bool is_undetermined() const { return kind == Kind::Undetermined; }
    /// Positive, Zero or Undetermined: not refuted as nonnegative.
    bool not_negative() const { return kind != Kind::Negative; }

    friend bool operator==(const Sign&, const Sign&) = default;
};

std::string to_string(const Sign& s);

/// Truncated formal power series sum_{k<=N} c_k l^k with explicit precision.
template <class T>
class FormalSeries {
public:
    FormalSeries() : coeffs_(1, T(0)), exact_(true) {}
    FormalSeries(int c) : coeffs_(1, T(c)), exact_(true) {}
    FormalSeries(const T& c) : coeffs_(1, c), exact_(true) {}
    FormalSeries(std::vector<T> coeffs, bool exact) : coeffs_(std::move(coeffs)), exact_(exact)
    {
        if (coeffs_.empty()) coeffs_.push_back(T(0));
    }

    /// Exact monomial c * l^k.
    static FormalSeries lambda_power(std::size_t k, const T& c = T(1))
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return FormalSeries(std::move(v), true);
    }

    /// Zero series at the given precision.
    static FormalSeries zero(const Precision& p) { return FormalSeries(std::vector<T>(p.order + 1, T(0)), p.exact); }

    std::size_t order() const { return coeffs_.size() - 1; }
    bool exact() const { return exact_; }
    Precision precision() const { return {order(), exact_}; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    /// Coefficient of l^k; zero past the order of an exact series.
    T coeff(std::size_t k) const
    {
        if (k < coeffs_.size()) return coeffs_[k];
        if (exact_) return T(0);
        throw std::out_of_range("FormalSeries: coefficient beyond truncation order requested");
    }

    bool stored_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return c == T(0); });
    }
    /// Known to be exactly zero.
    bool is_zero() const { return exact_ && stored_zero(); }

    std::size_t degree() const
    {
        std::size_t d = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != T(0)) d = k;
        return d;
    }

    /// Keep coefficients up to N. Dropping a nonzero coefficient marks the
    /// result as truncated; an exact series is zero-padded when N exceeds
    /// its order.
    FormalSeries truncated(std::size_t n) const
    {
        if (n >= order()) {
            if (!exact_) return *this;
            std::vector<T> v = coeffs_;
            v.resize(n + 1, T(0));
            return FormalSeries(std::move(v), true);
        }
        bool lost = false;
        for (std::size_t k = n + 1; k < coeffs_.size(); ++k)
            if (coeffs_[k] != T(0)) lost = true;
        std::vector<T> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1));
        return FormalSeries(std::move(v), exact_ && !lost);
    }

    /// Reshape to exactly the given precision. Padding an inexact series is
    /// a logic error.
    FormalSeries with_precision(const Precision& p) const
    {
        std::vector<T> v = coeffs_;
        if (v.size() < p.order + 1) {
            if (!exact_) throw std::logic_error("FormalSeries: cannot extend a truncated series");
            v.resize(p.order + 1, T(0));
        }
        v.resize(p.order + 1);
        return FormalSeries(std::move(v), p.exact);
    }

    FormalSeries as_inexact() const { return FormalSeries(coeffs_, false); }

    FormalSeries operator-() const
    {
        std::vector<T> v(coeffs_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = -coeffs_[k];
        return FormalSeries(std::move(v), exact_);
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
    {
        Precision p = combine_add(a.precision(), b.precision());
        std::vector<T> v(p.order + 1);
        for (std::size_t k = 0; k <= p.order; ++k) v[k] = a.coeff(k) + b.coeff(k);
        return FormalSeries(std::move(v), p.exact);
    }
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a + (-b); }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
    {
        Precision p = combine_mul(a.precision(), b.precision());
        std::vector<T> v(p.order + 1, T(0));
        for (std::size_t i = 0; i <= std::min(p.order, a.order()); ++i) {
            if (a.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; j <= std::min(p.order - i, b.order()); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return FormalSeries(std::move(v), p.exact);
    }

    FormalSeries& operator+=(const FormalSeries& o) { return *this = *this + o; }
    FormalSeries& operator-=(const FormalSeries& o) { return *this = *this - o; }
    FormalSeries& operator*=(const FormalSeries& o) { return *this = *this * o; }

    FormalSeries scaled(const T& c) const
    {
        std::vector<T> v(coeffs_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * coeffs_[k];
        return FormalSeries(std::move(v), exact_);
    }

    /// Compares stored coefficient values, ignoring trailing zeros and the
    /// exactness flag.
    friend bool operator==(const FormalSeries& a, const FormalSeries& b)
    {
        std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        for (std::size_t k = 0; k < n; ++k) {
            const T za = k < a.coeffs_.size() ? a.coeffs_[k] : T(0);
            const T zb = k < b.coeffs_.size() ? b.coeffs_[k] : T(0);
            if (za != zb) return false;
        }
        return true;
    }
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }

private:
    std::vector<T> coeffs_;
    bool exact_;
};

using RealSeries = FormalSeries<Rational>;
using Series = FormalSeries<QI>;

/// Sign in the canonical order of Q[[l]]: the sign of the lowest nonvanishing
/// coefficient. An all-zero truncation is Undetermined, never Zero.
Sign sign(const RealSeries& a);

/// Sign of a complex series whose coefficients are all real.
/// Throws std::domain_error otherwise.
Sign sign(const Series& a);

bool is_real(const Series& a);
Series conj(const Series& a);
RealSeries real_part(const Series& a);
RealSeries imag_part(const Series& a);
Series complexify(const RealSeries& a);

/// Coefficientwise agreement up to l^n.
bool equal_up_to(const Series& a, const Series& b, std::size_t n);

std::string to_string(const Series& s);
std::string to_string(const RealSeries& s);

/// Parses the series grammar, e.g. `1/2 + 3*l - l^2` or `(1 + 2*i)*l`.
/// The result is exact.
Series parse_series(const std::string& text);
QI parse_scalar(const std::string& text);

/// n/d in lowest terms.
inline Rational ratio(long n, long d)
{
    Rational r(n);
    r /= d;
    return r;
}

inline Rational factorial(unsigned k)
{
    Rational r(1);
    for (unsigned j = 2; j <= k; ++j) r *= j;
    return r;
}

}  // namespace stardef

#endif
