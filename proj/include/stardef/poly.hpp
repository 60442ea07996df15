#ifndef STARDEF_POLY_HPP
#define STARDEF_POLY_HPP

// Polynomial observables in canonical real coordinates (q, p) or in
// holomorphic coordinates (z, zb), with coefficients in Q(i)[[l]].
// The two frames are related by z = q + i p.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stardef/scalars.hpp"

namespace stardef {

class FrameMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct VariableFrame {
    enum class Kind { Real, Holomorphic };

    Kind kind = Kind::Real;
    std::size_t n = 1;

    static VariableFrame real(std::size_t n) { return {Kind::Real, n}; }
    static VariableFrame holomorphic(std::size_t n) { return {Kind::Holomorphic, n}; }

    std::size_t num_vars() const { return 2 * n; }
    bool is_real() const { return kind == Kind::Real; }

    /// q1..qn, p1..pn or z1..zn, zb1..zbn.
    std::string var_name(std::size_t v) const;
    std::optional<std::size_t> var_index(const std::string& name) const;
    /// Image of a variable under the conjugation involution.
    std::size_t conj_var(std::size_t v) const;

    std::string to_string() const;
    /// `real:2`, `holomorphic:1`.
    static VariableFrame parse(const std::string& text);

    friend bool operator==(const VariableFrame&, const VariableFrame&) = default;
};

void require_same_frame(const VariableFrame& a, const VariableFrame& b, const char* where);

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// A point in the frame's variable order. For holomorphic frames the zb
/// entries must be the conjugates of the z entries.
using Point = std::vector<QI>;

Point holomorphic_point(const std::vector<QI>& z);
Point real_point(const std::vector<Rational>& x);
void validate_point(const VariableFrame& frame, const Point& x);

class Polynomial {
public:
    using Terms = std::map<Exponent, Series>;

    Polynomial() : Polynomial(VariableFrame{}) {}
    explicit Polynomial(const VariableFrame& frame);

    static Polynomial constant(const VariableFrame& frame, const Series& c);
    static Polynomial variable(const VariableFrame& frame, std::size_t v);
    static Polynomial monomial(const VariableFrame& frame, const Exponent& e, const Series& c = Series(1));

    const VariableFrame& frame() const { return frame_; }
    const Terms& terms() const { return terms_; }
    const Precision& precision() const { return precision_; }
    bool exact() const { return precision_.exact; }

    bool is_zero() const { return terms_.empty(); }
    /// Total degree in the frame variables (l does not count); 0 for zero.
    unsigned degree() const;
    Series coefficient(const Exponent& e) const;
    /// The coefficient of l^k as a polynomial with constant coefficients.
    Polynomial grade(std::size_t k) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Series& c) const;
    Polynomial scaled(const QI& c) const { return scaled(Series(c)); }

    Polynomial diff(std::size_t v) const;
    /// Mixed partial derivative with multi-index alpha.
    Polynomial derivative(const Exponent& alpha) const;
    Polynomial conj() const;
    Series eval(const Point& x) const;

    Polynomial truncated(std::size_t n) const;
    Polynomial as_inexact() const;
    Polynomial with_precision(const Precision& p) const;

    /// Compares frames and stored coefficients, not precision.
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void normalize(const Precision& p);

    VariableFrame frame_;
    Precision precision_;
    Terms terms_;
};

bool equal_up_to(const Polynomial& a, const Polynomial& b, std::size_t n);

/// Substitutes images[v] for variable v; the images live in `target`.
Polynomial substitute(const Polynomial& f, const VariableFrame& target, const std::vector<Polynomial>& images);

/// Real <-> holomorphic coordinates via z = q + i p; the direction is taken
/// from the frame of `f`.
Polynomial frame_change(const Polynomial& f);
Polynomial to_frame(const Polynomial& f, const VariableFrame::Kind kind);

/// All monomials of total degree <= d, ordered by degree.
std::vector<Exponent> monomials_up_to(const VariableFrame& frame, unsigned d);

std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(const std::string& text, const VariableFrame& frame);
/// Infers the frame from the variable names; rejects mixed frames.
Polynomial parse_polynomial(const std::string& text);

/// Linear differential operator sum_alpha c_alpha(x) d^alpha with
/// polynomial coefficients.
class DiffOperator {
public:
    using Terms = std::map<Exponent, Polynomial>;

    DiffOperator() : DiffOperator(VariableFrame{}) {}
    explicit DiffOperator(const VariableFrame& frame) : frame_(frame) {}

    static DiffOperator identity(const VariableFrame& frame);
    static DiffOperator partial(const VariableFrame& frame, std::size_t v, const Polynomial& coeff);
    /// Constant-coefficient operator whose symbol is `symbol` (variables of
    /// the symbol stand for the partial derivatives).
    static DiffOperator from_symbol(const Polynomial& symbol);

    const VariableFrame& frame() const { return frame_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant_coefficient() const;
    /// Smallest derivative order among the terms.
    unsigned min_order() const;
    unsigned max_order() const;

    void add_term(const Exponent& alpha, const Polynomial& coeff);

    Polynomial apply(const Polynomial& f) const;
    /// (*this) o other.
    DiffOperator compose(const DiffOperator& other) const;
    /// D* g = conj(D(conj g)).
    DiffOperator conj() const;
    Polynomial symbol() const;
    /// Evaluates the coefficients at x, giving a constant-coefficient
    /// operator with the same action at x.
    DiffOperator frozen_at(const Point& x) const;
    DiffOperator in_frame(VariableFrame::Kind kind) const;

    DiffOperator scaled(const Series& c) const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    friend bool operator==(const DiffOperator& a, const DiffOperator& b);

private:
    VariableFrame frame_;
    Terms terms_;
};

std::string to_string(const DiffOperator& d);

}  // namespace stardef

#endif
