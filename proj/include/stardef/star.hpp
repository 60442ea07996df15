#ifndef STARDEF_STAR_HPP
#define STARDEF_STAR_HPP

// Star products mu = sum_r l^r mu_r given by bidifferential operators on
// polynomial observables, equivalence transformations T = id + sum l^r T_r,
// and bounded law checks (associativity, Hermiticity, equivalence).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stardef/poly.hpp"

namespace stardef {

/// f, g -> sum c(x) d^L f d^R g.
class BidiffOperator {
public:
    using Key = std::pair<Exponent, Exponent>;
    using Terms = std::map<Key, Polynomial>;

    BidiffOperator() : BidiffOperator(VariableFrame{}) {}
    explicit BidiffOperator(const VariableFrame& frame) : frame_(frame) {}

    /// The pointwise product mu_0.
    static BidiffOperator pointwise(const VariableFrame& frame);
    /// A (x) B followed by the pointwise product.
    static BidiffOperator tensor(const DiffOperator& left, const DiffOperator& right);
    /// D o mu_0, expanded by the Leibniz rule. D must have constant coefficients.
    static BidiffOperator after_product(const DiffOperator& d);

    const VariableFrame& frame() const { return frame_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant_coefficient() const;
    /// Smallest derivative order on the left (resp. right) factor.
    unsigned min_left_order() const;
    unsigned min_right_order() const;

    void add_term(const Exponent& left, const Exponent& right, const Polynomial& coeff);

    Polynomial apply(const Polynomial& f, const Polynomial& g) const;

    /// Composition of constant-coefficient operators (product of symbols).
    friend BidiffOperator operator*(const BidiffOperator& a, const BidiffOperator& b);
    friend BidiffOperator operator+(const BidiffOperator& a, const BidiffOperator& b);
    BidiffOperator scaled(const Series& c) const;
    friend bool operator==(const BidiffOperator& a, const BidiffOperator& b);

private:
    VariableFrame frame_;
    Terms terms_;
};

std::string to_string(const BidiffOperator& b);

/// Derivations D_1..D_m and a positive scale s for mu = mu_0 o exp(l s sum D_k (x) D_k*).
struct ExpDerivationData {
    std::vector<DiffOperator> derivations;
    Rational scale;
};

class StarProduct {
public:
    /// `graded` holds mu_0..mu_M; mu_0 must be the pointwise product.
    /// `derivative_graded` asserts that every term of mu_r, for all r
    /// (including those beyond M), differentiates each factor at least r
    /// times, so that mu_r(f, g) = 0 once r > min(deg f, deg g).
    StarProduct(const VariableFrame& frame, std::vector<BidiffOperator> graded, std::string name,
                bool derivative_graded = false, std::optional<ExpDerivationData> exp_data = std::nullopt);

    const VariableFrame& frame() const { return frame_; }
    /// Truncation order M of the stored expansion.
    std::size_t order() const { return graded_.size() - 1; }
    const BidiffOperator& mu(std::size_t r) const { return graded_.at(r); }
    const std::vector<BidiffOperator>& graded_terms() const { return graded_; }
    const std::string& name() const { return name_; }
    bool derivative_graded() const { return derivative_graded_; }
    const std::optional<ExpDerivationData>& exp_data() const { return exp_data_; }

private:
    VariableFrame frame_;
    std::vector<BidiffOperator> graded_;
    std::string name_;
    bool derivative_graded_;
    std::optional<ExpDerivationData> exp_data_;
};

/// mu_r = X^r / r! for a constant-coefficient bidifferential symbol X.
StarProduct exp_product_of_symbol(const BidiffOperator& x, std::size_t order, const std::string& name);

/// mu_0 o exp((i l / 2) sum_k (d_qk (x) d_pk - d_pk (x) d_qk)).
StarProduct make_weyl(std::size_t n, std::size_t order);
/// mu_0 o exp(2 l sum_k d_zk (x) d_zbk).
StarProduct make_wick(std::size_t n, std::size_t order);

class NonCommutingDerivations : public std::invalid_argument {
public:
    NonCommutingDerivations(std::size_t i, std::size_t j, bool with_conjugate, Polynomial witness, Polynomial value);
    std::size_t first() const { return i_; }
    std::size_t second() const { return j_; }
    /// True when the failing commutator is [D_i, D_j*].
    bool with_conjugate() const { return with_conjugate_; }
    /// Monomial on which the commutator does not vanish.
    const Polynomial& witness() const { return witness_; }
    const Polynomial& value() const { return value_; }

private:
    std::size_t i_, j_;
    bool with_conjugate_;
    Polynomial witness_, value_;
};

/// mu_0 o exp(l s sum_k D_k (x) D_k*). The derivations must be first order
/// without constant term; [D_i, D_j] = 0 = [D_i, D_j*] is checked on all
/// monomials up to `degree_bound`.
StarProduct make_exp_product(const VariableFrame& frame, const std::vector<DiffOperator>& derivations,
                             const Rational& scale, std::size_t order, unsigned degree_bound,
                             const std::string& name = "expderiv");

/// One sum-of-squares summand of mu_r(conj f (x) f) = sum weight * b * conj(b).
struct SquareTerm {
    Rational weight;
    Polynomial factor;
};

/// mu_r(conj f (x) f) written as a weighted sum of squares; requires exp data.
std::vector<SquareTerm> sum_of_squares(const StarProduct& p, const Polynomial& f, std::size_t r);
Polynomial sum_of_squares_value(const std::vector<SquareTerm>& terms, const VariableFrame& frame);

/// sum_{r<=N} l^r mu_r(f, g). The result is exact when the product is
/// derivative graded and the inputs are exact; otherwise it is truncated
/// at N.
Polynomial star_mul(const StarProduct& p, const Polynomial& f, const Polynomial& g, std::size_t n);

struct LawReport {
    std::string law;
    bool pass = true;
    unsigned degree_bound = 0;
    std::size_t order = 0;
    std::size_t cases = 0;
    std::vector<Polynomial> witness;
    std::string detail;
};

LawReport assoc_check(const StarProduct& p, unsigned degree_bound, std::size_t n);
LawReport hermitian_check(const StarProduct& p, unsigned degree_bound, std::size_t n);

class EquivalenceTransform {
public:
    EquivalenceTransform(const VariableFrame& frame, std::vector<DiffOperator> graded, std::string name,
                         bool derivative_graded = false);

    static EquivalenceTransform identity(const VariableFrame& frame, std::size_t order);

    const VariableFrame& frame() const { return frame_; }
    std::size_t order() const { return graded_.size() - 1; }
    const DiffOperator& term(std::size_t r) const { return graded_.at(r); }
    const std::vector<DiffOperator>& graded_terms() const { return graded_; }
    const std::string& name() const { return name_; }
    /// T_r has derivative order >= r for every r.
    bool derivative_graded() const { return derivative_graded_; }
    bool is_constant_coefficient() const;
    /// Commutes with conjugation: T_r* = T_r.
    bool is_real() const;

    EquivalenceTransform in_frame(VariableFrame::Kind kind) const;

private:
    VariableFrame frame_;
    std::vector<DiffOperator> graded_;
    std::string name_;
    bool derivative_graded_;
};

/// exp(l * scale * Laplacian), Laplacian = sum_k d_zk d_zbk (= 1/4 sum (d_qk^2 + d_pk^2)).
EquivalenceTransform make_T_laplace(const VariableFrame& frame, const Rational& scale, std::size_t order);
Polynomial transform_apply(const EquivalenceTransform& t, const Polynomial& f, std::size_t n);
/// Formal inverse, computed order by order.
EquivalenceTransform transform_invert(const EquivalenceTransform& t, std::size_t n);

/// Checks T(f *_P g) = (T f) *_Q (T g) up to l^N for monomials of degree
/// <= degree_bound in the frame of P. Frames are reconciled by frame_change.
LawReport check_equivalence(const EquivalenceTransform& t, const StarProduct& p, const StarProduct& q,
                            unsigned degree_bound, std::size_t n);

/// The product T o mu o (T^-1 (x) T^-1) for constant-coefficient P and T in
/// the same frame.
StarProduct transport_product(const StarProduct& p, const EquivalenceTransform& t, std::size_t order);

}  // namespace stardef

#endif
