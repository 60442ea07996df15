#ifndef STARDEF_FINALG_HPP
#define STARDEF_FINALG_HPP

// Finite-dimensional *-algebras over Q(i) given by structure constants.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stardef/linalg.hpp"

namespace stardef {

class AxiomError : public std::invalid_argument {
public:
    AxiomError(std::string axiom, std::vector<std::size_t> witness);
    const std::string& axiom() const { return axiom_; }
    /// Basis indices on which the axiom fails.
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<std::size_t> witness_;
};

struct FiniteStarAlgebra {
    enum class Kind { Matrix, Grassmann, Dual, Custom };

    Kind kind = Kind::Custom;
    std::size_t param = 0;  // n for matrix and Grassmann algebras
    std::string name;
    std::vector<std::string> labels;
    /// d x d^2; column i*d + j holds the coordinates of e_i e_j.
    MatrixQI mu0;
    /// e_i* = sum_k J(k, i) e_k, extended conjugate-linearly.
    MatrixQI involution;
    std::optional<VectorQI> unit;

    std::size_t dim() const { return labels.size(); }
    Eigen::Index d() const { return static_cast<Eigen::Index>(labels.size()); }
};

/// Validates associativity, the involution axioms and the unit; throws
/// AxiomError with the first failing basis tuple.
FiniteStarAlgebra custom_algebra(std::string name, std::vector<std::string> labels, MatrixQI mu0, MatrixQI involution,
                                 std::optional<VectorQI> unit = std::nullopt);
/// Matrix units E_ij at index i*n + j.
FiniteStarAlgebra matrix_algebra(std::size_t n);
/// Wedge monomials e_S indexed by the bitmask of S, with e_i* = e_i.
FiniteStarAlgebra grassmann_algebra(std::size_t n);
/// Q(i)[x]/(x^2) with x* = x.
FiniteStarAlgebra dual_numbers();

VectorQI basis_vector(const FiniteStarAlgebra& a, std::size_t i);
VectorQI alg_mul(const FiniteStarAlgebra& a, const VectorQI& x, const VectorQI& y);
VectorQI alg_star(const FiniteStarAlgebra& a, const VectorQI& x);
bool is_hermitian(const FiniteStarAlgebra& a, const VectorQI& x);

/// Matrix algebra element as an n x n matrix and back.
MatrixQI as_matrix(const FiniteStarAlgebra& a, const VectorQI& x);
VectorQI from_matrix(const FiniteStarAlgebra& a, const MatrixQI& m);

struct FiniteFunctional {
    VectorQI covector;
    QI operator()(const VectorQI& x) const;
};

/// A -> tr(rho A) on M_n.
FiniteFunctional trace_functional(const FiniteStarAlgebra& a, const MatrixQI& rho);
/// A -> <v, A v> on M_n.
FiniteFunctional vector_state(const FiniteStarAlgebra& a, const VectorQI& v);

struct PsdCertificate {
    bool positive = false;
    /// Coefficients a_k of det(t I - M), lowest degree first.
    std::vector<Rational> char_poly;
    /// Index k with (-1)^(d-k) a_k < 0, when not positive.
    std::optional<std::size_t> failing_index;
};

class NotHermitian : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// PSD test for a Hermitian matrix by characteristic-polynomial signs.
PsdCertificate psd_certificate(const MatrixQI& m);
PsdCertificate matrix_functional_positive(const MatrixQI& rho);
PsdCertificate element_positive_matrix(const FiniteStarAlgebra& a, const VectorQI& x);

/// omega(1) >= 0 and omega vanishes on every wedge monomial of degree >= 1.
bool grassmann_functional_positive(const FiniteStarAlgebra& a, const FiniteFunctional& omega);
/// Brute-force route: omega(x* x) = v^H G v with G_ST = omega(e_S* e_T);
/// positive iff G is Hermitian and PSD.
bool grassmann_functional_positive_gram(const FiniteStarAlgebra& a, const FiniteFunctional& omega);

struct SeparatingFunctional {
    VectorQI v;
    FiniteFunctional omega;
    QI value;
};

/// Vector state with <v, H v> != 0, searched over e_i, e_i + e_j, e_i + i e_j.
SeparatingFunctional find_separating_functional(const FiniteStarAlgebra& a, const VectorQI& h);

}  // namespace stardef

#endif
