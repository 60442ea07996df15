#ifndef STARDEF_HOCHSCHILD_HPP
#define STARDEF_HOCHSCHILD_HPP

// Hochschild cochains of a finite *-algebra, the Gerstenhaber product and
// bracket, the differential, and exact (Hermitian) cohomology.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stardef/finalg.hpp"

namespace stardef {

/// An n-linear map A^n -> A, stored as a d x d^n matrix. Column
/// sum_k i_k d^(n-k) holds phi(e_i1, ..., e_in).
struct Cochain {
    std::size_t arity = 0;
    MatrixQI values;

    static Cochain zero(const FiniteStarAlgebra& a, std::size_t n);
    /// The cochain with a single nonzero value 1 at flat index k.
    static Cochain basis(const FiniteStarAlgebra& a, std::size_t n, Eigen::Index k);
    /// mu_0 as a 2-cochain; the identity as a 1-cochain; an element as a 0-cochain.
    static Cochain product(const FiniteStarAlgebra& a);
    static Cochain identity(const FiniteStarAlgebra& a);
    static Cochain element(const VectorQI& x);

    /// Number of entries d * d^n.
    Eigen::Index size() const { return values.size(); }
    /// Column-major flattening: entry (k, c) at c*d + k.
    VectorQI flat() const;
    static Cochain from_flat(const FiniteStarAlgebra& a, std::size_t n, const VectorQI& v);
    VectorQI at(const std::vector<std::size_t>& tuple) const;
    bool is_zero() const { return is_zero_matrix<QI>(values); }

    Cochain scaled(const QI& c) const;
    friend Cochain operator+(const Cochain& x, const Cochain& y);
    friend Cochain operator-(const Cochain& x, const Cochain& y);
    friend bool operator==(const Cochain& x, const Cochain& y);
};

std::size_t power(std::size_t d, std::size_t n);
std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t d);
std::vector<std::size_t> tuple_of(std::size_t index, std::size_t d, std::size_t n);

/// phi*(a_1, ..., a_n) = phi(a_n*, ..., a_1*)*.
Cochain cochain_star(const FiniteStarAlgebra& a, const Cochain& phi);
bool is_hermitian(const FiniteStarAlgebra& a, const Cochain& phi);
bool is_antihermitian(const FiniteStarAlgebra& a, const Cochain& phi);

/// (phi o psi)(a_1..) = sum_i (-1)^(i(m-1)) phi(a_1..a_i, psi(a_i+1..a_i+m), ..).
Cochain gerstenhaber_product(const FiniteStarAlgebra& a, const Cochain& phi, const Cochain& psi);
/// [phi, psi] = phi o psi - (-1)^((n-1)(m-1)) psi o phi.
Cochain gerstenhaber_bracket(const FiniteStarAlgebra& a, const Cochain& phi, const Cochain& psi);
/// delta phi = (-1)^(n-1) [mu_0, phi].
Cochain hochschild_delta(const FiniteStarAlgebra& a, const Cochain& phi);

struct HermitianParts {
    Cochain hermitian;      // (phi + phi*) / 2
    Cochain antihermitian;  // (phi - phi*) / 2i
};
HermitianParts hermitian_decompose(const FiniteStarAlgebra& a, const Cochain& phi);

class SizeCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr std::size_t default_size_cap = 4096;

/// Matrix of delta: C^n -> C^(n+1) in the flattened coordinates.
MatrixQI delta_matrix(const FiniteStarAlgebra& a, std::size_t n, std::size_t cap = default_size_cap);

struct CohomologyReport {
    std::size_t degree = 0;
    // Over Q(i).
    std::size_t dim_z = 0, dim_b = 0, dim_h = 0;
    std::vector<Cochain> representatives;
    // Hermitian complex over Q.
    bool hermitian = false;
    std::size_t dim_z_h = 0, dim_b_h = 0, dim_h_h = 0;
    /// dim_Q of im(delta) intersected with the Hermitian cochains.
    std::size_t dim_b_alt = 0;
    std::vector<Cochain> hermitian_representatives;
};

CohomologyReport cohomology_dims(const FiniteStarAlgebra& a, std::size_t n, std::size_t cap = default_size_cap);
/// Also fills the Q(i) fields.
CohomologyReport hermitian_cohomology_dims(const FiniteStarAlgebra& a, std::size_t n,
                                           std::size_t cap = default_size_cap);

/// Real coordinates (re; im) of a Q(i) vector and back.
VectorQ realify(const VectorQI& v);
VectorQI complexify(const VectorQ& v);
/// The Q-linear map x -> m x on realified coordinates.
MatrixQ realify(const MatrixQI& m);
/// Q-basis (as columns of realified coordinates) of the Hermitian or
/// anti-Hermitian n-cochains.
MatrixQ hermitian_basis(const FiniteStarAlgebra& a, std::size_t n, bool anti = false);

}  // namespace stardef

#endif
