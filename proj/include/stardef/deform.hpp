#ifndef STARDEF_DEFORM_HPP
#define STARDEF_DEFORM_HPP

// Order-by-order Hermitian deformations mu_0 + sum l^r mu_r of a finite
// *-algebra.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "stardef/hochschild.hpp"

namespace stardef {

struct DeformationCandidate {
    FiniteStarAlgebra algebra;
    /// mu_1, ..., mu_R.
    std::vector<Cochain> terms;

    std::size_t order() const { return terms.size(); }
    /// mu_s for 0 <= s <= order.
    Cochain mu(std::size_t s) const { return s == 0 ? Cochain::product(algebra) : terms.at(s - 1); }
    static DeformationCandidate trivial(const FiniteStarAlgebra& a, std::size_t order);
};

/// phi(x, y) for a 2-cochain.
VectorQI apply2(const FiniteStarAlgebra& a, const Cochain& phi, const VectorQI& x, const VectorQI& y);

/// delta mu_r = 1/2 sum_{s=1}^{r-1} [mu_s, mu_(r-s)].
Cochain obstruction_rhs(const DeformationCandidate& c, std::size_t r);

struct RealityReport {
    bool hypothesis = true;      // mu_1 .. mu_(r-1) Hermitian
    bool antihermitian = true;   // rhs* = -rhs
    std::vector<std::size_t> non_hermitian_orders;
    bool pass() const { return hypothesis && antihermitian; }
};
RealityReport rhs_reality_check(const DeformationCandidate& c, std::size_t r);

struct ObstructionClass {
    std::size_t order = 0;
    Cochain rhs;
    bool cocycle = false;  // delta rhs = 0
};

/// Kernel ambiguity policy: a cocycle added at a given order; orders without
/// a seed get the particular solution with all free coordinates zero.
struct Chooser {
    std::map<std::size_t, Cochain> seeds;
};

struct ProjectionResult {
    Cochain projected;
    bool precondition = false;  // delta mu = rhs and rhs* = -rhs
    bool solves = false;        // delta projected = rhs
    bool hermitian = false;
    bool ok() const { return precondition && solves && hermitian; }
};

ProjectionResult hermitian_project(const FiniteStarAlgebra& a, const Cochain& mu, const Cochain& rhs);

using SolveResult = std::variant<Cochain, ObstructionClass>;

/// Solves delta mu_r = rhs exactly and returns the Hermitian part of the
/// chosen solution, or the obstruction when the system is inconsistent.
SolveResult solve_order(const DeformationCandidate& c, std::size_t r, const Chooser& chooser = {});

using DeformResult = std::variant<DeformationCandidate, ObstructionClass>;
DeformResult deform_up_to(const FiniteStarAlgebra& a, std::size_t order, const Chooser& chooser = {});

struct VerifyReport {
    bool associative = true;
    bool hermitian = true;
    std::size_t failing_order = 0;
    std::vector<std::size_t> witness;
    bool pass() const { return associative && hermitian; }
};

/// Associativity of mu_0 + sum l^s mu_s up to l^R on all basis triples and
/// Hermiticity of every mu_s.
VerifyReport candidate_verify(const DeformationCandidate& c);

/// T = id + sum l^s T_s as d x d matrices; T_s must be Hermitian 1-cochains.
/// Returns T o mu o (T^-1 (x) T^-1), truncated at the candidate's order.
DeformationCandidate equivalence_apply(const std::vector<Cochain>& t, const DeformationCandidate& c);

/// S_0 = I, S_r = -sum_{s=1}^r T_s S_(r-s).
std::vector<MatrixQI> inverse_series(const std::vector<Cochain>& t, std::size_t order, Eigen::Index d);

}  // namespace stardef

#endif
