#ifndef STARDEF_POSITIVITY_BRIDGE_HPP
#define STARDEF_POSITIVITY_BRIDGE_HPP

// Strong positivity certificates and the replay of "positive deformations
// have sufficiently many positive functionals" for finite algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stardef/deform.hpp"
#include "stardef/functionals.hpp"
#include "stardef/random.hpp"

namespace stardef {

/// For derivation exponentials: the sum-of-squares identity for
/// mu_r(conj f, f) is checked symbolically on the audit grid, giving
/// CertifiedPositive. Otherwise delta_x(conj f * f) is evaluated at the
/// origin and at seeded rational points; a negative series is a Violation.
PositivityReport strong_positivity_certify(const StarProduct& p, unsigned degree_bound, std::size_t n,
                                           std::size_t trials, std::uint64_t seed);

struct FinitePositivityReport {
    PositivityReport::Verdict verdict = PositivityReport::Verdict::NoViolationFound;
    std::string method;
    std::size_t cases = 0;
    std::optional<VectorQI> witness;  // element A
    std::optional<VectorQI> vector;   // vector state v
    std::optional<Series> value;      // <v, (A* * A) v>
    /// Orders r where mu_r(A*, A) failed the PSD test on some sampled A.
    std::vector<std::size_t> hypothesis_failures;
};

/// Strong positivity of a Hermitian deformation of M_n. Samples A over the
/// basis, pair sums, complex combinations and seeded random elements, and
/// tests vector states for <v, (A* * A) v> < 0. All mu_r = 0 is certified.
FinitePositivityReport strong_positivity_certify(const DeformationCandidate& c, std::size_t trials, std::uint64_t seed);

/// omega = sum l^r omega_r on a finite algebra.
struct DeformedFiniteFunctional {
    std::vector<FiniteFunctional> grades;
    /// Value on A = sum l^r A_r, truncated at n.
    Series operator()(const std::vector<VectorQI>& a, std::size_t n) const;
};

/// (A* * A) as a series of elements up to l^R.
std::vector<VectorQI> star_square(const DeformationCandidate& c, const VectorQI& a);

struct FunctionalPolicy {
    enum class Kind { Identity, Pullback };
    Kind kind = Kind::Identity;
    /// T_1..T_R when c = T o mu_0 o (T^-1 (x) T^-1).
    std::vector<Cochain> t;

    static FunctionalPolicy identity() { return {}; }
    static FunctionalPolicy pullback(std::vector<Cochain> t) { return {Kind::Pullback, std::move(t)}; }
    /// omega_0 o T^-1.
    DeformedFiniteFunctional deform(const FiniteFunctional& omega0, std::size_t order, Eigen::Index d) const;
};

struct ManyPositiveReport {
    bool pass = true;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::string failure;
};

/// For one Hermitian A = sum l^r A_r != 0: separate the lowest nonzero A_r0
/// by a vector state, deform it by the policy, check omega(A) != 0 and that
/// omega stays positive on sampled B* * B. Throws on A = 0.
bool separate_deformed(const DeformationCandidate& c, const FunctionalPolicy& policy, const std::vector<VectorQI>& a,
                       std::uint64_t seed, std::string* failure = nullptr);

/// Runs separate_deformed on `trials` seeded random nonzero Hermitian A.
ManyPositiveReport many_positive_check(const DeformationCandidate& c, const FunctionalPolicy& policy,
                                       std::size_t trials, std::uint64_t seed);

/// Seeded random Hermitian element of M_n.
VectorQI random_hermitian(const FiniteStarAlgebra& a, Rng& rng);

}  // namespace stardef

#endif
