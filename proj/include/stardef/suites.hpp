#ifndef STARDEF_SUITES_HPP
#define STARDEF_SUITES_HPP

// Seeded property suites shared by the command line and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "stardef/hochschild.hpp"
#include "stardef/random.hpp"

namespace stardef {

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok) failures.push_back(what);
    }
};

/// Random cochain with about a third of the entries nonzero.
Cochain random_cochain(const FiniteStarAlgebra& a, std::size_t arity, Rng& rng);

/// Star of the Gerstenhaber product, of mu_0 and of delta; delta^2 = 0; the
/// parity of delta on Hermitian cochains. Arities <= 3.
SuiteReport hochschild_sign_suite(const FiniteStarAlgebra& a, std::size_t trials, std::uint64_t seed);

/// Positive cone closure, trichotomy, conj(z) z >= 0, truncation consistency.
SuiteReport ordered_ring_suite(std::size_t trials, std::uint64_t seed);

/// The characterization of positive functionals on Grassmann(n) against the
/// Gram-matrix route.
SuiteReport grassmann_cone_suite(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace stardef

#endif
