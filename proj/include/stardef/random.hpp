#ifndef STARDEF_RANDOM_HPP
#define STARDEF_RANDOM_HPP

// Seeded generators for exact test data. Only std::mt19937_64 output is
// consumed, through modular reduction, so sequences are identical across
// standard library implementations.

#include <cstdint>
#include <random>

#include "stardef/poly.hpp"

namespace stardef {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return next() % 2 == 0; }

    /// num/den with |num| <= bound and 1 <= den <= bound.
    Rational rational(long bound = 3);
    Rational nonnegative_rational(long bound = 3);
    QI scalar(long bound = 3, bool complex = true);
    /// Polynomial with between 1 and max_terms terms of total degree <= degree.
    Polynomial polynomial(const VariableFrame& frame, unsigned degree, std::size_t max_terms = 5, bool complex = true);
    Point point(const VariableFrame& frame, long bound = 3);
    /// Exact series with order <= max_order and rational coefficients.
    RealSeries real_series(std::size_t max_order = 4, long bound = 3);

private:
    std::mt19937_64 engine_;
};

}  // namespace stardef

#endif
