#ifndef STARDEF_FUNCTIONALS_HPP
#define STARDEF_FUNCTIONALS_HPP

// Linear functionals on polynomial observables: finite sums of weighted
// point evaluations after constant-coefficient differential operators, their
// l-deformations, and positivity audits against star products.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stardef/star.hpp"

namespace stardef {

/// z = q + i p on points.
Point point_to_frame(const Point& x, const VariableFrame& from, VariableFrame::Kind kind);

struct FunctionalTerm {
    Point point;
    DiffOperator op;
    QI weight;
};

/// f -> sum weight * (op f)(point).
class ClassicalFunctional {
public:
    explicit ClassicalFunctional(const VariableFrame& frame) : frame_(frame) {}

    const VariableFrame& frame() const { return frame_; }
    const std::vector<FunctionalTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Point& x, const DiffOperator& op, const QI& weight);
    Series operator()(const Polynomial& f) const;

    /// Every term is an evaluation (op = id) with real weight >= 0.
    bool is_nonnegative_point_mass() const;

    ClassicalFunctional in_frame(VariableFrame::Kind kind) const;

private:
    VariableFrame frame_;
    std::vector<FunctionalTerm> terms_;
};

ClassicalFunctional delta_at(const VariableFrame& frame, const Point& x);
/// Positive discrete measure; rejects negative or non-real weights.
ClassicalFunctional discrete_measure(const VariableFrame& frame, const std::vector<Point>& points,
                                     const std::vector<QI>& weights);

/// omega = sum_r l^r omega_r. When `derivative_graded` is set, omega_r vanishes
/// on polynomials of degree < r for every r (also past the stored order), so
/// evaluations on exact inputs of low degree are exact.
class DeformedFunctional {
public:
    DeformedFunctional(std::vector<ClassicalFunctional> grades, bool derivative_graded = false);
    static DeformedFunctional classical(const ClassicalFunctional& omega0);

    const VariableFrame& frame() const { return grades_.front().frame(); }
    std::size_t order() const { return grades_.size() - 1; }
    const ClassicalFunctional& grade(std::size_t r) const { return grades_.at(r); }
    const std::vector<ClassicalFunctional>& grades() const { return grades_; }
    bool derivative_graded() const { return derivative_graded_; }
    /// Every grade past the stored order is zero.
    bool complete() const { return complete_; }

private:
    std::vector<ClassicalFunctional> grades_;
    bool derivative_graded_;
    bool complete_ = false;
};

/// sum_{r+s<=N} l^(r+s) omega_r(f_s).
Series func_eval(const DeformedFunctional& omega, const Polynomial& f, std::size_t n);

/// omega_r = omega_0 o T_r. T must have constant coefficients.
DeformedFunctional deform_via_T(const ClassicalFunctional& omega0, const EquivalenceTransform& t);

class PartitionError : public std::invalid_argument {
public:
    PartitionError(const Polynomial& residual);
    /// sum conj(chi) chi - 1.
    const Polynomial& residual() const { return residual_; }

private:
    Polynomial residual_;
};

struct Chart {
    Polynomial chi;
    EquivalenceTransform t;
};

/// f -> sum_a omega_0(T_a(conj(chi_a) * f * chi_a)) up to l^N.
DeformedFunctional partition_deform(const ClassicalFunctional& omega0, const std::vector<Chart>& charts,
                                    const StarProduct& p, std::size_t n);

struct PositivityReport {
    enum class Verdict { CertifiedPositive, NoViolationFound, Violation };

    Verdict verdict = Verdict::NoViolationFound;
    std::string method;
    unsigned degree_bound = 0;
    std::size_t order = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::optional<Polynomial> witness;
    std::optional<Series> value;
    /// Evaluation point, for refutations by a point mass.
    std::optional<Point> point;
    std::string certificate;
};

std::string to_string(PositivityReport::Verdict v);

/// The audit grid: monomials of degree <= d, then m_a + m_b, then m_a + i m_b
/// (a < b), then `trials` seeded random polynomials.
std::vector<Polynomial> audit_grid(const VariableFrame& frame, unsigned degree_bound, std::size_t trials,
                                   std::uint64_t seed);

/// Audits omega(conj(f) * f) >= 0 on the grid. Returns the first violation;
/// otherwise CertifiedPositive when P is a derivation exponential and omega a
/// nonnegative point mass, else NoViolationFound.
PositivityReport positivity_audit(const DeformedFunctional& omega, const StarProduct& p, unsigned degree_bound,
                                  std::size_t n, std::size_t trials, std::uint64_t seed);

struct CauchySchwarzReport {
    bool skipped = false;
    std::string reason;
    bool symmetric = false;   // omega(A* B) = conj(omega(B* A)) up to l^N
    Series difference;        // omega(A*A) omega(B*B) - |omega(A*B)|^2
    Sign sign;
    bool pass = false;
};

CauchySchwarzReport cauchy_schwarz_check(const DeformedFunctional& omega, const StarProduct& p, const Polynomial& a,
                                         const Polynomial& b, std::size_t n,
                                         const PositivityReport* prior = nullptr);

}  // namespace stardef

#endif
