#ifndef CSS_GUARD_SIMPLEX_HH
#define CSS_GUARD_SIMPLEX_HH 1

#include <gmpxx.h>

#include <string>
#include <vector>

namespace css
{
    using Rational = mpq_class;

    /// Canonical "p/q" form; integers are still written with a denominator, as "p/1".
    auto rational_string(const Rational & r) -> std::string;
    /// Accepts "p/q" or a plain integer.
    auto parse_rational(const std::string & s) -> Rational;

    enum class Sense { le, ge, eq };

    struct LinearConstraint
    {
        std::vector<Rational> coeffs;
        Sense sense;
        Rational rhs;
    };

    /* Optimise objective . x over x >= 0 subject to the constraints. Every
     * coefficient vector has one entry per variable. */
    struct LinearProgram
    {
        int variables = 0;
        std::vector<Rational> objective;
        bool maximize = false;
        std::vector<LinearConstraint> constraints;
    };

    enum class LpStatus { optimal, infeasible, unbounded };

    struct LpSolution
    {
        LpStatus status = LpStatus::infeasible;
        std::vector<Rational> values;
        Rational objective;
    };

    /// Exact two-phase dense tableau simplex with Bland's rule.
    auto solve_lp(const LinearProgram & lp) -> LpSolution;

    /// Exact check that x >= 0 satisfies every constraint.
    auto lp_feasible(const LinearProgram & lp, const std::vector<Rational> & x) -> bool;
}

#endif
