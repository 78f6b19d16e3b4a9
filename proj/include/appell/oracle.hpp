#ifndef APPELL_ORACLE_HPP
#define APPELL_ORACLE_HPP

#include <cstddef>
#include <functional>

#include "appell/f2.hpp"
#include "appell/types.hpp"

namespace appell {

struct QuadratureResult {
    double value;
    double abs_error_estimate;
    std::size_t evaluations;
    bool converged;
};

// Hints for the half-line integrator.  decay_rate is the asymptotic
// exponential decay rate of the integrand (used to scale the change of
// variables on the tail); split_point separates the adaptively subdivided
// finite part from the transformed tail (0 selects it from decay_rate);
// abs_scale enters the convergence test |delta| <= tol * max(|I|, abs_scale)
// so that integrals that cancel to ~0 can still converge on an absolute scale.
struct QuadratureOptions {
    double decay_rate = 1.0;
    double split_point = 0.0;
    double abs_scale = 0.0;
    std::size_t max_evaluations = 10000000;
};

// Adaptive integration of f over (0, infinity): a 15-point nested rule with
// worst-interval-first bisection on (0, T], plus the substitution
// t = T - ln(v)/decay_rate mapping [T, infinity) to (0, 1].  Effort is doubled
// until two successive refinements agree within tol.
QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        double tol,
                                        const QuadratureOptions& opt = {});

// Slow reference summation of the F2 double series over a growing rectangle
// in compensated arithmetic, stopping once a geometric bound on the omitted
// terms falls below 10^-target_digits relative to the partial sum.  Requires
// |x| + |y| <= 0.95 unless the series terminates.  Shares no code with the
// fast evaluation paths.
double f2_bruteforce(const F2Params& p, int target_digits);

}  // namespace appell

#endif
