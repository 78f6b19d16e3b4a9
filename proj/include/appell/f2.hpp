#ifndef APPELL_F2_HPP
#define APPELL_F2_HPP

#include <optional>
#include <string>

#include "appell/special.hpp"
#include "appell/types.hpp"

namespace appell {

// Parameters of the double hypergeometric series
//   F2(d; a, a'; b, b'; x, y)
//     = sum_{m,n} (d)_{m+n} (a)_m (a')_n / ((b)_m (b')_n m! n!) x^m y^n,
// absolutely convergent for |x| + |y| < 1.
struct F2Params {
    double d;
    double a;
    double a_prime;
    double b;
    double b_prime;
    double x;
    double y;
};

// Parameters of the double series with a shared denominator coupling
//   F1(a; b, b'; c; x, y)
//     = sum_{m,n} (a)_{m+n} (b)_m (b')_n / ((c)_{m+n} m! n!) x^m y^n,
// absolutely convergent for |x| < 1 and |y| < 1.
struct F1Params {
    double a;
    double b;
    double b_prime;
    double c;
    double x;
    double y;
};

// Parameter pattern handled by the finite re-expansions: the first parameter
// and the denominators are tied by integer offsets s and p, and the arguments
// are ratios k/h and k'/h.
struct ContinuationParams {
    double c;
    long long s;
    long long p;
    double a;
    double a_prime;
    double k;
    double k_prime;
    double h;
};

// The two printed shapes of each re-expansion: an outer sum over values of the
// two-variable F1 series, or a fully nested double sum over 2F1 values.
enum class ContinuationForm { f1_form, hyp2f1_form };

// Evaluation route for the equal-parameter re-expansion: 'automatic' picks the
// antisymmetric-argument 4F3 closed form when k' == -k, the general single sum
// over 2F1 values otherwise.
enum class EqualParamForm { automatic, general_sum, four_f3 };

// Direct diagonal-order summation of the F2 double series.
EvaluationResult f2_series(const F2Params& p, double tol = default_tolerance);

// Direct diagonal-order summation of the F1 double series.
EvaluationResult f1_series(const F1Params& p, double tol = default_tolerance);

// Closed finite-sum evaluation of F1(a+1, s+1, t+1; a+d+2; x, y) for
// nonnegative integers a, s, t, d, valid for |x| < 1, |y| < 1, x != y and
// x, y != 0.  Inner sums skip the one index where the summand denominator
// vanishes; that contribution appears instead as a logarithmic term.  The
// sum carries negative powers of x - y, so accuracy degrades as the two
// arguments approach each other; prefer the direct series in that regime.
EvaluationResult f1_finite_sum(long long a, long long s, long long t,
                               long long d, double x, double y);

// Pattern-matched closed-form and lower-order reductions of F2.  Returns
// empty when the parameter tuple fits none of the recognized patterns.
std::optional<EvaluationResult> f2_reduce(const F2Params& p,
                                          double tol = default_tolerance);

// Re-expansion of F2(c+s; a, a'; c, c-p; k/h, k'/h) for integers s, p >= 0 as
// a finite sum of F1 values (f1_form) or of 2F1 values (hyp2f1_form); valid
// beyond |x|+|y| < 1.
EvaluationResult f2_continuation_lemma6(const ContinuationParams& cp,
                                        ContinuationForm form,
                                        double tol = default_tolerance);

// Re-expansion of F2(c+s; a, a'; c, c+p; k/h, k'/h) for integers s >= p >= 0.
EvaluationResult f2_continuation_lemma8(const ContinuationParams& cp,
                                        ContinuationForm form,
                                        double tol = default_tolerance);

// Single-sum evaluation of the equal-parameter case F2(d; a, a; c, c;
// k/h, k'/h), requiring |k| + |k'| < |h|.
EvaluationResult f2_equal_params_lemma9(double d, double a, double c, double k,
                                        double k_prime, double h,
                                        double tol = default_tolerance,
                                        EqualParamForm form =
                                            EqualParamForm::automatic);

// Identifiers of the seven three-term contiguous relations checked by
// f2_recurrence_residual: R3.17 is the generic relation in the first numerator
// parameter; R3.18/R3.19 restrict its first parameter to b' + s (s >= 1) and
// b' + 1; R3.20 restricts to b' = b, d = b + 1 with the right side evaluated
// through the product-of-binomials closed form; R3.21, R3.22 and R3.23 are the
// denominator-shifting relations.
enum class RecurrenceId { r17, r18, r19, r20, r21, r22, r23 };

const char* recurrence_name(RecurrenceId id);
RecurrenceId recurrence_from_name(const std::string& name);

// Evaluates both sides of the chosen relation independently and reports the
// residual.  The F2Params supply the free parameters; relations with
// constrained parameters (R3.18-R3.20) check the constraint first.
IdentityReport f2_recurrence_residual(RecurrenceId id, const F2Params& p,
                                      double tol = default_tolerance);

// Strategy dispatcher: reductions, then direct series deep inside the
// convergence region, then the terminating double sum, then the finite
// re-expansions when the parameter pattern allows, then direct series as a
// last resort anywhere inside |x| + |y| < 1.
EvaluationResult f2_eval(const F2Params& p, double tol = default_tolerance);

// Residual of the product expansion
//   1F1(a;c;x) 1F1(a;c;y) = sum_r (a)_r (c-a)_r / ((c)_r (c)_{2r} r!)
//                           (-xy)^r 1F1(a+r; c+2r; x+y).
IdentityReport product_expansion_residual(double a, double c, double x,
                                          double y,
                                          double tol = default_tolerance);

// Residual of the antisymmetric-argument product identity
//   1F1(a;c;x) 1F1(a;c;-x) = 2F3(a, c-a; c, c/2, (c+1)/2; x^2/4).
IdentityReport antisymmetric_product_residual(double a, double c, double x,
                                              double tol = default_tolerance);

}  // namespace appell

#endif
