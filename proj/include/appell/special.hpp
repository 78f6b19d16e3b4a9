#ifndef APPELL_SPECIAL_HPP
#define APPELL_SPECIAL_HPP

#include <vector>

#include "appell/types.hpp"

namespace appell {

inline constexpr double default_tolerance = 1e-12;
inline constexpr std::size_t max_series_terms = 100000;

// Tolerance used when matching a real parameter against an integer pattern
// (terminating upper parameters, denominator poles, reduction patterns).
inline constexpr double integer_match_tolerance = 1e-10;

bool is_nonpositive_integer(double x, double tol = integer_match_tolerance);
bool is_integer(double x, double tol = integer_match_tolerance);

// log |Gamma(x)| together with the sign of Gamma(x).
struct LnGamma {
    double log_abs;
    int sign;  // +1 or -1; throws before producing sign 0 (pole)
};

LnGamma ln_gamma(double x);
double gamma_fn(double x);  // Gamma(x); overflows to +-inf beyond ~171

// (x)_n = x (x+1) ... (x+n-1); exact product for moderate n.
double pochhammer(double x, unsigned n);
// log |(x)_n| with sign; safe for large n via the Gamma ratio.
LnGamma ln_pochhammer(double x, unsigned n);

// base^expo for real exponents, allowing negative bases only for integer
// exponents. Throws ErrorKind::singular for a negative base with a non-integer
// exponent (branch cut) and for 0^negative.
double real_pow(double base, double expo);

// Generalized hypergeometric series pFq.
struct PfqParams {
    std::vector<double> upper;
    std::vector<double> lower;
    double x = 0.0;
};

EvaluationResult pfq(const PfqParams& p, double tol = default_tolerance);

// Confluent 1F1(a; b; x). Terminating a: finite sum, any x. Negative x is
// evaluated through the Kummer transform e^x 1F1(b-a; b; -x) to avoid the
// catastrophic cancellation of the alternating series.
EvaluationResult hyp1f1(double a, double b, double x, double tol = default_tolerance);

// Gauss 2F1(a, b; c; x). Terminating: finite sum, any x. x in [0,1): direct
// series; x < 0: Pfaff transform into (0,1); x = 1: Gauss ratio (needs
// c - a - b > 0). Non-terminating |x| > 1 raises ErrorKind::divergence.
EvaluationResult hyp2f1(double a, double b, double c, double x,
                        double tol = default_tolerance);

}  // namespace appell

#endif
