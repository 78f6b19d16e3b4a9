#include "appell/special.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace appell {

const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::reduction: return "reduction";
        case Method::continuation: return "continuation";
        case Method::quadrature: return "quadrature";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

IdentityReport make_identity_report(std::string id, double lhs, double rhs,
                                    Method lhs_method, Method rhs_method) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::fabs(lhs - rhs);
    r.rel_residual = r.abs_residual /
                     std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
    r.lhs_method = lhs_method;
    r.rhs_method = rhs_method;
    return r;
}

bool is_integer(double x, double tol) {
    return std::fabs(x - std::round(x)) <= tol;
}

bool is_nonpositive_integer(double x, double tol) {
    return x <= tol && is_integer(x, tol);
}

LnGamma ln_gamma(double x) {
    if (is_nonpositive_integer(x, 1e-300) && x == std::round(x)) {
        throw Error(ErrorKind::parameter, "ln_gamma: pole at nonpositive integer");
    }
    LnGamma r;
    r.log_abs = std::lgamma(x);
    if (x > 0) {
        r.sign = 1;
    } else {
        // Gamma alternates sign between consecutive negative integers:
        // negative on (-1,0), positive on (-2,-1), ...
        long long k = static_cast<long long>(std::floor(-x));
        r.sign = (k % 2 == 0) ? -1 : 1;
    }
    return r;
}

double gamma_fn(double x) {
    LnGamma g = ln_gamma(x);
    return g.sign * std::exp(g.log_abs);
}

double pochhammer(double x, unsigned n) {
    double p = 1.0;
    for (unsigned i = 0; i < n; ++i) p *= x + i;
    return p;
}

LnGamma ln_pochhammer(double x, unsigned n) {
    LnGamma r{0.0, 1};
    if (n <= 64) {
        for (unsigned i = 0; i < n; ++i) {
            double f = x + i;
            if (f == 0.0) throw Error(ErrorKind::parameter, "ln_pochhammer: zero factor");
            if (f < 0) r.sign = -r.sign;
            r.log_abs += std::log(std::fabs(f));
        }
        return r;
    }
    LnGamma num = ln_gamma(x + n);
    LnGamma den = ln_gamma(x);
    r.log_abs = num.log_abs - den.log_abs;
    r.sign = num.sign * den.sign;
    return r;
}

double real_pow(double base, double expo) {
    if (base > 0) return std::pow(base, expo);
    if (base == 0.0) {
        if (expo > 0) return 0.0;
        if (expo == 0) return 1.0;
        throw Error(ErrorKind::singular, "real_pow: 0 raised to a negative power");
    }
    if (!is_integer(expo)) {
        throw Error(ErrorKind::singular,
                    "real_pow: negative base with non-integer exponent (branch cut)");
    }
    long long e = static_cast<long long>(std::llround(expo));
    double mag = std::pow(-base, expo);
    return (e % 2 != 0) ? -mag : mag;
}

namespace {

// Smallest termination order among nonpositive-integer upper parameters, or -1.
long long termination_order(const std::vector<double>& upper) {
    long long n = -1;
    for (double a : upper) {
        if (is_nonpositive_integer(a)) {
            long long cand = static_cast<long long>(std::llround(-a));
            if (n < 0 || cand < n) n = cand;
        }
    }
    return n;
}

std::string describe_params(const PfqParams& p) {
    std::ostringstream os;
    os << "pFq(";
    for (std::size_t i = 0; i < p.upper.size(); ++i)
        os << (i ? "," : "") << p.upper[i];
    os << ";";
    for (std::size_t i = 0; i < p.lower.size(); ++i)
        os << (i ? "," : "") << p.lower[i];
    os << ";" << p.x << ")";
    return os.str();
}

}  // namespace

EvaluationResult pfq(const PfqParams& p, double tol) {
    const long long nterm = termination_order(p.upper);

    // A nonpositive-integer lower parameter is a pole of the series unless a
    // terminating upper parameter stops the sum strictly before the pole index.
    for (double b : p.lower) {
        if (is_nonpositive_integer(b)) {
            long long pole = static_cast<long long>(std::llround(-b));
            if (nterm < 0 || pole < nterm) {
                throw Error(ErrorKind::parameter,
                            "pfq: lower parameter at or too close to a nonpositive "
                            "integer: " + describe_params(p));
            }
        }
    }

    if (nterm < 0) {  // non-terminating: convergence checks
        if (p.upper.size() > p.lower.size() + 1 && p.x != 0.0) {
            throw Error(ErrorKind::divergence,
                        "pfq: divergent series (p > q+1): " + describe_params(p));
        }
        if (p.upper.size() == p.lower.size() + 1) {
            if (std::fabs(p.x) > 1.0) {
                throw Error(ErrorKind::divergence,
                            "pfq: |x| > 1 outside the convergence disk: " +
                                describe_params(p));
            }
            if (std::fabs(p.x) == 1.0) {
                double s = 0.0;
                for (double b : p.lower) s += b;
                for (double a : p.upper) s -= a;
                double need = (p.x > 0) ? 0.0 : -1.0;
                if (s <= need) {
                    throw Error(ErrorKind::divergence,
                                "pfq: divergent at |x| = 1: " + describe_params(p));
                }
            }
        }
    }

    EvaluationResult res;
    double term = 1.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    std::size_t small_streak = 0;
    std::size_t k = 0;
    const std::size_t limit =
        (nterm >= 0) ? static_cast<std::size_t>(nterm) + 1 : max_series_terms;

    // For geometrically convergent series (p = q+1) the discarded tail is
    // roughly term * r/(1-r), so the small-term threshold is deflated
    // accordingly; faster-than-geometric series need no such margin.
    double stop_tol = tol;
    if (nterm < 0 && p.upper.size() == p.lower.size() + 1) {
        const double r = std::min(std::fabs(p.x), 0.99);
        if (r > 1.0 / 3.0) stop_tol = tol * (1.0 - r) / (2.0 * r);
    }

    for (; k < limit; ++k) {
        sum += term;
        abs_sum += std::fabs(term);
        if (nterm < 0) {
            if (std::fabs(term) <= stop_tol * std::max(std::fabs(sum), 1e-300)) {
                if (++small_streak >= 2 && k >= 1) { ++k; break; }
            } else {
                small_streak = 0;
            }
        }
        double num = 1.0, den = 1.0;
        for (double a : p.upper) num *= a + static_cast<double>(k);
        for (double b : p.lower) den *= b + static_cast<double>(k);
        if (num == 0.0) { ++k; break; }  // exact termination
        term *= num / den * p.x / static_cast<double>(k + 1);
    }

    if (nterm < 0 && k >= max_series_terms) {
        throw Error(ErrorKind::convergence,
                    "pfq: tolerance not reached within the term budget: " +
                        describe_params(p));
    }

    res.value = sum;
    res.terms_used = k;
    res.method = Method::series;
    double roundoff = abs_sum * std::numeric_limits<double>::epsilon();
    double tail_factor = 2.0;
    if (nterm < 0 && p.upper.size() == p.lower.size() + 1) {
        const double r = std::min(std::fabs(p.x), 0.99);
        tail_factor = std::max(2.0, 2.0 * r / (1.0 - r));
    }
    res.abs_error_estimate =
        (nterm >= 0) ? roundoff : tail_factor * std::fabs(term) + roundoff;
    return res;
}

EvaluationResult hyp1f1(double a, double b, double x, double tol) {
    const bool terminates = is_nonpositive_integer(a);
    if (x < 0 && !terminates) {
        // Kummer transform: 1F1(a;b;x) = e^x 1F1(b-a;b;-x). The direct series
        // alternates and loses all significance for x << 0.
        EvaluationResult r = pfq({{b - a}, {b}, -x}, tol);
        double ex = std::exp(x);
        r.value *= ex;
        r.abs_error_estimate = r.abs_error_estimate * ex +
                               std::fabs(r.value) * 4e-16;
        return r;
    }
    return pfq({{a}, {b}, x}, tol);
}

EvaluationResult hyp2f1(double a, double b, double c, double x, double tol) {
    const bool terminates =
        is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (terminates) {
        if (std::fabs(x - 1.0) <= 1e-14) {
            // Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.  The direct
            // alternating sum cancels its largest terms at x = 1 and loses
            // digits quickly with n; the product ratio is exact (including
            // the exact zero when c - b is a nonpositive integer > -n).
            long long na = is_nonpositive_integer(a)
                               ? std::llround(-a) : -1;
            long long nb = is_nonpositive_integer(b)
                               ? std::llround(-b) : -1;
            long long n;
            double other;
            if (na >= 0 && (nb < 0 || na <= nb)) {
                n = na;
                other = b;
            } else {
                n = nb;
                other = a;
            }
            const bool den_zero =
                is_nonpositive_integer(c) && std::llround(-c) < n;
            if (!den_zero) {
                EvaluationResult r;
                r.terms_used = static_cast<std::size_t>(n) + 1;
                r.method = Method::closed_form;
                const double co = c - other;
                if (is_nonpositive_integer(co) && std::llround(-co) < n) {
                    r.value = 0.0;
                    r.abs_error_estimate = 0.0;
                } else if (n <= 60) {
                    r.value = pochhammer(co, static_cast<unsigned>(n)) /
                              pochhammer(c, static_cast<unsigned>(n));
                    r.abs_error_estimate = std::fabs(r.value) * 4e-16 *
                                           static_cast<double>(n + 1);
                } else {
                    LnGamma num = ln_pochhammer(co, static_cast<unsigned>(n));
                    LnGamma den = ln_pochhammer(c, static_cast<unsigned>(n));
                    r.value = num.sign * den.sign *
                              std::exp(num.log_abs - den.log_abs);
                    r.abs_error_estimate = std::fabs(r.value) * 1e-13;
                }
                return r;
            }
        }
        return pfq({{a, b}, {c}, x}, tol);
    }
    if (is_nonpositive_integer(c)) {
        throw Error(ErrorKind::parameter,
                    "hyp2f1: lower parameter at a nonpositive integer");
    }
    if (std::fabs(x - 1.0) <= 1e-14) {
        // Gauss: 2F1(a,b;c;1) = G(c)G(c-a-b) / (G(c-a)G(c-b)) for c-a-b > 0.
        double s = c - a - b;
        if (s <= 0) {
            throw Error(ErrorKind::divergence,
                        "hyp2f1: divergent at x = 1 (needs c - a - b > 0)");
        }
        EvaluationResult r;
        r.method = Method::closed_form;
        r.terms_used = 1;
        if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) {
            r.value = 0.0;  // 1/Gamma at a pole
            r.abs_error_estimate = 0.0;
            return r;
        }
        LnGamma g1 = ln_gamma(c), g2 = ln_gamma(s), g3 = ln_gamma(c - a),
                g4 = ln_gamma(c - b);
        r.value = g1.sign * g2.sign * g3.sign * g4.sign *
                  std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
        r.abs_error_estimate = std::fabs(r.value) * 1e-14;
        return r;
    }
    if (std::fabs(x) > 1.0) {
        throw Error(ErrorKind::divergence,
                    "hyp2f1: |x| > 1 for a non-terminating series");
    }
    if (x < 0) {
        // Pfaff: 2F1(a,b;c;x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1)); the mapped
        // argument lies in (0, 1/2] so the series converges quickly.
        EvaluationResult r = pfq({{a, c - b}, {c}, x / (x - 1.0)}, tol);
        double pref = std::pow(1.0 - x, -a);
        r.value *= pref;
        r.abs_error_estimate *= pref;
        return r;
    }
    return pfq({{a, b}, {c}, x}, tol);
}

}  // namespace appell
