#include "appell/f2.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <vector>

namespace appell {

namespace {

constexpr double tiny_floor = 1e-300;
constexpr std::size_t max_double_series_diagonals = 4000;

// Order of termination when v is a nonpositive integer (within the matching
// tolerance), else -1.
long long np_int_order(double v) {
    if (is_nonpositive_integer(v)) return std::llround(-v);
    return -1;
}

// One multiplicative update of a running series term.  A vanishing numerator
// factor ends that index direction (the term and all its successors are
// exactly zero); a vanishing denominator with a live numerator is a pole that
// the up-front parameter checks should have excluded.
double term_step(double prev, double num, double den, const char* where) {
    if (prev == 0.0 || num == 0.0) return 0.0;
    if (den == 0.0) {
        throw Error(ErrorKind::parameter,
                    std::string(where) +
                        ": denominator parameter reaches a nonpositive integer "
                        "inside the summation range");
    }
    return prev * num / den;
}

void check_denominator_param(double beta, long long max_index,
                             const char* name, const char* where) {
    if (!is_nonpositive_integer(beta)) return;
    long long pole = std::llround(-beta);
    // (beta)_i is zero for i > pole, so all indices up to max_index are safe
    // only when max_index <= pole.
    if (max_index < 0 || max_index > pole) {
        std::ostringstream os;
        os << where << ": denominator parameter " << name << " = " << beta
           << " is a nonpositive integer reached by the summation";
        throw Error(ErrorKind::parameter, os.str());
    }
}

std::string f2_describe(const F2Params& p) {
    std::ostringstream os;
    os << "F2(" << p.d << ";" << p.a << "," << p.a_prime << ";" << p.b << ","
       << p.b_prime << ";" << p.x << "," << p.y << ")";
    return os.str();
}

}  // namespace

EvaluationResult f2_series(const F2Params& p, double tol) {
    const long long na = np_int_order(p.a);        // bounds the m index
    const long long nap = np_int_order(p.a_prime); // bounds the n index
    const long long nd = np_int_order(p.d);        // bounds m + n
    const bool m_bounded = na >= 0 || nd >= 0;
    const bool n_bounded = nap >= 0 || nd >= 0;
    const bool terminating = m_bounded && n_bounded;

    if (!terminating) {
        bool ok = m_bounded   ? std::fabs(p.y) < 1.0
                  : n_bounded ? std::fabs(p.x) < 1.0
                              : std::fabs(p.x) + std::fabs(p.y) < 1.0;
        if (!ok) {
            throw Error(ErrorKind::divergence,
                        "f2_series: outside the convergence region "
                        "|x| + |y| < 1: " + f2_describe(p));
        }
    }

    long long m_max = -1, n_max = -1;
    if (m_bounded) m_max = (na >= 0 && nd >= 0) ? std::min(na, nd) : std::max(na, nd);
    if (n_bounded) n_max = (nap >= 0 && nd >= 0) ? std::min(nap, nd) : std::max(nap, nd);
    check_denominator_param(p.b, m_max, "b", "f2_series");
    check_denominator_param(p.b_prime, n_max, "b'", "f2_series");

    long long t_stop = -1;  // last diagonal with nonzero terms, if finite
    if (terminating) {
        t_stop = m_max + n_max;
        if (nd >= 0) t_stop = std::min(t_stop, nd);
    }

    // Successive diagonal sums shrink roughly by |x| + |y|, so deflate the
    // small-diagonal threshold by the implied geometric tail factor.
    const double geo = std::min(std::fabs(p.x) + std::fabs(p.y), 0.98);
    const double stop_tol =
        (geo > 1.0 / 3.0) ? tol * (1.0 - geo) / (2.0 * geo) : tol;

    std::vector<double> w{1.0}, next;
    double sum = 1.0, abs_sum = 1.0;
    std::size_t terms = 1, small_streak = 0;
    double diag_abs = 0.0;

    for (std::size_t t = 1;; ++t) {
        if (terminating && static_cast<long long>(t) > t_stop) break;
        if (!terminating && t > max_double_series_diagonals) {
            throw Error(ErrorKind::convergence,
                        "f2_series: tolerance not reached within the diagonal "
                        "budget: " + f2_describe(p));
        }
        const double td = static_cast<double>(t);
        next.assign(t + 1, 0.0);
        for (std::size_t m = 0; m < t; ++m) {
            const double n_new = td - static_cast<double>(m);  // new n index
            next[m] = term_step(w[m],
                                (p.d + td - 1.0) * (p.a_prime + n_new - 1.0) * p.y,
                                (p.b_prime + n_new - 1.0) * n_new, "f2_series");
        }
        next[t] = term_step(w[t - 1], (p.d + td - 1.0) * (p.a + td - 1.0) * p.x,
                            (p.b + td - 1.0) * td, "f2_series");

        double diag_sum = 0.0;
        diag_abs = 0.0;
        for (double v : next) {
            diag_sum += v;
            diag_abs += std::fabs(v);
        }
        sum += diag_sum;
        abs_sum += diag_abs;
        terms += t + 1;
        w.swap(next);

        if (!terminating) {
            if (diag_abs <= stop_tol * std::max(std::fabs(sum), tiny_floor)) {
                if (++small_streak >= 2 && t >= 2) break;
            } else {
                small_streak = 0;
            }
        }
    }

    EvaluationResult res;
    res.value = sum;
    res.terms_used = terms;
    res.method = Method::series;
    const double roundoff = abs_sum * std::numeric_limits<double>::epsilon();
    if (terminating) {
        res.abs_error_estimate = roundoff;
    } else {
        res.abs_error_estimate = diag_abs * geo / (1.0 - geo) + roundoff;
    }
    return res;
}

namespace {

std::string f1_describe(const F1Params& p) {
    std::ostringstream os;
    os << "F1(" << p.a << ";" << p.b << "," << p.b_prime << ";" << p.c << ";"
       << p.x << "," << p.y << ")";
    return os.str();
}

}  // namespace

EvaluationResult f1_series(const F1Params& p, double tol) {
    const long long nb = np_int_order(p.b);        // bounds m
    const long long nbp = np_int_order(p.b_prime); // bounds n
    const long long na = np_int_order(p.a);        // bounds m + n
    const bool m_bounded = nb >= 0 || na >= 0;
    const bool n_bounded = nbp >= 0 || na >= 0;
    const bool terminating = m_bounded && n_bounded;

    if (!(m_bounded || std::fabs(p.x) < 1.0) ||
        !(n_bounded || std::fabs(p.y) < 1.0)) {
        throw Error(ErrorKind::divergence,
                    "f1_series: outside the convergence region |x| < 1, "
                    "|y| < 1: " + f1_describe(p));
    }

    long long total_max = -1;  // largest m + n with a nonzero term, if finite
    if (terminating) {
        long long mm = (nb >= 0 && na >= 0) ? std::min(nb, na) : std::max(nb, na);
        long long nn = (nbp >= 0 && na >= 0) ? std::min(nbp, na) : std::max(nbp, na);
        total_max = mm + nn;
        if (na >= 0) total_max = std::min(total_max, na);
    }
    check_denominator_param(p.c, total_max, "c", "f1_series");

    const double geo = std::min(std::max(std::fabs(p.x), std::fabs(p.y)), 0.98);
    const double stop_tol =
        (geo > 1.0 / 3.0) ? tol * (1.0 - geo) / (2.0 * geo) : tol;

    std::vector<double> w{1.0}, next;
    double sum = 1.0, abs_sum = 1.0;
    std::size_t terms = 1, small_streak = 0;
    double diag_abs = 0.0;

    for (std::size_t t = 1;; ++t) {
        if (terminating && static_cast<long long>(t) > total_max) break;
        if (!terminating && t > max_double_series_diagonals) {
            throw Error(ErrorKind::convergence,
                        "f1_series: tolerance not reached within the diagonal "
                        "budget: " + f1_describe(p));
        }
        const double td = static_cast<double>(t);
        next.assign(t + 1, 0.0);
        for (std::size_t m = 0; m < t; ++m) {
            const double n_new = td - static_cast<double>(m);
            next[m] = term_step(w[m],
                                (p.a + td - 1.0) * (p.b_prime + n_new - 1.0) * p.y,
                                (p.c + td - 1.0) * n_new, "f1_series");
        }
        next[t] = term_step(w[t - 1], (p.a + td - 1.0) * (p.b + td - 1.0) * p.x,
                            (p.c + td - 1.0) * td, "f1_series");

        double diag_sum = 0.0;
        diag_abs = 0.0;
        for (double v : next) {
            diag_sum += v;
            diag_abs += std::fabs(v);
        }
        sum += diag_sum;
        abs_sum += diag_abs;
        terms += t + 1;
        w.swap(next);

        if (!terminating) {
            if (diag_abs <= stop_tol * std::max(std::fabs(sum), tiny_floor)) {
                if (++small_streak >= 2 && t >= 2) break;
            } else {
                small_streak = 0;
            }
        }
    }

    EvaluationResult res;
    res.value = sum;
    res.terms_used = terms;
    res.method = Method::series;
    const double roundoff = abs_sum * std::numeric_limits<double>::epsilon();
    if (terminating) {
        res.abs_error_estimate = roundoff;
    } else {
        res.abs_error_estimate = diag_abs * geo / (1.0 - geo) + roundoff;
    }
    return res;
}

namespace {

double binom(long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (long long i = 1; i <= k; ++i) {
        r *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

double int_pow(double base, long long e) {
    if (e >= 0) {
        double r = 1.0;
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }
    return 1.0 / int_pow(base, -e);
}

}  // namespace

EvaluationResult f1_finite_sum(long long a, long long s, long long t,
                               long long d, double x, double y) {
    if (a < 0 || s < 0 || t < 0 || d < 0) {
        throw Error(ErrorKind::parameter,
                    "f1_finite_sum: exponent parameters must be nonnegative "
                    "integers");
    }
    if (std::fabs(x) >= 1.0 || std::fabs(y) >= 1.0) {
        throw Error(ErrorKind::domain,
                    "f1_finite_sum: requires |x| < 1 and |y| < 1");
    }
    if (x == 0.0 || y == 0.0 ||
        std::fabs(x - y) <= 1e-12 * std::max(std::fabs(x), std::fabs(y))) {
        throw Error(ErrorKind::domain,
                    "f1_finite_sum: degenerate arguments (x = y or a zero "
                    "argument); use the direct double series instead");
    }

    const double log1mx = std::log(1.0 - x);
    const double log1my = std::log(1.0 - y);
    double total = 0.0, abs_total = 0.0;
    std::size_t terms = 0;

    for (long long m = 0; m <= d; ++m) {
        // First block: powers of y outside, inner sums over j and k with the
        // k = t - j contribution replaced by a logarithm.
        double part_a = 0.0;
        for (long long j = 0; j <= t; ++j) {
            double inner = 0.0;
            for (long long k = 0; k <= a + m; ++k) {
                if (k == t - j) continue;
                const double e = static_cast<double>(k + j - t);
                inner += binom(a + m, k) * ((k % 2) ? -1.0 : 1.0) *
                         (1.0 - int_pow(1.0 - y, k + j - t)) / e;
                ++terms;
            }
            if (t - j >= 0 && t - j <= a + m) {
                inner -= binom(a + m, t - j) * (((t - j) % 2) ? -1.0 : 1.0) *
                         log1my;
            }
            part_a += binom(j + s, s) * int_pow(-x, j) /
                      int_pow(y - x, s + j + 1) * inner;
        }
        // Second block: roles of (x, s, t) and (y, t, s) exchanged.
        double part_c = 0.0;
        for (long long k = 0; k <= s; ++k) {
            double inner = 0.0;
            for (long long j = 0; j <= a + m; ++j) {
                if (j == s - k) continue;
                const double e = static_cast<double>(j + k - s);
                inner += binom(a + m, j) * ((j % 2) ? -1.0 : 1.0) *
                         (1.0 - int_pow(1.0 - x, j + k - s)) / e;
                ++terms;
            }
            if (s - k >= 0 && s - k <= a + m) {
                inner -= binom(a + m, s - k) * (((s - k) % 2) ? -1.0 : 1.0) *
                         log1mx;
            }
            part_c += binom(k + t, t) * int_pow(-y, k) /
                      int_pow(x - y, t + k + 1) * inner;
        }
        const double contrib =
            binom(d, m) * ((m % 2) ? -1.0 : 1.0) *
            (int_pow(y, s - a - m) * part_a + int_pow(x, t - a - m) * part_c);
        total += contrib;
        abs_total += std::fabs(contrib);
    }

    // The closed sum evaluates the series value scaled by a Beta-function
    // factor; divide it back out to return the plain series value.
    const double beta = std::exp(ln_gamma(static_cast<double>(a + 1)).log_abs +
                                 ln_gamma(static_cast<double>(d + 1)).log_abs -
                                 ln_gamma(static_cast<double>(a + d + 2)).log_abs);
    EvaluationResult res;
    res.value = total / beta;
    res.terms_used = std::max<std::size_t>(terms, 1);
    res.method = Method::closed_form;
    res.abs_error_estimate =
        (abs_total / beta) * 64.0 * std::numeric_limits<double>::epsilon();
    return res;
}

namespace {

bool near(double u, double v) { return std::fabs(u - v) <= 1e-12; }

// Finite re-expansion of F2 when one argument equals 1 and the numerator
// parameter coupled to it terminates:
//   F2(d; a, -m; b, b'; x, 1)
//     = sum_{k=0}^{m} (d)_k (-m)_k / ((b')_k k!) 2F1(d+k, a; b; x).
EvaluationResult f2_unit_argument_sum(double d, double a, long long m,
                                      double b, double b_prime, double x,
                                      double tol) {
    double coef = 1.0, sum = 0.0, abs_sum = 0.0, err = 0.0;
    std::size_t terms = 0;
    for (long long k = 0; k <= m; ++k) {
        if (k > 0) {
            const double kd = static_cast<double>(k);
            coef = term_step(coef,
                             (d + kd - 1.0) * (static_cast<double>(-m) + kd - 1.0),
                             (b_prime + kd - 1.0) * kd, "f2_reduce");
            if (coef == 0.0) break;
        }
        EvaluationResult inner = hyp2f1(d + static_cast<double>(k), a, b, x, tol);
        sum += coef * inner.value;
        abs_sum += std::fabs(coef * inner.value);
        err += std::fabs(coef) * inner.abs_error_estimate;
        terms += inner.terms_used + 1;
    }
    EvaluationResult res;
    res.value = sum;
    res.terms_used = std::max<std::size_t>(terms, 1);
    res.method = Method::reduction;
    res.abs_error_estimate =
        err + abs_sum * 16.0 * std::numeric_limits<double>::epsilon();
    return res;
}

bool is_divergence_kind(const Error& e) {
    return e.kind() == ErrorKind::divergence ||
           e.kind() == ErrorKind::convergence ||
           e.kind() == ErrorKind::singular;
}

}  // namespace

std::optional<EvaluationResult> f2_reduce(const F2Params& p, double tol) {
    const double d = p.d, a = p.a, ap = p.a_prime, b = p.b, bp = p.b_prime;
    const double x = p.x, y = p.y;

    auto finish = [](EvaluationResult r) {
        r.method = Method::reduction;
        return r;
    };

    // A vanishing numerator parameter or argument removes one index entirely.
    if (near(a, 0.0) || near(x, 0.0)) {
        return finish(hyp2f1(d, ap, bp, y, tol));
    }
    if (near(ap, 0.0) || near(y, 0.0)) {
        return finish(hyp2f1(d, a, b, x, tol));
    }

    const bool a_eq_b = near(a, b);
    const bool ap_eq_bp = near(ap, bp);

    // Both factors exponential: a pure power of (1 - x - y).
    if (a_eq_b && ap_eq_bp) {
        EvaluationResult r;
        r.value = real_pow(1.0 - x - y, -d);
        r.abs_error_estimate = std::fabs(r.value) * 4e-16;
        r.terms_used = 1;
        r.method = Method::reduction;
        return r;
    }
    // One factor exponential with the other sharing the first parameter.
    if (near(b, d) && ap_eq_bp) {
        EvaluationResult r;
        r.value = real_pow(1.0 - y, a - d) * real_pow(1.0 - x - y, -a);
        r.abs_error_estimate = std::fabs(r.value) * 8e-16;
        r.terms_used = 1;
        r.method = Method::reduction;
        return r;
    }
    if (a_eq_b && near(bp, d)) {
        EvaluationResult r;
        r.value = real_pow(1.0 - x, ap - d) * real_pow(1.0 - x - y, -ap);
        r.abs_error_estimate = std::fabs(r.value) * 8e-16;
        r.terms_used = 1;
        r.method = Method::reduction;
        return r;
    }

    // First parameter equal to both denominators: single 2F1 of the combined
    // argument.
    if (near(d, b) && near(d, bp) && std::fabs(1.0 - x) > 1e-12 &&
        std::fabs(1.0 - y) > 1e-12) {
        try {
            const double z = x * y / ((1.0 - x) * (1.0 - y));
            EvaluationResult inner = hyp2f1(a, ap, d, z, tol);
            EvaluationResult r;
            const double pref = real_pow(1.0 - x, -a) * real_pow(1.0 - y, -ap);
            r.value = pref * inner.value;
            r.abs_error_estimate = std::fabs(pref) * inner.abs_error_estimate +
                                   std::fabs(r.value) * 8e-16;
            r.terms_used = inner.terms_used;
            r.method = Method::reduction;
            return r;
        } catch (const Error& e) {
            if (!is_divergence_kind(e)) throw;
        }
    }

    // First parameter equal to one denominator: one-variable prefactor times
    // the shared-denominator double series.
    if (near(d, b) && std::fabs(1.0 - x) > 1e-12) {
        try {
            F1Params q{ap, a, d - a, bp, y / (1.0 - x), y};
            EvaluationResult inner = f1_series(q, tol);
            const double pref = real_pow(1.0 - x, -a);
            EvaluationResult r;
            r.value = pref * inner.value;
            r.abs_error_estimate = std::fabs(pref) * inner.abs_error_estimate +
                                   std::fabs(r.value) * 8e-16;
            r.terms_used = inner.terms_used;
            r.method = Method::reduction;
            return r;
        } catch (const Error& e) {
            if (!is_divergence_kind(e)) throw;
        }
    }
    if (near(d, bp) && std::fabs(1.0 - y) > 1e-12) {
        try {
            F1Params q{a, d - ap, ap, b, x, x / (1.0 - y)};
            EvaluationResult inner = f1_series(q, tol);
            const double pref = real_pow(1.0 - y, -ap);
            EvaluationResult r;
            r.value = pref * inner.value;
            r.abs_error_estimate = std::fabs(pref) * inner.abs_error_estimate +
                                   std::fabs(r.value) * 8e-16;
            r.terms_used = inner.terms_used;
            r.method = Method::reduction;
            return r;
        } catch (const Error& e) {
            if (!is_divergence_kind(e)) throw;
        }
    }

    // Equal integer offset between the first parameter and the denominators:
    // the finite re-expansion applies even inside the series region.
    {
        const double s_direct = d - b, off_direct = bp - b;
        if (is_integer(s_direct, 1e-10) && is_integer(off_direct, 1e-10) &&
            std::llround(s_direct) >= 1 &&
            std::llround(s_direct) == std::llround(off_direct) &&
            std::fabs(1.0 - x) > 1e-12 && std::fabs(1.0 - y) > 1e-12) {
            try {
                ContinuationParams cp{b, std::llround(s_direct),
                                      std::llround(s_direct), a, ap, x, y, 1.0};
                EvaluationResult r = f2_continuation_lemma8(
                    cp, ContinuationForm::hyp2f1_form, tol);
                r.method = Method::reduction;
                return r;
            } catch (const Error& e) {
                if (!is_divergence_kind(e)) throw;
            }
        }
        const double s_swap = d - bp, off_swap = b - bp;
        if (is_integer(s_swap, 1e-10) && is_integer(off_swap, 1e-10) &&
            std::llround(s_swap) >= 1 &&
            std::llround(s_swap) == std::llround(off_swap) &&
            std::fabs(1.0 - x) > 1e-12 && std::fabs(1.0 - y) > 1e-12) {
            try {
                ContinuationParams cp{bp, std::llround(s_swap),
                                      std::llround(s_swap), ap, a, y, x, 1.0};
                EvaluationResult r = f2_continuation_lemma8(
                    cp, ContinuationForm::hyp2f1_form, tol);
                r.method = Method::reduction;
                return r;
            } catch (const Error& e) {
                if (!is_divergence_kind(e)) throw;
            }
        }
    }

    // Unit argument with a terminating coupled numerator parameter.
    if (near(y, 1.0)) {
        long long m = np_int_order(ap);
        if (m >= 0) return f2_unit_argument_sum(d, a, m, b, bp, x, tol);
    }
    if (near(x, 1.0)) {
        long long n = np_int_order(a);
        if (n >= 0) return f2_unit_argument_sum(d, ap, n, bp, b, y, tol);
    }

    return std::nullopt;
}

namespace {

void check_continuation_common(const ContinuationParams& cp, bool need_s_ge_p,
                               const char* where) {
    if (cp.s < 0 || cp.p < 0) {
        throw Error(ErrorKind::parameter,
                    std::string(where) + ": s and p must be nonnegative integers");
    }
    if (need_s_ge_p && cp.s < cp.p) {
        throw Error(ErrorKind::parameter,
                    std::string(where) + ": requires s >= p");
    }
    const double scale =
        std::max({std::fabs(cp.h), std::fabs(cp.k), std::fabs(cp.k_prime), 1.0});
    if (std::fabs(cp.h - cp.k) <= 1e-12 * scale ||
        std::fabs(cp.h - cp.k_prime) <= 1e-12 * scale ||
        std::fabs(cp.h - cp.k - cp.k_prime) <= 1e-12 * scale) {
        throw Error(ErrorKind::singular,
                    std::string(where) +
                        ": singular configuration (h - k, h - k' or "
                        "h - k - k' vanishes)");
    }
}

}  // namespace

EvaluationResult f2_continuation_lemma6(const ContinuationParams& cp,
                                        ContinuationForm form, double tol) {
    check_continuation_common(cp, false, "f2_continuation_lemma6");
    const double c = cp.c, a = cp.a, ap = cp.a_prime;
    const double k = cp.k, kp = cp.k_prime, h = cp.h;
    const double cmp = c - static_cast<double>(cp.p);
    if (is_nonpositive_integer(cmp)) {
        throw Error(ErrorKind::parameter,
                    "f2_continuation_lemma6: c - p must not be a nonpositive "
                    "integer");
    }
    if (form == ContinuationForm::hyp2f1_form && is_nonpositive_integer(c)) {
        throw Error(ErrorKind::parameter,
                    "f2_continuation_lemma6: c must not be a nonpositive "
                    "integer");
    }

    const long long sp = cp.s + cp.p;
    const double w_outer = kp / (kp - h);
    const double z_inner = k * kp / ((h - kp) * (h - k));

    double coef = 1.0, sum = 0.0, abs_sum = 0.0, err = 0.0;
    std::size_t terms = 0;
    for (long long m = 0; m <= sp; ++m) {
        if (m > 0) {
            const double md = static_cast<double>(m);
            coef = term_step(coef,
                             (ap + md - 1.0) *
                                 (static_cast<double>(-sp) + md - 1.0) * w_outer,
                             (cmp + md - 1.0) * md, "f2_continuation_lemma6");
            if (coef == 0.0) break;
        }
        double contrib = 0.0, contrib_err = 0.0;
        if (form == ContinuationForm::f1_form) {
            F1Params q{a, c + static_cast<double>(cp.s) - ap,
                       static_cast<double>(m) + ap, c, k / h, k / (h - kp)};
            EvaluationResult inner = f1_series(q, tol);
            contrib = inner.value;
            contrib_err = inner.abs_error_estimate;
            terms += inner.terms_used;
        } else {
            const long long sm = cp.s + m;
            double cr = 1.0;
            const double w_in = k / (k - h);
            for (long long r = 0; r <= sm; ++r) {
                if (r > 0) {
                    const double rd = static_cast<double>(r);
                    cr = term_step(cr,
                                   (a + rd - 1.0) *
                                       (static_cast<double>(-sm) + rd - 1.0) * w_in,
                                   (c + rd - 1.0) * rd, "f2_continuation_lemma6");
                    if (cr == 0.0) break;
                }
                EvaluationResult g =
                    hyp2f1(a + static_cast<double>(r),
                           ap + static_cast<double>(m),
                           c + static_cast<double>(r), z_inner, tol);
                contrib += cr * g.value;
                contrib_err += std::fabs(cr) * g.abs_error_estimate;
                terms += g.terms_used;
            }
        }
        sum += coef * contrib;
        abs_sum += std::fabs(coef * contrib);
        err += std::fabs(coef) * contrib_err;
        ++terms;
    }

    double pref = real_pow(1.0 - kp / h, -ap);
    if (form == ContinuationForm::hyp2f1_form) pref *= real_pow(1.0 - k / h, -a);

    EvaluationResult res;
    res.value = pref * sum;
    res.terms_used = std::max<std::size_t>(terms, 1);
    res.method = Method::continuation;
    res.abs_error_estimate =
        std::fabs(pref) * err +
        std::fabs(pref) * abs_sum * 32.0 * std::numeric_limits<double>::epsilon();
    return res;
}

EvaluationResult f2_continuation_lemma8(const ContinuationParams& cp,
                                        ContinuationForm form, double tol) {
    check_continuation_common(cp, true, "f2_continuation_lemma8");
    const double c = cp.c, a = cp.a, ap = cp.a_prime;
    const double k = cp.k, kp = cp.k_prime, h = cp.h;
    const double cpp = c + static_cast<double>(cp.p);
    if (is_nonpositive_integer(cpp) || is_nonpositive_integer(c)) {
        throw Error(ErrorKind::parameter,
                    "f2_continuation_lemma8: c and c + p must not be "
                    "nonpositive integers");
    }

    const long long sp = cp.s - cp.p;
    const double w_outer = kp / (kp - h);
    const double z_inner = k * kp / ((h - kp) * (h - k));
    const double w_in = k / (k - h);

    double coef = 1.0, sum = 0.0, abs_sum = 0.0, err = 0.0;
    std::size_t terms = 0;
    for (long long m = 0; m <= sp; ++m) {
        if (m > 0) {
            const double md = static_cast<double>(m);
            coef = term_step(coef,
                             (static_cast<double>(-sp) + md - 1.0) *
                                 (ap + md - 1.0) * w_outer,
                             (cpp + md - 1.0) * md, "f2_continuation_lemma8");
            if (coef == 0.0) break;
        }
        double contrib = 0.0, contrib_err = 0.0;
        if (form == ContinuationForm::f1_form) {
            F1Params q{a, static_cast<double>(-(cp.s + m)),
                       static_cast<double>(m) + ap, c, w_in, z_inner};
            EvaluationResult inner = f1_series(q, tol);
            contrib = inner.value;
            contrib_err = inner.abs_error_estimate;
            terms += inner.terms_used;
        } else {
            const long long sm = cp.s + m;
            double cr = 1.0;
            for (long long r = 0; r <= sm; ++r) {
                if (r > 0) {
                    const double rd = static_cast<double>(r);
                    cr = term_step(cr,
                                   (a + rd - 1.0) *
                                       (static_cast<double>(-sm) + rd - 1.0) * w_in,
                                   (c + rd - 1.0) * rd, "f2_continuation_lemma8");
                    if (cr == 0.0) break;
                }
                EvaluationResult g =
                    hyp2f1(a + static_cast<double>(r),
                           ap + static_cast<double>(m),
                           c + static_cast<double>(r), z_inner, tol);
                contrib += cr * g.value;
                contrib_err += std::fabs(cr) * g.abs_error_estimate;
                terms += g.terms_used;
            }
        }
        sum += coef * contrib;
        abs_sum += std::fabs(coef * contrib);
        err += std::fabs(coef) * contrib_err;
        ++terms;
    }

    const double pref = real_pow(1.0 - k / h, -a) * real_pow(1.0 - kp / h, -ap);
    EvaluationResult res;
    res.value = pref * sum;
    res.terms_used = std::max<std::size_t>(terms, 1);
    res.method = Method::continuation;
    res.abs_error_estimate =
        std::fabs(pref) * err +
        std::fabs(pref) * abs_sum * 32.0 * std::numeric_limits<double>::epsilon();
    return res;
}

EvaluationResult f2_equal_params_lemma9(double d, double a, double c, double k,
                                        double k_prime, double h, double tol,
                                        EqualParamForm form) {
    if (std::fabs(k) + std::fabs(k_prime) >= std::fabs(h)) {
        throw Error(ErrorKind::divergence,
                    "f2_equal_params_lemma9: requires |k| + |k'| < |h|");
    }
    if (is_nonpositive_integer(c)) {
        throw Error(ErrorKind::parameter,
                    "f2_equal_params_lemma9: c must not be a nonpositive "
                    "integer");
    }
    const bool antisymmetric =
        std::fabs(k + k_prime) <= 1e-12 * std::max({std::fabs(k),
                                                    std::fabs(k_prime), 1.0});
    if (form == EqualParamForm::automatic) {
        form = antisymmetric ? EqualParamForm::four_f3
                             : EqualParamForm::general_sum;
    }
    if (form == EqualParamForm::four_f3) {
        if (!antisymmetric) {
            throw Error(ErrorKind::parameter,
                        "f2_equal_params_lemma9: the 4F3 form requires "
                        "k' = -k");
        }
        EvaluationResult r = pfq(
            {{a, c - a, d / 2.0, (d + 1.0) / 2.0},
             {c, c / 2.0, (c + 1.0) / 2.0},
             k * k / (h * h)},
            tol);
        r.method = Method::continuation;
        return r;
    }

    const double zr = -k * k_prime / (h * h);
    const double z2 = (k + k_prime) / h;
    double coef = 1.0, sum = 0.0, abs_sum = 0.0, err = 0.0;
    std::size_t terms = 0, small_streak = 0;
    const std::size_t cap = 1000;
    for (std::size_t r = 0; r < cap; ++r) {
        if (r > 0) {
            const double rd = static_cast<double>(r);
            const double num = (a + rd - 1.0) * (c - a + rd - 1.0) *
                               (d + 2.0 * rd - 2.0) * (d + 2.0 * rd - 1.0) * zr;
            const double den = (c + rd - 1.0) * (c + 2.0 * rd - 2.0) *
                               (c + 2.0 * rd - 1.0) * rd;
            coef = term_step(coef, num, den, "f2_equal_params_lemma9");
            if (coef == 0.0) break;
        }
        EvaluationResult g = hyp2f1(d + 2.0 * static_cast<double>(r),
                                    a + static_cast<double>(r),
                                    c + 2.0 * static_cast<double>(r), z2, tol);
        const double term = coef * g.value;
        sum += term;
        abs_sum += std::fabs(term);
        err += std::fabs(coef) * g.abs_error_estimate;
        terms += g.terms_used + 1;
        if (std::fabs(term) <= tol * std::max(std::fabs(sum), tiny_floor)) {
            if (++small_streak >= 2 && r >= 2) break;
        } else {
            small_streak = 0;
        }
        if (r + 1 == cap) {
            throw Error(ErrorKind::convergence,
                        "f2_equal_params_lemma9: outer sum did not converge");
        }
    }

    EvaluationResult res;
    res.value = sum;
    res.terms_used = std::max<std::size_t>(terms, 1);
    res.method = Method::continuation;
    res.abs_error_estimate =
        err + abs_sum * 16.0 * std::numeric_limits<double>::epsilon();
    return res;
}

const char* recurrence_name(RecurrenceId id) {
    switch (id) {
        case RecurrenceId::r17: return "R3.17";
        case RecurrenceId::r18: return "R3.18";
        case RecurrenceId::r19: return "R3.19";
        case RecurrenceId::r20: return "R3.20";
        case RecurrenceId::r21: return "R3.21";
        case RecurrenceId::r22: return "R3.22";
        case RecurrenceId::r23: return "R3.23";
    }
    throw Error(ErrorKind::usage, "unknown recurrence identifier");
}

RecurrenceId recurrence_from_name(const std::string& name) {
    for (RecurrenceId id :
         {RecurrenceId::r17, RecurrenceId::r18, RecurrenceId::r19,
          RecurrenceId::r20, RecurrenceId::r21, RecurrenceId::r22,
          RecurrenceId::r23}) {
        if (name == recurrence_name(id)) return id;
    }
    throw Error(ErrorKind::usage,
                "unknown recurrence identifier '" + name +
                    "' (expected R3.17 ... R3.23)");
}

IdentityReport f2_recurrence_residual(RecurrenceId id, const F2Params& p,
                                      double tol) {
    const double d = p.d, a = p.a, ap = p.a_prime, b = p.b, bp = p.b_prime;
    const double x = p.x, y = p.y;
    Method lhs_m = Method::series, rhs_m = Method::series;
    bool lhs_seen = false, rhs_seen = false;

    auto F = [&](double D, double A, double B, double BP, bool lhs_side) {
        F2Params q{D, A, ap, B, BP, x, y};
        EvaluationResult r = f2_eval(q, tol);
        if (lhs_side && !lhs_seen) { lhs_m = r.method; lhs_seen = true; }
        if (!lhs_side && !rhs_seen) { rhs_m = r.method; rhs_seen = true; }
        return r.value;
    };

    double lhs = 0.0, rhs = 0.0;
    switch (id) {
        case RecurrenceId::r18: {
            const double s = d - bp;
            if (!is_integer(s, 1e-10) || std::llround(s) < 1) {
                throw Error(ErrorKind::parameter,
                            "R3.18 requires d = b' + s with s a positive "
                            "integer");
            }
            [[fallthrough]];
        }
        case RecurrenceId::r17: {
            if (id == RecurrenceId::r17 && d <= -1.0) {
                throw Error(ErrorKind::domain,
                            "R3.17 requires the first parameter to exceed -1");
            }
            lhs = x * (d - 1.0) * F(d, a, b, bp, true);
            rhs = (a - b) * F(d - 1.0, a - 1.0, b, bp, false) +
                  (b - 2.0 * a) * F(d - 1.0, a, b, bp, false) +
                  a * F(d - 1.0, a + 1.0, b, bp, false);
            break;
        }
        case RecurrenceId::r19: {
            if (std::fabs(d - (bp + 1.0)) > 1e-10) {
                throw Error(ErrorKind::parameter, "R3.19 requires d = b' + 1");
            }
            lhs = x * (d - 1.0) * F(d, a, b, bp, true);
            rhs = (a - b) * F(d - 1.0, a - 1.0, b, bp, false) +
                  (b - 2.0 * a) * F(d - 1.0, a, b, bp, false) +
                  a * F(d - 1.0, a + 1.0, b, bp, false);
            break;
        }
        case RecurrenceId::r20: {
            if (std::fabs(bp - b) > 1e-12 || std::fabs(d - (b + 1.0)) > 1e-10) {
                throw Error(ErrorKind::parameter,
                            "R3.20 requires b' = b and d = b + 1");
            }
            lhs = x * b * F(b + 1.0, a, b, b, true);
            const double z = x * y / ((1.0 - x) * (1.0 - y));
            auto closed = [&](double A) {
                return real_pow(1.0 - x, -A) * real_pow(1.0 - y, -ap) *
                       hyp2f1(A, ap, b, z, tol).value;
            };
            rhs = (a - b) * closed(a - 1.0) + (b - 2.0 * a) * closed(a) +
                  a * closed(a + 1.0);
            rhs_m = Method::reduction;
            rhs_seen = true;
            break;
        }
        case RecurrenceId::r21: {
            lhs = x * (d - 1.0) / b * F(d, a, b + 1.0, bp + 1.0, true);
            rhs = F(d - 1.0, a, b, bp + 1.0, false) -
                  F(d - 1.0, a - 1.0, b, bp + 1.0, false);
            break;
        }
        case RecurrenceId::r22: {
            lhs = (a + 1.0 - b) * F(d, a, b, bp, true);
            rhs = a * F(d, a + 1.0, b, bp, false) -
                  (b - 1.0) * F(d, a, b - 1.0, bp, false);
            break;
        }
        case RecurrenceId::r23: {
            if (std::fabs(x) <= 1e-12 || std::fabs(d - 1.0) <= 1e-12) {
                throw Error(ErrorKind::domain,
                            "R3.23 is degenerate when x = 0 or d = 1");
            }
            lhs = F(d, a, b, bp, true);
            rhs = (b - 1.0) / (x * (d - 1.0)) *
                      (F(d - 1.0, a, b - 1.0, bp, false) -
                       F(d - 1.0, a, b, bp, false)) +
                  (b - a) / b * F(d, a, b + 1.0, bp, false);
            break;
        }
    }

    return make_identity_report(recurrence_name(id), lhs, rhs, lhs_m, rhs_m);
}

EvaluationResult f2_eval(const F2Params& p, double tol) {
    std::vector<std::string> attempts;

    try {
        if (auto r = f2_reduce(p, tol)) return *r;
        attempts.push_back("reduction (no pattern matched)");
    } catch (const Error& e) {
        attempts.push_back(std::string("reduction: ") + e.what());
    }

    const double radius = std::fabs(p.x) + std::fabs(p.y);
    if (radius <= 0.9) {
        return f2_series(p, tol);
    }

    const bool both_terminating =
        (np_int_order(p.a) >= 0 || np_int_order(p.d) >= 0) &&
        (np_int_order(p.a_prime) >= 0 || np_int_order(p.d) >= 0);
    if (both_terminating) {
        return f2_series(p, tol);
    }

    // Integer-offset patterns linking the first parameter to the denominators.
    struct Orientation {
        double c, a, ap, k, kp;
    };
    const Orientation direct{p.b, p.a, p.a_prime, p.x, p.y};
    const Orientation swapped{p.b_prime, p.a_prime, p.a, p.y, p.x};
    const double other_denom[2] = {p.b_prime, p.b};
    int oi = 0;
    for (const Orientation& o : {direct, swapped}) {
        const double s_off = p.d - o.c;
        const double p_off = o.c - other_denom[oi];  // positive for c - p
        ++oi;
        if (!is_integer(s_off, 1e-10) || std::llround(s_off) < 0) continue;
        const long long s = std::llround(s_off);
        if (is_integer(p_off, 1e-10)) {
            const long long off = std::llround(p_off);
            if (off >= 0) {
                ContinuationParams cp{o.c, s, off, o.a, o.ap, o.k, o.kp, 1.0};
                for (ContinuationForm form :
                     {ContinuationForm::hyp2f1_form, ContinuationForm::f1_form}) {
                    try {
                        return f2_continuation_lemma6(cp, form, tol);
                    } catch (const Error& e) {
                        attempts.push_back(std::string("continuation: ") +
                                           e.what());
                    }
                }
            } else if (s >= -off) {
                ContinuationParams cp{o.c, s, -off, o.a, o.ap, o.k, o.kp, 1.0};
                for (ContinuationForm form :
                     {ContinuationForm::hyp2f1_form, ContinuationForm::f1_form}) {
                    try {
                        return f2_continuation_lemma8(cp, form, tol);
                    } catch (const Error& e) {
                        attempts.push_back(std::string("continuation: ") +
                                           e.what());
                    }
                }
            }
        }
    }

    if (std::fabs(p.a - p.a_prime) <= 1e-12 &&
        std::fabs(p.b - p.b_prime) <= 1e-12 && radius < 1.0) {
        try {
            return f2_equal_params_lemma9(p.d, p.a, p.b, p.x, p.y, 1.0, tol);
        } catch (const Error& e) {
            attempts.push_back(std::string("equal-parameter sum: ") + e.what());
        }
    }

    if (radius < 1.0) {
        try {
            return f2_series(p, tol);
        } catch (const Error& e) {
            attempts.push_back(std::string("direct series: ") + e.what());
        }
    } else {
        attempts.push_back("direct series: |x| + |y| >= 1 and non-terminating");
    }

    std::ostringstream os;
    os << "f2_eval: no applicable strategy for " << f2_describe(p)
       << "; tried:";
    for (const auto& s : attempts) os << " [" << s << "]";
    throw Error(ErrorKind::domain, os.str());
}

IdentityReport product_expansion_residual(double a, double c, double x,
                                          double y, double tol) {
    const double lhs = hyp1f1(a, c, x, tol).value * hyp1f1(a, c, y, tol).value;

    double coef = 1.0, rhs = 0.0;
    std::size_t small_streak = 0;
    const double zr = -x * y;
    for (std::size_t r = 0; r < 600; ++r) {
        if (r > 0) {
            const double rd = static_cast<double>(r);
            const double num = (a + rd - 1.0) * (c - a + rd - 1.0) * zr;
            const double den = (c + rd - 1.0) * (c + 2.0 * rd - 2.0) *
                               (c + 2.0 * rd - 1.0) * rd;
            coef = term_step(coef, num, den, "product_expansion_residual");
            if (coef == 0.0) break;
        }
        const double term =
            coef * hyp1f1(a + static_cast<double>(r),
                          c + 2.0 * static_cast<double>(r), x + y, tol).value;
        rhs += term;
        if (std::fabs(term) <= tol * std::max(std::fabs(rhs), tiny_floor)) {
            if (++small_streak >= 2 && r >= 2) break;
        } else {
            small_streak = 0;
        }
        if (r + 1 == 600) {
            throw Error(ErrorKind::convergence,
                        "product_expansion_residual: expansion did not "
                        "converge");
        }
    }
    return make_identity_report("product_expansion", lhs, rhs, Method::series,
                                Method::series);
}

IdentityReport antisymmetric_product_residual(double a, double c, double x,
                                              double tol) {
    const double lhs =
        hyp1f1(a, c, x, tol).value * hyp1f1(a, c, -x, tol).value;
    const double rhs =
        pfq({{a, c - a}, {c, c / 2.0, (c + 1.0) / 2.0}, x * x / 4.0}, tol)
            .value;
    return make_identity_report("antisymmetric_product", lhs, rhs,
                                Method::series, Method::series);
}

}  // namespace appell
