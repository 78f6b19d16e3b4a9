#include "appell/laplace.hpp"

#include "appell/f2.hpp"
#include "appell/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace appell {

namespace {

struct LnVal {
    double log_abs;
    double sign;
};

LnVal ln_from_value(double v) {
    if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
    return {std::log(std::fabs(v)), v > 0.0 ? 1.0 : -1.0};
}

// Log-magnitude evaluation of 1F1(a;b;x).  Direct evaluation overflows only
// beyond |x| ~ 700 where the damped integrands below carry no weight, so an
// asymptotic leading term suffices there.
LnVal ln_hyp1f1_point(double a, double b, double x, double tol) {
    if (is_nonpositive_integer(a)) {
        return ln_from_value(hyp1f1(a, b, x, tol).value);
    }
    if (x > 600.0) {
        const LnGamma gb = ln_gamma(b), ga = ln_gamma(a);
        return {x + gb.log_abs - ga.log_abs + (a - b) * std::log(x),
                static_cast<double>(gb.sign * ga.sign)};
    }
    if (x < -600.0) {
        const LnGamma gb = ln_gamma(b), gba = ln_gamma(b - a);
        return {gb.log_abs - gba.log_abs - a * std::log(-x),
                static_cast<double>(gb.sign * gba.sign)};
    }
    return ln_from_value(hyp1f1(a, b, x, tol).value);
}

// Log-magnitude evaluation of 0F1(b;z) for z >= 0, with the modified-Bessel
// leading term past the direct-summation range.
LnVal ln_hyp0f1_point(double b, double z, double tol) {
    if (z > 90000.0) {
        const double w = 2.0 * std::sqrt(z);
        const LnGamma gb = ln_gamma(b);
        return {gb.log_abs + 0.5 * (1.0 - b) * std::log(z) + w -
                    0.5 * std::log(2.0 * std::numbers::pi * w),
                static_cast<double>(gb.sign)};
    }
    return ln_from_value(pfq({{}, {b}, z}, tol).value);
}

double need_param(const std::map<std::string, double>& m,
                  const std::string& name, const std::string& id) {
    auto it = m.find(name);
    if (it == m.end()) {
        throw Error(ErrorKind::usage,
                    "catalog entry " + id + ": missing parameter '" + name +
                        "'");
    }
    return it->second;
}

}  // namespace

std::function<double(double)> laplace_integrand(const LaplaceProductSpec& spec,
                                                double tol) {
    const LaplaceProductSpec s = spec;
    const double inner_tol = std::min(tol, 1e-12);
    return [s, inner_tol](double t) -> double {
        if (t <= 0.0) return 0.0;
        double lg = (s.d - 1.0) * std::log(t) - s.h * t;
        double sign = 1.0;
        const LnVal f1 = ln_hyp1f1_point(s.a, s.b, s.k * t, inner_tol);
        if (f1.sign == 0.0) return 0.0;
        lg += f1.log_abs;
        sign *= f1.sign;
        if (s.has_second) {
            const LnVal f2 =
                ln_hyp1f1_point(s.a_prime, s.b_prime, s.k_prime * t, inner_tol);
            if (f2.sign == 0.0) return 0.0;
            lg += f2.log_abs;
            sign *= f2.sign;
        }
        return sign * std::exp(lg);
    };
}

QuadratureOptions laplace_quadrature_options(const LaplaceProductSpec& spec) {
    double growth = 0.0;
    if (!is_nonpositive_integer(spec.a)) growth += std::max(spec.k, 0.0);
    if (spec.has_second && !is_nonpositive_integer(spec.a_prime)) {
        growth += std::max(spec.k_prime, 0.0);
    }
    const double decay = spec.h - growth;
    if (!(decay > 0.0)) {
        throw Error(ErrorKind::domain,
                    "laplace_quadrature_options: the integrand does not decay "
                    "(requires h > sum of positive growth rates)");
    }
    QuadratureOptions o;
    o.decay_rate = decay;
    o.split_point = (8.0 + std::max(spec.d, 1.0)) / decay;
    return o;
}

EvaluationResult laplace_single(double d, double h, double a, double b,
                                double k, double tol) {
    if (!(d > 0.0)) {
        throw Error(ErrorKind::domain, "laplace_single: requires d > 0");
    }
    if (!(h > 0.0)) {
        throw Error(ErrorKind::domain, "laplace_single: requires h > 0");
    }
    EvaluationResult r = hyp2f1(d, a, b, k / h, tol);
    const double pref = gamma_fn(d) * real_pow(h, -d);
    r.value *= pref;
    r.abs_error_estimate = r.abs_error_estimate * std::fabs(pref) +
                           std::fabs(r.value) * 4e-16;
    return r;
}

EvaluationResult laplace_product(const LaplaceProductSpec& spec, double tol) {
    if (!(spec.d > 0.0)) {
        throw Error(ErrorKind::domain, "laplace_product: requires d > 0");
    }
    if (!(spec.h > 0.0)) {
        throw Error(ErrorKind::domain, "laplace_product: requires h > 0");
    }
    if (!spec.has_second) {
        return laplace_single(spec.d, spec.h, spec.a, spec.b, spec.k, tol);
    }
    F2Params f2{spec.d,          spec.a,
                spec.a_prime,    spec.b,
                spec.b_prime,    spec.k / spec.h,
                spec.k_prime / spec.h};
    EvaluationResult r = f2_eval(f2, tol);
    const double pref = gamma_fn(spec.d) * real_pow(spec.h, -spec.d);
    r.value *= pref;
    r.abs_error_estimate = r.abs_error_estimate * std::fabs(pref) +
                           std::fabs(r.value) * 4e-16;
    return r;
}

EvaluationResult landau_lifshitz_J(const JspParams& p, JMethod method,
                                   double tol) {
    if (p.s < 0 || p.p < 0) {
        throw Error(ErrorKind::parameter,
                    "landau_lifshitz_J: s and p must be nonnegative integers");
    }
    if (!(p.h > 0.0)) {
        throw Error(ErrorKind::domain, "landau_lifshitz_J: requires h > 0");
    }
    if (!(p.gamma + static_cast<double>(p.s) > 0.0)) {
        throw Error(ErrorKind::domain,
                    "landau_lifshitz_J: requires gamma + s > 0");
    }

    const double scale =
        std::max({std::fabs(p.h), std::fabs(p.k), std::fabs(p.k_prime), 1.0});
    const bool symmetric_rate =
        std::fabs(p.h - 0.5 * (p.k + p.k_prime)) <= 1e-12 * scale;
    const bool distinct = std::fabs(p.k - p.k_prime) > 1e-12 * scale;
    const bool gordon_eligible =
        p.s == 0 && p.p == 0 && symmetric_rate && distinct;

    auto gordon = [&]() {
        const double dk = p.k_prime - p.k;
        const double w = -4.0 * p.k * p.k_prime / (dk * dk);
        EvaluationResult g = hyp2f1(p.a, p.a_prime, p.gamma, w, tol);
        const double pref = real_pow(2.0, p.gamma) * gamma_fn(p.gamma) *
                            real_pow(p.k + p.k_prime,
                                     p.a + p.a_prime - p.gamma) *
                            real_pow(p.k_prime - p.k, -p.a) *
                            real_pow(p.k - p.k_prime, -p.a_prime);
        EvaluationResult r;
        r.value = pref * g.value;
        r.abs_error_estimate = std::fabs(pref) * g.abs_error_estimate +
                               std::fabs(r.value) * 8e-16;
        r.terms_used = g.terms_used;
        r.method = Method::closed_form;
        return r;
    };

    auto continuation = [&]() {
        ContinuationParams cp{p.gamma, p.s,      p.p, p.a,
                              p.a_prime, p.k, p.k_prime, p.h};
        EvaluationResult inner;
        try {
            inner = f2_continuation_lemma6(cp, ContinuationForm::hyp2f1_form,
                                           tol);
        } catch (const Error&) {
            inner = f2_continuation_lemma6(cp, ContinuationForm::f1_form, tol);
        }
        const double d = p.gamma + static_cast<double>(p.s);
        const double pref = gamma_fn(d) * real_pow(p.h, -d);
        inner.value *= pref;
        inner.abs_error_estimate = inner.abs_error_estimate * std::fabs(pref) +
                                   std::fabs(inner.value) * 8e-16;
        return inner;
    };

    switch (method) {
        case JMethod::gordon_closed_form:
            if (!gordon_eligible) {
                throw Error(ErrorKind::parameter,
                            "landau_lifshitz_J: the closed form requires "
                            "s = p = 0, h = (k + k')/2 and k != k'");
            }
            return gordon();
        case JMethod::continuation:
            return continuation();
        case JMethod::automatic:
            if (gordon_eligible) {
                try {
                    return gordon();
                } catch (const Error&) {
                    // branch-cut or convergence obstruction: fall through
                }
            }
            return continuation();
    }
    throw Error(ErrorKind::usage, "landau_lifshitz_J: unknown method");
}

namespace {

using Params = std::map<std::string, double>;

// Shared fragments for catalog entries.
std::string check_h_pos(double h) {
    return h > 0.0 ? "" : "requires h > 0";
}

double ghalf(double z) { return gamma_fn(z); }

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    const double sqrt_pi = std::sqrt(std::numbers::pi);

    // I.1: t^{d-1} e^{-ht} 1F1(a;d;kt) -> Gamma(d) h^{-d} (1-k/h)^{-a}
    {
        CatalogEntry e;
        e.id = "I.1";
        e.param_names = {"d", "h", "k", "a"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("d") > 0.0)) return "requires d > 0";
            if (!(m.at("h") > 0.0)) return "requires h > 0";
            if (!(m.at("k") < m.at("h"))) return "requires k < h";
            return "";
        };
        e.closed_form = [](const Params& m) {
            const double d = m.at("d"), h = m.at("h"), k = m.at("k"),
                         a = m.at("a");
            return gamma_fn(d) * real_pow(h, -d) * real_pow(1.0 - k / h, -a);
        };
        e.integrand = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = m.at("d");
            s.h = m.at("h");
            s.a = m.at("a");
            s.b = m.at("d");
            s.k = m.at("k");
            s.has_second = false;
            return laplace_integrand(s, 1e-12);
        };
        e.quad_options = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = m.at("d");
            s.h = m.at("h");
            s.a = m.at("a");
            s.b = m.at("d");
            s.k = m.at("k");
            s.has_second = false;
            return laplace_quadrature_options(s);
        };
        cat.push_back(e);
    }

    // I.2: t^{d-1} e^{-ht} 1F1(a;(a+d+1)/2;ht/2)
    //   -> Gamma(d) h^{-d} sqrt(pi) Gamma((a+d+1)/2) /
    //      (Gamma((1+d)/2) Gamma((1+a)/2))
    {
        CatalogEntry e;
        e.id = "I.2";
        e.param_names = {"d", "h", "a"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("d") > 0.0)) return "requires d > 0";
            if (!(m.at("a") > 0.0)) return "requires a > 0";
            return check_h_pos(m.at("h"));
        };
        e.closed_form = [sqrt_pi](const Params& m) {
            const double d = m.at("d"), h = m.at("h"), a = m.at("a");
            return gamma_fn(d) * real_pow(h, -d) * sqrt_pi *
                   ghalf((a + d + 1.0) / 2.0) /
                   (ghalf((1.0 + d) / 2.0) * ghalf((1.0 + a) / 2.0));
        };
        e.integrand = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = m.at("d");
            s.h = m.at("h");
            s.a = m.at("a");
            s.b = (m.at("a") + m.at("d") + 1.0) / 2.0;
            s.k = m.at("h") / 2.0;
            s.has_second = false;
            return laplace_integrand(s, 1e-12);
        };
        e.quad_options = [](const Params& m) {
            QuadratureOptions o;
            o.decay_rate = m.at("h") / 2.0;
            o.split_point = (8.0 + std::max(m.at("d"), 1.0)) / o.decay_rate;
            return o;
        };
        cat.push_back(e);
    }

    // I.3: t^{a-1} e^{-ht} 1F1(b;(a+b+2)/2;ht/2)
    //   -> 2 Gamma(a) h^{-a} sqrt(pi) Gamma((a+b)/2+1) / (a-b) *
    //      [1/(Gamma(a/2) Gamma((b+1)/2)) - 1/(Gamma(b/2) Gamma((a+1)/2))]
    {
        CatalogEntry e;
        e.id = "I.3";
        e.param_names = {"a", "b", "h"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("a") > 0.0)) return "requires a > 0";
            if (!(m.at("b") > 0.0)) return "requires b > 0";
            if (std::fabs(m.at("a") - m.at("b")) <= 1e-10)
                return "requires a != b";
            return check_h_pos(m.at("h"));
        };
        e.closed_form = [sqrt_pi](const Params& m) {
            const double a = m.at("a"), b = m.at("b"), h = m.at("h");
            return 2.0 * gamma_fn(a) * real_pow(h, -a) * sqrt_pi *
                   ghalf((a + b) / 2.0 + 1.0) / (a - b) *
                   (1.0 / (ghalf(a / 2.0) * ghalf((b + 1.0) / 2.0)) -
                    1.0 / (ghalf(b / 2.0) * ghalf((a + 1.0) / 2.0)));
        };
        e.integrand = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = m.at("a");
            s.h = m.at("h");
            s.a = m.at("b");
            s.b = (m.at("a") + m.at("b") + 2.0) / 2.0;
            s.k = m.at("h") / 2.0;
            s.has_second = false;
            return laplace_integrand(s, 1e-12);
        };
        e.quad_options = [](const Params& m) {
            QuadratureOptions o;
            o.decay_rate = m.at("h") / 2.0;
            o.split_point = (8.0 + std::max(m.at("a"), 1.0)) / o.decay_rate;
            return o;
        };
        cat.push_back(e);
    }

    // Helper for the I.4 ... I.18 family (single 1F1 factor with parameters
    // tied to one exponent a).
    auto add_tied = [&cat](const char* id,
                           std::function<double(double)> dpow,
                           std::function<double(double)> fa,
                           std::function<double(double)> fb,
                           std::function<double(double, double, double)> closed,
                           double min_a, bool k_nonzero) {
        CatalogEntry e;
        e.id = id;
        e.param_names = {"a", "h", "k"};
        e.domain_check = [min_a, k_nonzero](const Params& m) -> std::string {
            if (!(m.at("a") > min_a)) {
                std::ostringstream os;
                os << "requires a > " << min_a;
                return os.str();
            }
            if (!(m.at("h") > 0.0)) return "requires h > 0";
            if (!(m.at("k") < m.at("h"))) return "requires k < h";
            if (k_nonzero && std::fabs(m.at("k")) <= 1e-12)
                return "requires k != 0";
            return "";
        };
        e.closed_form = [closed](const Params& m) {
            return closed(m.at("a"), m.at("h"), m.at("k"));
        };
        e.integrand = [dpow, fa, fb](const Params& m) {
            LaplaceProductSpec s;
            s.d = dpow(m.at("a"));
            s.h = m.at("h");
            s.a = fa(m.at("a"));
            s.b = fb(m.at("a"));
            s.k = m.at("k");
            s.has_second = false;
            return laplace_integrand(s, 1e-12);
        };
        e.quad_options = [dpow, fa](const Params& m) {
            LaplaceProductSpec s;
            s.d = dpow(m.at("a"));
            s.h = m.at("h");
            s.a = fa(m.at("a"));
            s.b = 1.0;
            s.k = m.at("k");
            s.has_second = false;
            return laplace_quadrature_options(s);
        };
        cat.push_back(e);
    };

    auto u_of = [](double h, double k) {
        return 0.5 + 0.5 * std::sqrt(1.0 - k / h);
    };

    // I.4: t^{2a-1} e^{-ht} 1F1(a+1;a;kt) -> Gamma(2a)(h+k)(h-k)^{-2a-1}
    add_tied(
        "I.4", [](double a) { return 2.0 * a; },
        [](double a) { return a + 1.0; }, [](double a) { return a; },
        [](double a, double h, double k) {
            return gamma_fn(2.0 * a) * (h + k) * real_pow(h - k, -2.0 * a - 1.0);
        },
        0.0, false);

    // I.5: t^{a} e^{-ht} 1F1(2a;a;kt)
    //   -> Gamma(a+1) h^{-a-1} (1+k/h)(1-k/h)^{-2a-1}
    add_tied(
        "I.5", [](double a) { return a + 1.0; },
        [](double a) { return 2.0 * a; }, [](double a) { return a; },
        [](double a, double h, double k) {
            return gamma_fn(a + 1.0) * real_pow(h, -a - 1.0) *
                   (1.0 + k / h) * real_pow(1.0 - k / h, -2.0 * a - 1.0);
        },
        0.0, false);

    // I.6: t^{a-1} e^{-ht} 1F1(a+1/2;2a;kt)
    //   -> Gamma(a) h^{-a} (1-k/h)^{-1/2} u^{1-2a}
    add_tied(
        "I.6", [](double a) { return a; },
        [](double a) { return a + 0.5; }, [](double a) { return 2.0 * a; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a) * real_pow(h, -a) *
                   real_pow(1.0 - k / h, -0.5) *
                   real_pow(u_of(h, k), 1.0 - 2.0 * a);
        },
        0.0, false);

    // I.7: t^{a-1/2} e^{-ht} 1F1(a;2a;kt)
    //   -> Gamma(a+1/2) h^{-a-1/2} (1-k/h)^{-1/2} u^{1-2a}
    add_tied(
        "I.7", [](double a) { return a + 0.5; },
        [](double a) { return a; }, [](double a) { return 2.0 * a; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a + 0.5) * real_pow(h, -a - 0.5) *
                   real_pow(1.0 - k / h, -0.5) *
                   real_pow(u_of(h, k), 1.0 - 2.0 * a);
        },
        0.0, false);

    // I.8: t^{a-1} e^{-ht} 1F1(a-1/2;2a;kt) -> Gamma(a) h^{-a} u^{1-2a}
    add_tied(
        "I.8", [](double a) { return a; },
        [](double a) { return a - 0.5; }, [](double a) { return 2.0 * a; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a) * real_pow(h, -a) *
                   real_pow(u_of(h, k), 1.0 - 2.0 * a);
        },
        0.0, false);

    // I.9: t^{a-3/2} e^{-ht} 1F1(a;2a;kt)
    //   -> Gamma(a-1/2) h^{-(a-1/2)} u^{1-2a}   (a > 1/2)
    add_tied(
        "I.9", [](double a) { return a - 0.5; },
        [](double a) { return a; }, [](double a) { return 2.0 * a; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a - 0.5) * real_pow(h, -(a - 0.5)) *
                   real_pow(u_of(h, k), 1.0 - 2.0 * a);
        },
        0.5, false);

    // I.10: t^{a-1} e^{-ht} 1F1(a+1/2;2a+1;kt) -> Gamma(a) h^{-a} u^{-2a}
    add_tied(
        "I.10", [](double a) { return a; },
        [](double a) { return a + 0.5; },
        [](double a) { return 2.0 * a + 1.0; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a) * real_pow(h, -a) *
                   real_pow(u_of(h, k), -2.0 * a);
        },
        0.0, false);

    // I.11: t^{a-1/2} e^{-ht} 1F1(a;2a+1;kt)
    //   -> Gamma(a+1/2) h^{-(a+1/2)} u^{-2a}
    add_tied(
        "I.11", [](double a) { return a + 0.5; },
        [](double a) { return a; }, [](double a) { return 2.0 * a + 1.0; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a + 0.5) * real_pow(h, -(a + 0.5)) *
                   real_pow(u_of(h, k), -2.0 * a);
        },
        0.0, false);

    // I.12: t^{a} e^{-ht} 1F1(a+1/2;2a+1;kt)
    //   -> Gamma(a+1) h^{-(a+1)} (1-k/h)^{-1/2} u^{-2a}
    add_tied(
        "I.12", [](double a) { return a + 1.0; },
        [](double a) { return a + 0.5; },
        [](double a) { return 2.0 * a + 1.0; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a + 1.0) * real_pow(h, -(a + 1.0)) *
                   real_pow(1.0 - k / h, -0.5) *
                   real_pow(u_of(h, k), -2.0 * a);
        },
        0.0, false);

    // I.13: t^{a-1/2} e^{-ht} 1F1(a+1;2a+1;kt)
    //   -> Gamma(a+1/2) h^{-(a+1/2)} (1-k/h)^{-1/2} u^{-2a}
    add_tied(
        "I.13", [](double a) { return a + 0.5; },
        [](double a) { return a + 1.0; },
        [](double a) { return 2.0 * a + 1.0; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a + 0.5) * real_pow(h, -(a + 0.5)) *
                   real_pow(1.0 - k / h, -0.5) *
                   real_pow(u_of(h, k), -2.0 * a);
        },
        0.0, false);

    // I.14: same integral and value as I.11 (kept as a distinct catalog id).
    add_tied(
        "I.14", [](double a) { return a + 0.5; },
        [](double a) { return a; }, [](double a) { return 2.0 * a + 1.0; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a + 0.5) * real_pow(h, -(a + 0.5)) *
                   real_pow(u_of(h, k), -2.0 * a);
        },
        0.0, false);

    // I.15: same integral and value as I.10 (kept as a distinct catalog id).
    add_tied(
        "I.15", [](double a) { return a; },
        [](double a) { return a + 0.5; },
        [](double a) { return 2.0 * a + 1.0; },
        [u_of](double a, double h, double k) {
            return gamma_fn(a) * real_pow(h, -a) *
                   real_pow(u_of(h, k), -2.0 * a);
        },
        0.0, false);

    // I.16: t^{a} e^{-ht} 1F1(1;2;kt) -> Gamma(a)/k [(h-k)^{-a} - h^{-a}]
    add_tied(
        "I.16", [](double a) { return a + 1.0; },
        [](double) { return 1.0; }, [](double) { return 2.0; },
        [](double a, double h, double k) {
            return gamma_fn(a) / k *
                   (real_pow(h - k, -a) - real_pow(h, -a));
        },
        0.0, true);

    // I.17: e^{-ht} 1F1(a+1;2;kt)
    //   -> (1/(k a)) [(h/(h-k))^a - 1], with the a -> 0 limit
    //      -(1/k) log(1 - k/h)
    {
        CatalogEntry e;
        e.id = "I.17";
        e.param_names = {"a", "h", "k"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("h") > 0.0)) return "requires h > 0";
            if (!(m.at("k") < m.at("h"))) return "requires k < h";
            if (std::fabs(m.at("k")) <= 1e-12) return "requires k != 0";
            return "";
        };
        e.closed_form = [](const Params& m) {
            const double a = m.at("a"), h = m.at("h"), k = m.at("k");
            if (std::fabs(a) < 1e-10) {
                return -std::log(1.0 - k / h) / k;
            }
            return (real_pow(h / (h - k), a) - 1.0) / (k * a);
        };
        e.integrand = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = 1.0;
            s.h = m.at("h");
            s.a = m.at("a") + 1.0;
            s.b = 2.0;
            s.k = m.at("k");
            s.has_second = false;
            return laplace_integrand(s, 1e-12);
        };
        e.quad_options = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = 1.0;
            s.h = m.at("h");
            s.a = m.at("a") + 1.0;
            s.b = 2.0;
            s.k = m.at("k");
            s.has_second = false;
            return laplace_quadrature_options(s);
        };
        cat.push_back(e);
    }

    // I.18: e^{-ht} 1F1(2;3;kt) -> -(2/k)[1 + (h/k) log(1 - k/h)]
    {
        CatalogEntry e;
        e.id = "I.18";
        e.param_names = {"h", "k"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("h") > 0.0)) return "requires h > 0";
            if (!(m.at("k") < m.at("h"))) return "requires k < h";
            if (std::fabs(m.at("k")) <= 1e-12) return "requires k != 0";
            return "";
        };
        e.closed_form = [](const Params& m) {
            const double h = m.at("h"), k = m.at("k");
            return -(2.0 / k) * (1.0 + (h / k) * std::log(1.0 - k / h));
        };
        e.integrand = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = 1.0;
            s.h = m.at("h");
            s.a = 2.0;
            s.b = 3.0;
            s.k = m.at("k");
            s.has_second = false;
            return laplace_integrand(s, 1e-12);
        };
        e.quad_options = [](const Params& m) {
            LaplaceProductSpec s;
            s.d = 1.0;
            s.h = m.at("h");
            s.a = 2.0;
            s.b = 3.0;
            s.k = m.at("k");
            s.has_second = false;
            return laplace_quadrature_options(s);
        };
        cat.push_back(e);
    }

    // Shared machinery for the Bessel-product entries I.19 ... I.21.
    auto bessel_integrand = [](double apow, double b, double k, double kp,
                               double s) {
        return [apow, b, k, kp, s](double t) -> double {
            if (t <= 0.0) return 0.0;
            double lg = (2.0 * apow - 1.0) * std::log(t) - s * t;
            const LnVal f1 =
                ln_hyp0f1_point(b, k * k * t * t / 16.0, 1e-12);
            const LnVal f2 =
                ln_hyp0f1_point(b, kp * kp * t * t / 16.0, 1e-12);
            if (f1.sign == 0.0 || f2.sign == 0.0) return 0.0;
            return f1.sign * f2.sign *
                   std::exp(lg + f1.log_abs + f2.log_abs);
        };
    };
    auto bessel_options = [](double apow, double k, double kp, double s) {
        QuadratureOptions o;
        o.decay_rate = s - 0.5 * (std::fabs(k) + std::fabs(kp));
        o.split_point = (8.0 + std::max(2.0 * apow, 1.0)) / o.decay_rate;
        return o;
    };

    // I.19: t^{2a-1} e^{-st} 0F1(a+1/2;(kt)^2/16) 0F1(a+1/2;(k't)^2/16)
    //   -> 2^{2a} Gamma(2a) D^{-a} 2F1(a,a;2a;4kk'/D), D = 4s^2 - (k-k')^2
    {
        CatalogEntry e;
        e.id = "I.19";
        e.param_names = {"a", "s", "k", "kp"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("a") > 0.0)) return "requires a > 0";
            if (!(m.at("s") >
                  0.5 * (std::fabs(m.at("k")) + std::fabs(m.at("kp")))))
                return "requires s > (|k| + |k'|)/2";
            return "";
        };
        e.closed_form = [](const Params& m) {
            const double a = m.at("a"), s = m.at("s"), k = m.at("k"),
                         kp = m.at("kp");
            const double D = 4.0 * s * s - (k - kp) * (k - kp);
            return real_pow(2.0, 2.0 * a) * gamma_fn(2.0 * a) *
                   real_pow(D, -a) *
                   hyp2f1(a, a, 2.0 * a, 4.0 * k * kp / D, 1e-13).value;
        };
        e.integrand = [bessel_integrand](const Params& m) {
            return bessel_integrand(m.at("a"), m.at("a") + 0.5, m.at("k"),
                                    m.at("kp"), m.at("s"));
        };
        e.quad_options = [bessel_options](const Params& m) {
            return bessel_options(m.at("a"), m.at("k"), m.at("kp"),
                                  m.at("s"));
        };
        cat.push_back(e);
    }

    // I.20: equal-argument case of I.19
    //   -> Gamma(2a) s^{-2a} 2F1(a,a;2a;k^2/s^2)
    {
        CatalogEntry e;
        e.id = "I.20";
        e.param_names = {"a", "s", "k"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("a") > 0.0)) return "requires a > 0";
            if (!(m.at("s") > std::fabs(m.at("k")))) return "requires s > |k|";
            return "";
        };
        e.closed_form = [](const Params& m) {
            const double a = m.at("a"), s = m.at("s"), k = m.at("k");
            return gamma_fn(2.0 * a) * real_pow(s, -2.0 * a) *
                   hyp2f1(a, a, 2.0 * a, k * k / (s * s), 1e-13).value;
        };
        e.integrand = [bessel_integrand](const Params& m) {
            return bessel_integrand(m.at("a"), m.at("a") + 0.5, m.at("k"),
                                    m.at("k"), m.at("s"));
        };
        e.quad_options = [bessel_options](const Params& m) {
            return bessel_options(m.at("a"), m.at("k"), m.at("k"), m.at("s"));
        };
        cat.push_back(e);
    }

    // I.21: t e^{-st} [0F1(3/2;(kt)^2/16)]^2 -> -(1/k^2) log(1 - k^2/s^2)
    {
        CatalogEntry e;
        e.id = "I.21";
        e.param_names = {"s", "k"};
        e.domain_check = [](const Params& m) -> std::string {
            if (!(m.at("s") > std::fabs(m.at("k")))) return "requires s > |k|";
            if (std::fabs(m.at("k")) <= 1e-12) return "requires k != 0";
            return "";
        };
        e.closed_form = [](const Params& m) {
            const double s = m.at("s"), k = m.at("k");
            return -std::log(1.0 - k * k / (s * s)) / (k * k);
        };
        e.integrand = [bessel_integrand](const Params& m) {
            return bessel_integrand(1.0, 1.5, m.at("k"), m.at("k"),
                                    m.at("s"));
        };
        e.quad_options = [bessel_options](const Params& m) {
            return bessel_options(1.0, m.at("k"), m.at("k"), m.at("s"));
        };
        cat.push_back(e);
    }

    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& appendix_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& appendix_entry(const std::string& id) {
    for (const CatalogEntry& e : appendix_catalog()) {
        if (e.id == id) return e;
    }
    throw Error(ErrorKind::usage,
                "unknown catalog id '" + id + "' (expected I.1 ... I.21)");
}

IdentityReport appendix_identity(const std::string& id,
                                 const std::map<std::string, double>& params,
                                 double tol) {
    const CatalogEntry& e = appendix_entry(id);
    for (const std::string& name : e.param_names) {
        need_param(params, name, id);
    }
    const std::string violation = e.domain_check(params);
    if (!violation.empty()) {
        throw Error(ErrorKind::domain, id + ": " + violation);
    }
    const double closed = e.closed_form(params);
    QuadratureOptions opts = e.quad_options(params);
    opts.abs_scale = std::fabs(closed);
    const QuadratureResult q =
        integrate_semiinfinite(e.integrand(params), tol, opts);
    return make_identity_report(e.id, q.value, closed, Method::quadrature,
                                Method::closed_form);
}

IdentityReport product_integral_residual(double d, double h, double a,
                                         double c, double k,
                                         ProductIntegralForm form,
                                         double tol) {
    if (!(d > 0.0) || !(h > 0.0)) {
        throw Error(ErrorKind::domain,
                    "product_integral_residual: requires d > 0 and h > 0");
    }
    if (!(std::fabs(k) < h)) {
        throw Error(ErrorKind::domain,
                    "product_integral_residual: requires |k| < h");
    }

    const double closed =
        gamma_fn(d) * real_pow(h, -d) *
        pfq({{d / 2.0, (d + 1.0) / 2.0, a, c - a},
             {c, c / 2.0, (c + 1.0) / 2.0},
             k * k / (h * h)},
            tol)
            .value;

    std::function<double(double)> f;
    if (form == ProductIntegralForm::product_form) {
        f = [d, h, a, c, k](double t) -> double {
            if (t <= 0.0) return 0.0;
            const LnVal f1 = ln_hyp1f1_point(a, c, k * t, 1e-12);
            const LnVal f2 = ln_hyp1f1_point(a, c, -k * t, 1e-12);
            if (f1.sign == 0.0 || f2.sign == 0.0) return 0.0;
            return f1.sign * f2.sign *
                   std::exp((d - 1.0) * std::log(t) - h * t + f1.log_abs +
                            f2.log_abs);
        };
    } else {
        f = [d, h, a, c, k](double t) -> double {
            if (t <= 0.0) return 0.0;
            const double lg0 = (d - 1.0) * std::log(t) - h * t;
            const double x = std::fabs(k) * t;
            if (x > 600.0) {
                // identical asymptotic mass as the explicit product form
                const LnVal f1 = ln_hyp1f1_point(a, c, x, 1e-12);
                const LnVal f2 = ln_hyp1f1_point(a, c, -x, 1e-12);
                return f1.sign * f2.sign *
                       std::exp(lg0 + f1.log_abs + f2.log_abs);
            }
            const double v =
                pfq({{a, c - a},
                     {c, c / 2.0, (c + 1.0) / 2.0},
                     x * x / 4.0},
                    1e-12)
                    .value;
            return v * std::exp(lg0);
        };
    }

    QuadratureOptions opts;
    opts.decay_rate = h - std::fabs(k);
    opts.split_point = (8.0 + std::max(d, 1.0)) / opts.decay_rate;
    opts.abs_scale = std::fabs(closed);
    const QuadratureResult q = integrate_semiinfinite(f, tol, opts);
    return make_identity_report("product_integral", q.value, closed,
                                Method::quadrature, Method::closed_form);
}

}  // namespace appell
