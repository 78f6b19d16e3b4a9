#include "appell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "appell/f2.hpp"
#include "appell/laplace.hpp"
#include "appell/oracle.hpp"
#include "appell/physics.hpp"
#include "appell/rng.hpp"
#include "appell/special.hpp"

namespace appell {

namespace {

// Per-suite check tolerances (relative unless noted).
constexpr double appendix_rel_tol = 1e-8;
constexpr double recurrence_rel_tol = 1e-9;
constexpr double continuation_rel_tol = 1e-9;
constexpr double continuation_quad_rel_tol = 1e-8;
constexpr double overlap_abs_tol = 1e-10;  // entrywise, absolute
constexpr double element_rel_tol = 1e-8;
constexpr double spot_rel_tol = 1e-10;

// Inner evaluation tolerances, kept tighter than the check tolerances so the
// evaluators' own stopping noise does not consume the residual budget.
constexpr double eval_tol = 1e-13;
constexpr double quad_tol = 1e-10;

std::string fmt_params(const std::map<std::string, double>& params) {
    std::ostringstream os;
    os << std::setprecision(17);
    bool first = true;
    for (const auto& [name, value] : params) {
        if (!first) os << ",";
        os << name << "=" << value;
        first = false;
    }
    return os.str();
}

VerifyCase make_case(const char* suite, std::string label, IdentityReport rep,
                     double tol, bool absolute = false) {
    VerifyCase c;
    c.pass = (absolute ? rep.abs_residual : rep.rel_residual) <= tol;
    c.suite = suite;
    c.label = std::move(label);
    c.report = std::move(rep);
    c.tolerance = tol;
    return c;
}

VerifyCase error_case(const char* suite, std::string label, std::string id,
                      const std::exception& e, double tol) {
    IdentityReport rep;
    rep.identity_id = std::move(id);
    rep.abs_residual = std::numeric_limits<double>::infinity();
    rep.rel_residual = std::numeric_limits<double>::infinity();
    VerifyCase c;
    c.suite = suite;
    c.label = std::move(label) + " error: " + e.what();
    c.report = std::move(rep);
    c.tolerance = tol;
    c.pass = false;
    return c;
}

// ---------------------------------------------------------------------------
// Appendix catalog suite
// ---------------------------------------------------------------------------

double signed_uniform(CounterRng& rng, double lo, double hi) {
    double v = rng.uniform(lo, hi);
    return rng.coin() ? v : -v;
}

std::map<std::string, double> sample_appendix_params(const std::string& id,
                                                     std::size_t point,
                                                     CounterRng& rng) {
    std::map<std::string, double> p;
    if (id == "I.1") {
        p["d"] = rng.uniform(0.6, 3.5);
        p["h"] = rng.uniform(0.8, 2.5);
        p["a"] = rng.uniform(0.3, 3.0);
        p["k"] = signed_uniform(rng, 0.1, 0.6) * p["h"];
    } else if (id == "I.2") {
        p["d"] = rng.uniform(0.6, 3.5);
        p["h"] = rng.uniform(0.8, 2.5);
        p["a"] = rng.uniform(0.3, 3.0);
    } else if (id == "I.3") {
        p["a"] = rng.uniform(0.4, 3.0);
        double off = rng.uniform(0.3, 1.5);
        bool down = rng.coin();
        p["b"] = (down && p["a"] - off > 0.25) ? p["a"] - off : p["a"] + off;
        p["h"] = rng.uniform(0.8, 2.5);
    } else if (id == "I.16" || id == "I.17") {
        p["a"] = (id == "I.17" && point == 0) ? 0.0 : rng.uniform(0.15, 1.8);
        p["h"] = rng.uniform(1.0, 2.5);
        p["k"] = signed_uniform(rng, 0.15, 0.55) * p["h"];
    } else if (id == "I.18") {
        p["h"] = rng.uniform(1.0, 2.5);
        p["k"] = signed_uniform(rng, 0.15, 0.55) * p["h"];
    } else if (id == "I.19") {
        p["a"] = rng.uniform(0.4, 2.2);
        p["k"] = rng.uniform(0.2, 1.2);
        p["kp"] = rng.uniform(0.2, 1.2);
        p["s"] = 0.5 * (p["k"] + p["kp"]) + rng.uniform(0.3, 1.5);
    } else if (id == "I.20") {
        p["a"] = rng.uniform(0.4, 2.2);
        p["k"] = rng.uniform(0.2, 1.2);
        p["s"] = p["k"] + rng.uniform(0.3, 1.5);
    } else if (id == "I.21") {
        p["k"] = rng.uniform(0.2, 1.2);
        p["s"] = p["k"] + rng.uniform(0.3, 1.5);
    } else {
        // I.4 ... I.15: one exponent parameter with tied argument ratios.
        p["a"] = rng.uniform(0.6, 2.2);
        p["h"] = rng.uniform(1.0, 2.5);
        p["k"] = signed_uniform(rng, 0.12, 0.55) * p["h"];
    }
    return p;
}

VerifySummary run_appendix(std::uint64_t seed) {
    VerifySummary out;
    CounterRng rng(seed ^ 0x41505031ULL);
    for (const auto& entry : appendix_catalog()) {
        for (std::size_t pt = 0; pt < 5; ++pt) {
            std::map<std::string, double> params;
            for (int attempt = 0; attempt < 64; ++attempt) {
                params = sample_appendix_params(entry.id, pt, rng);
                if (entry.domain_check(params).empty()) break;
            }
            std::ostringstream lab;
            lab << entry.id << "[" << pt << "] " << fmt_params(params);
            try {
                IdentityReport rep = appendix_identity(entry.id, params, quad_tol);
                out.add(make_case("appendix", lab.str(), std::move(rep),
                                  appendix_rel_tol));
            } catch (const std::exception& e) {
                out.add(error_case("appendix", lab.str(), entry.id, e,
                                   appendix_rel_tol));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recurrence suite
// ---------------------------------------------------------------------------

void sample_arguments(CounterRng& rng, double& x, double& y) {
    double ax = rng.uniform(0.05, 0.55);
    double ay = rng.uniform(0.05, std::min(0.78 - ax, 0.55));
    x = rng.coin() ? ax : -ax;
    y = rng.coin() ? ay : -ay;
}

F2Params sample_recurrence_point(RecurrenceId id, CounterRng& rng) {
    F2Params p{};
    sample_arguments(rng, p.x, p.y);
    p.a = rng.uniform(-1.5, 2.5);
    p.a_prime = rng.uniform(-1.5, 2.5);
    p.b = rng.uniform(0.6, 3.4);
    p.b_prime = rng.uniform(0.6, 3.4);
    p.d = rng.uniform(0.3, 3.4);
    switch (id) {
        case RecurrenceId::r17:
            break;
        case RecurrenceId::r18:
            p.d = p.b_prime + static_cast<double>(rng.uniform_int(1, 3));
            break;
        case RecurrenceId::r19:
            p.d = p.b_prime + 1.0;
            break;
        case RecurrenceId::r20:
            p.b_prime = p.b;
            p.d = p.b + 1.0;
            break;
        case RecurrenceId::r21:
            break;
        case RecurrenceId::r22:
            p.b = rng.uniform(1.4, 3.4);
            break;
        case RecurrenceId::r23:
            p.b = rng.uniform(1.4, 3.4);
            if (std::fabs(p.d - 1.0) < 0.15) p.d += 0.45;
            break;
    }
    return p;
}

std::map<std::string, double> f2_param_map(const F2Params& p) {
    return {{"d", p.d},       {"a", p.a}, {"ap", p.a_prime}, {"b", p.b},
            {"bp", p.b_prime}, {"x", p.x}, {"y", p.y}};
}

VerifySummary run_recurrences(std::uint64_t seed) {
    VerifySummary out;
    CounterRng rng(seed ^ 0x52454355ULL);
    const RecurrenceId ids[] = {RecurrenceId::r17, RecurrenceId::r18,
                                RecurrenceId::r19, RecurrenceId::r20,
                                RecurrenceId::r21, RecurrenceId::r22,
                                RecurrenceId::r23};
    for (RecurrenceId id : ids) {
        for (std::size_t pt = 0; pt < 100; ++pt) {
            F2Params p = sample_recurrence_point(id, rng);
            std::ostringstream lab;
            lab << recurrence_name(id) << "[" << pt << "] "
                << fmt_params(f2_param_map(p));
            try {
                IdentityReport rep = f2_recurrence_residual(id, p, eval_tol);
                out.add(make_case("recurrences", lab.str(), std::move(rep),
                                  recurrence_rel_tol));
            } catch (const std::exception& e) {
                out.add(error_case("recurrences", lab.str(), recurrence_name(id),
                                   e, recurrence_rel_tol));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Continuation suite
// ---------------------------------------------------------------------------

// Overlap-domain draw: arguments small enough that the defining double series
// is an accurate reference.
ContinuationParams sample_overlap_point(CounterRng& rng, long long s_min,
                                        long long s_extra, bool denom_down) {
    ContinuationParams cp{};
    cp.p = rng.uniform_int(0, 2);
    cp.s = std::max(s_min, cp.p * (denom_down ? 0 : 1)) +
           rng.uniform_int(0, static_cast<long long>(s_extra));
    double c_floor = denom_down ? static_cast<double>(cp.p) + 0.4 : 0.8;
    cp.c = rng.uniform(c_floor, c_floor + 2.4);
    cp.a = rng.uniform(0.25, 2.4);
    cp.a_prime = rng.uniform(0.25, 2.4);
    cp.h = 1.0;
    cp.k = rng.uniform(0.08, 0.4);
    cp.k_prime = rng.uniform(0.08, std::min(0.4, 0.7 - cp.k));
    return cp;
}

F2Params continued_f2(const ContinuationParams& cp, bool denom_down) {
    F2Params p{};
    p.d = cp.c + static_cast<double>(cp.s);
    p.a = cp.a;
    p.a_prime = cp.a_prime;
    p.b = cp.c;
    p.b_prime = denom_down ? cp.c - static_cast<double>(cp.p)
                           : cp.c + static_cast<double>(cp.p);
    p.x = cp.k / cp.h;
    p.y = cp.k_prime / cp.h;
    return p;
}

std::map<std::string, double> continuation_param_map(const ContinuationParams& cp) {
    return {{"c", cp.c},
            {"s", static_cast<double>(cp.s)},
            {"p", static_cast<double>(cp.p)},
            {"a", cp.a},
            {"ap", cp.a_prime},
            {"k", cp.k},
            {"kp", cp.k_prime},
            {"h", cp.h}};
}

void continuation_vs_series(VerifySummary& out, CounterRng& rng,
                            const std::string& id, bool lemma8,
                            ContinuationForm form, long long s_min,
                            long long s_extra, std::size_t count) {
    for (std::size_t pt = 0; pt < count; ++pt) {
        ContinuationParams cp = sample_overlap_point(rng, s_min, s_extra, !lemma8);
        if (lemma8 && s_min > 0) cp.s = cp.p + rng.uniform_int(1, 2);
        if (lemma8 && s_min == 0) cp.s = cp.p;  // collapsed equal-offset case
        std::ostringstream lab;
        lab << id << "[" << pt << "] " << fmt_params(continuation_param_map(cp));
        try {
            EvaluationResult cont =
                lemma8 ? f2_continuation_lemma8(cp, form, eval_tol)
                       : f2_continuation_lemma6(cp, form, eval_tol);
            EvaluationResult ref = f2_series(continued_f2(cp, !lemma8), eval_tol);
            IdentityReport rep = make_identity_report(id, cont.value, ref.value,
                                                      Method::continuation,
                                                      Method::series);
            out.add(make_case("continuations", lab.str(), std::move(rep),
                              continuation_rel_tol));
        } catch (const std::exception& e) {
            out.add(error_case("continuations", lab.str(), id, e,
                               continuation_rel_tol));
        }
    }
}

void lemma6_vs_quadrature(VerifySummary& out, CounterRng& rng,
                          std::size_t count) {
    for (std::size_t pt = 0; pt < count; ++pt) {
        ContinuationParams cp{};
        cp.p = rng.uniform_int(0, 2);
        cp.c = rng.uniform(static_cast<double>(cp.p) + 0.4,
                           static_cast<double>(cp.p) + 2.6);
        cp.s = rng.uniform_int(0, 2);
        long long n = rng.uniform_int(1, 3);
        cp.a = -static_cast<double>(n);
        cp.a_prime = rng.uniform(0.25, 2.0);
        cp.h = 1.0;
        cp.k = rng.uniform(0.7, 0.9);
        cp.k_prime = rng.uniform(std::max(0.25, 1.02 - cp.k), 0.4);
        ContinuationForm form =
            (pt % 2 == 0) ? ContinuationForm::hyp2f1_form : ContinuationForm::f1_form;
        std::string id = (pt % 2 == 0) ? "lemma6.hyp2f1_form.quadrature"
                                       : "lemma6.f1_form.quadrature";
        std::ostringstream lab;
        lab << id << "[" << pt << "] " << fmt_params(continuation_param_map(cp));
        try {
            double d = cp.c + static_cast<double>(cp.s);
            EvaluationResult cont = f2_continuation_lemma6(cp, form, eval_tol);
            double closed = gamma_fn(d) * real_pow(cp.h, -d) * cont.value;
            LaplaceProductSpec spec;
            spec.d = d;
            spec.h = cp.h;
            spec.a = cp.a;
            spec.b = cp.c;
            spec.k = cp.k;
            spec.a_prime = cp.a_prime;
            spec.b_prime = cp.c - static_cast<double>(cp.p);
            spec.k_prime = cp.k_prime;
            QuadratureOptions opt = laplace_quadrature_options(spec);
            opt.abs_scale = std::fabs(closed);
            QuadratureResult quad = integrate_semiinfinite(
                laplace_integrand(spec, eval_tol), quad_tol, opt);
            IdentityReport rep = make_identity_report(
                id, closed, quad.value, Method::continuation, Method::quadrature);
            out.add(make_case("continuations", lab.str(), std::move(rep),
                              continuation_quad_rel_tol));
        } catch (const std::exception& e) {
            out.add(error_case("continuations", lab.str(), id, e,
                               continuation_quad_rel_tol));
        }
    }
}

void lemma9_vs_series(VerifySummary& out, CounterRng& rng, EqualParamForm form,
                      const std::string& id, std::size_t count) {
    for (std::size_t pt = 0; pt < count; ++pt) {
        double d = rng.uniform(0.4, 3.0);
        double a = rng.uniform(0.3, 2.2);
        double c = rng.uniform(0.8, 3.2);
        double k, kp;
        if (form == EqualParamForm::four_f3) {
            k = rng.uniform(0.08, 0.45);
            kp = -k;
        } else {
            k = rng.uniform(0.08, 0.4);
            kp = rng.uniform(0.08, std::min(0.4, 0.7 - k));
        }
        std::map<std::string, double> pm = {
            {"d", d}, {"a", a}, {"c", c}, {"k", k}, {"kp", kp}, {"h", 1.0}};
        std::ostringstream lab;
        lab << id << "[" << pt << "] " << fmt_params(pm);
        try {
            EvaluationResult v = f2_equal_params_lemma9(d, a, c, k, kp, 1.0,
                                                        eval_tol, form);
            F2Params p{d, a, a, c, c, k, kp};
            EvaluationResult ref = f2_series(p, eval_tol);
            IdentityReport rep = make_identity_report(id, v.value, ref.value,
                                                      v.method, Method::series);
            out.add(make_case("continuations", lab.str(), std::move(rep),
                              continuation_rel_tol));
        } catch (const std::exception& e) {
            out.add(error_case("continuations", lab.str(), id, e,
                               continuation_rel_tol));
        }
    }
}

VerifySummary run_continuations(std::uint64_t seed) {
    VerifySummary out;
    CounterRng rng(seed ^ 0x434F4E54ULL);
    continuation_vs_series(out, rng, "lemma6.f1_form", false,
                           ContinuationForm::f1_form, 0, 2, 50);
    continuation_vs_series(out, rng, "lemma6.hyp2f1_form", false,
                           ContinuationForm::hyp2f1_form, 0, 2, 50);
    continuation_vs_series(out, rng, "lemma8.f1_form", true,
                           ContinuationForm::f1_form, 1, 0, 50);
    continuation_vs_series(out, rng, "lemma8.hyp2f1_form", true,
                           ContinuationForm::hyp2f1_form, 1, 0, 50);
    continuation_vs_series(out, rng, "lemma8.collapsed", true,
                           ContinuationForm::hyp2f1_form, 0, 0, 50);
    lemma6_vs_quadrature(out, rng, 20);
    lemma9_vs_series(out, rng, EqualParamForm::general_sum, "lemma9.general_sum",
                     50);
    lemma9_vs_series(out, rng, EqualParamForm::four_f3, "lemma9.four_f3", 50);
    return out;
}

// ---------------------------------------------------------------------------
// Physics suite
// ---------------------------------------------------------------------------

double oscillator_element_quadrature(const OscillatorBasis& basis, long long n,
                                     long long m, double alpha,
                                     double abs_scale) {
    double T = std::sqrt(2.0 * static_cast<double>(std::max(n, m)) +
                         basis.gamma) + 5.0;
    QuadratureOptions opt;
    opt.split_point = T;
    opt.decay_rate = 2.0 * T;
    opt.abs_scale = abs_scale;
    // Split the inverse power across the two factors so the intermediate
    // stays representable when the adaptive rule probes very small x.
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        double p = std::pow(x, -0.5 * alpha);
        return (gk_wavefunction(n, basis, x) * p) *
               (gk_wavefunction(m, basis, x) * p);
    };
    return integrate_semiinfinite(f, quad_tol, opt).value;
}

double kratzer_element_quadrature(const KratzerBasis& basis, long long n,
                                  long long m, double alpha, double abs_scale,
                                  double tol = quad_tol) {
    double eps_n = basis.B / (static_cast<double>(n) + basis.s + 1.0);
    double eps_m = basis.B / (static_cast<double>(m) + basis.s + 1.0);
    double decay = 0.5 * (eps_n + eps_m);
    QuadratureOptions opt;
    opt.decay_rate = decay;
    opt.split_point =
        (8.0 + 2.0 * basis.s + std::fabs(alpha) +
         2.0 * static_cast<double>(n + m)) / decay;
    opt.abs_scale = abs_scale;
    auto f = [&](double r) {
        double w = kratzer_wavefunction(n, basis, r) *
                   kratzer_wavefunction(m, basis, r);
        if (w == 0.0) return 0.0;
        return w * std::pow(r, alpha + 2.0);
    };
    return integrate_semiinfinite(f, tol, opt).value;
}

VerifySummary run_physics(std::uint64_t seed) {
    VerifySummary out;
    CounterRng rng(seed ^ 0x50485953ULL);

    // Oscillator orthonormality through the unit-argument double series.
    double gammas[2] = {rng.uniform(1.5, 2.2), rng.uniform(2.2, 3.0)};
    for (double g : gammas) {
        OscillatorBasis basis = OscillatorBasis::from_gamma(g);
        for (long long n = 0; n < 6; ++n) {
            for (long long m = n; m < 6; ++m) {
                std::ostringstream lab;
                lab << "oscillator.overlap[" << n << "," << m << "] gamma="
                    << std::setprecision(17) << g;
                double target = (n == m) ? 1.0 : 0.0;
                try {
                    double v = gk_overlap(n, m, basis);
                    IdentityReport rep = make_identity_report(
                        "oscillator.overlap", v, target, Method::reduction,
                        Method::closed_form);
                    out.add(make_case("physics", lab.str(), std::move(rep),
                                      overlap_abs_tol, /*absolute=*/true));
                } catch (const std::exception& e) {
                    out.add(error_case("physics", lab.str(),
                                       "oscillator.overlap", e, overlap_abs_tol));
                }
            }
        }
    }

    // Kratzer orthonormality against direct quadrature of the radial density.
    {
        KratzerBasis basis = KratzerBasis::make(rng.uniform(0.0, 1.5),
                                                rng.uniform(1.5, 3.0),
                                                rng.uniform_int(0, 1));
        for (long long n = 0; n < 6; ++n) {
            for (long long m = n; m < 6; ++m) {
                std::ostringstream lab;
                lab << "kratzer.overlap[" << n << "," << m << "] A=" << basis.A
                    << ",B=" << basis.B << ",l=" << basis.l;
                double target = (n == m) ? 1.0 : 0.0;
                try {
                    double v = kratzer_element_quadrature(basis, n, m, 0.0, 1.0,
                                                          1e-11);
                    IdentityReport rep = make_identity_report(
                        "kratzer.overlap", v, target, Method::quadrature,
                        Method::closed_form);
                    out.add(make_case("physics", lab.str(), std::move(rep),
                                      overlap_abs_tol, /*absolute=*/true));
                } catch (const std::exception& e) {
                    out.add(error_case("physics", lab.str(), "kratzer.overlap",
                                       e, overlap_abs_tol));
                }
            }
        }
    }

    // Singular-perturbation elements against quadrature.
    for (double g : gammas) {
        OscillatorBasis basis = OscillatorBasis::from_gamma(g);
        for (double alpha : {0.5, 2.0}) {
            for (long long n = 0; n < 3; ++n) {
                for (long long m = n; m < 3; ++m) {
                    std::ostringstream lab;
                    lab << "spiked.element[" << n << "," << m << "] gamma="
                        << std::setprecision(17) << g << ",alpha=" << alpha;
                    try {
                        double closed = spiked_matrix_element(n, m, basis, alpha);
                        double quad = oscillator_element_quadrature(
                            basis, n, m, alpha, std::fabs(closed));
                        IdentityReport rep = make_identity_report(
                            "spiked.element", closed, quad, Method::closed_form,
                            Method::quadrature);
                        out.add(make_case("physics", lab.str(), std::move(rep),
                                          element_rel_tol));
                    } catch (const std::exception& e) {
                        out.add(error_case("physics", lab.str(),
                                           "spiked.element", e, element_rel_tol));
                    }
                }
            }
        }
    }

    // Radial moment elements against quadrature.
    {
        KratzerBasis basis = KratzerBasis::make(rng.uniform(0.0, 1.5),
                                                rng.uniform(1.5, 3.0), 0);
        for (double alpha : {1.0, 2.5}) {
            for (long long n = 0; n < 3; ++n) {
                for (long long m = n; m < 3; ++m) {
                    std::ostringstream lab;
                    lab << "kratzer.element[" << n << "," << m << "] A="
                        << std::setprecision(17) << basis.A << ",B=" << basis.B
                        << ",alpha=" << alpha;
                    try {
                        double closed = kratzer_matrix_element(n, m, basis, alpha);
                        double quad = kratzer_element_quadrature(
                            basis, n, m, alpha, std::fabs(closed));
                        IdentityReport rep = make_identity_report(
                            "kratzer.element", closed, quad, Method::closed_form,
                            Method::quadrature);
                        out.add(make_case("physics", lab.str(), std::move(rep),
                                          element_rel_tol));
                    } catch (const std::exception& e) {
                        out.add(error_case("physics", lab.str(),
                                           "kratzer.element", e,
                                           element_rel_tol));
                    }
                }
            }
        }
    }

    // Analytic spot values.
    try {
        OscillatorBasis b2 = OscillatorBasis::from_gamma(2.0);
        double v = spiked_matrix_element(0, 0, b2, 2.0);
        out.add(make_case("physics", "spiked.spot[0,0] gamma=2,alpha=2",
                          make_identity_report("spiked.spot", v, 1.0,
                                               Method::closed_form,
                                               Method::closed_form),
                          spot_rel_tol));
    } catch (const std::exception& e) {
        out.add(error_case("physics", "spiked.spot[0,0] gamma=2,alpha=2",
                           "spiked.spot", e, spot_rel_tol));
    }
    try {
        KratzerBasis coulomb = KratzerBasis::make(0.0, 2.0, 0);
        double v = kratzer_matrix_element(0, 0, coulomb, 1.0);
        out.add(make_case("physics", "kratzer.spot[0,0] A=0,B=2,l=0,alpha=1",
                          make_identity_report("kratzer.spot", v, 1.5,
                                               Method::closed_form,
                                               Method::closed_form),
                          spot_rel_tol));
    } catch (const std::exception& e) {
        out.add(error_case("physics", "kratzer.spot[0,0] A=0,B=2,l=0,alpha=1",
                           "kratzer.spot", e, spot_rel_tol));
    }

    return out;
}

}  // namespace

VerifySummary verify_appendix(std::uint64_t seed) { return run_appendix(seed); }
VerifySummary verify_recurrences(std::uint64_t seed) {
    return run_recurrences(seed);
}
VerifySummary verify_continuations(std::uint64_t seed) {
    return run_continuations(seed);
}
VerifySummary verify_physics(std::uint64_t seed) { return run_physics(seed); }

VerifySummary verify_all(std::uint64_t seed) {
    VerifySummary out = run_appendix(seed);
    out.append(run_recurrences(seed));
    out.append(run_continuations(seed));
    out.append(run_physics(seed));
    return out;
}

VerifySummary run_verify_suite(const std::string& suite, std::uint64_t seed) {
    if (suite == "appendix") return verify_appendix(seed);
    if (suite == "recurrences") return verify_recurrences(seed);
    if (suite == "continuations") return verify_continuations(seed);
    if (suite == "physics") return verify_physics(seed);
    if (suite == "all") return verify_all(seed);
    throw Error(ErrorKind::usage, "unknown verify suite '" + suite +
                                      "' (expected appendix, recurrences, "
                                      "continuations, physics, or all)");
}

}  // namespace appell
