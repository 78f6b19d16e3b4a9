// Acceptance gate for the library + CLI artifact.  Each numbered criterion
// prints exactly one PASS/FAIL line on stdout; the process exit code is the
// number of failed criteria.  argv[1] must be the path to the built CLI
// binary (used by the determinism criterion).

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "appell/f2.hpp"
#include "appell/laplace.hpp"
#include "appell/oracle.hpp"
#include "appell/physics.hpp"
#include "appell/rng.hpp"
#include "appell/special.hpp"
#include "appell/verify.hpp"

using namespace appell;

namespace {

constexpr std::uint64_t suite_seed = 20260823ULL;

double rel_diff(double a, double b) {
    return std::fabs(a - b) /
           std::max({std::fabs(a), std::fabs(b), 1e-300});
}

// Accumulates sub-checks of one criterion and remembers the worst offender.
struct CheckSet {
    int total = 0;
    int failed = 0;
    double worst = 0.0;
    std::string first_failure;

    void tally(const std::string& label, double residual, double tol) {
        ++total;
        if (residual > worst) worst = residual;
        if (!(residual <= tol)) {
            ++failed;
            if (first_failure.empty()) {
                std::ostringstream os;
                os << label << " residual " << residual << " > " << tol;
                first_failure = os.str();
            }
        }
    }

    void fail(const std::string& label) {
        ++total;
        ++failed;
        if (first_failure.empty()) first_failure = label;
    }

    bool pass() const { return failed == 0; }
};

int report(int index, const std::string& what, const CheckSet& cs) {
    if (cs.pass()) {
        std::printf("PASS criterion %d: %s (%d/%d checks, worst residual %.2e)\n",
                    index, what.c_str(), cs.total - cs.failed, cs.total,
                    cs.worst);
        return 0;
    }
    std::printf("FAIL criterion %d: %s (%d of %d checks failed; first: %s)\n",
                index, what.c_str(), cs.failed, cs.total,
                cs.first_failure.c_str());
    return 1;
}

double signed_uniform(CounterRng& rng, double lo, double hi) {
    double v = rng.uniform(lo, hi);
    return rng.coin() ? v : -v;
}

// ---------------------------------------------------------------------------
// 1. Random weighted product integrals: closed route vs quadrature.
// ---------------------------------------------------------------------------

CheckSet criterion_product_integrals() {
    CheckSet cs;
    CounterRng rng(suite_seed ^ 0xAC01ULL);
    for (int i = 0; i < 300; ++i) {
        LaplaceProductSpec spec;
        spec.d = rng.uniform(0.5, 6.0);
        spec.h = rng.uniform(0.5, 3.0);
        spec.a = rng.uniform(0.2, 5.0);
        spec.b = rng.uniform(0.2, 5.0);
        spec.a_prime = rng.uniform(0.2, 5.0);
        spec.b_prime = rng.uniform(0.2, 5.0);
        double c1 = rng.uniform(0.05, 0.55);
        double c2 = rng.uniform(0.05, 0.75 - c1);
        spec.k = (rng.coin() ? c1 : -c1) * spec.h;
        spec.k_prime = (rng.coin() ? c2 : -c2) * spec.h;
        spec.has_second = true;

        std::ostringstream lab;
        lab << "product[" << i << "] d=" << spec.d << " h=" << spec.h
            << " a=" << spec.a << " b=" << spec.b << " k=" << spec.k
            << " a'=" << spec.a_prime << " b'=" << spec.b_prime
            << " k'=" << spec.k_prime;
        try {
            EvaluationResult closed = laplace_product(spec);
            QuadratureOptions opt = laplace_quadrature_options(spec);
            opt.abs_scale = std::fabs(closed.value);
            QuadratureResult q =
                integrate_semiinfinite(laplace_integrand(spec), 1e-10, opt);
            cs.tally(lab.str(), rel_diff(closed.value, q.value), 1e-8);
        } catch (const std::exception& e) {
            cs.fail(lab.str() + " threw: " + e.what());
        }
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 2. Catalog of named integrals, including the logarithmic branch and two
//    analytically known constants.
// ---------------------------------------------------------------------------

CheckSet criterion_catalog() {
    CheckSet cs;
    VerifySummary suite = verify_appendix(suite_seed);
    for (const VerifyCase& c : suite.cases) {
        double residual = c.pass ? c.report.rel_residual
                                 : std::max(c.report.rel_residual, 1.0);
        cs.tally(c.label, residual, c.tolerance);
    }
    try {
        IdentityReport log_branch = appendix_identity(
            "I.17", {{"a", 0.0}, {"h", 1.5}, {"k", 0.5}}, 1e-10);
        cs.tally("I.17 logarithmic branch", log_branch.rel_residual, 1e-8);
        IdentityReport pow_branch = appendix_identity(
            "I.17", {{"a", 0.8}, {"h", 1.5}, {"k", 0.5}}, 1e-10);
        cs.tally("I.17 generic branch", pow_branch.rel_residual, 1e-8);

        IdentityReport spot18 =
            appendix_identity("I.18", {{"h", 2.0}, {"k", 1.0}}, 1e-10);
        cs.tally("I.18 closed constant",
                 rel_diff(spot18.rhs, 4.0 * std::log(2.0) - 2.0), 1e-10);
        cs.tally("I.18 vs quadrature", spot18.rel_residual, 1e-8);

        IdentityReport spot21 =
            appendix_identity("I.21", {{"s", 2.0}, {"k", 1.0}}, 1e-10);
        cs.tally("I.21 closed constant",
                 rel_diff(spot21.rhs, std::log(4.0 / 3.0)), 1e-10);
        cs.tally("I.21 vs quadrature", spot21.rel_residual, 1e-8);
    } catch (const std::exception& e) {
        cs.fail(std::string("catalog spot checks threw: ") + e.what());
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 3. Finite re-expansions against the defining series and quadrature.
// 4. Contiguous relations at random points.
// Both delegate to the deterministic verification suites, which draw at least
// 50 overlap points per re-expansion shape, 20 outside-the-disc quadrature
// comparisons, and 100 points per relation.
// ---------------------------------------------------------------------------

CheckSet criterion_from_suite(const VerifySummary& suite) {
    CheckSet cs;
    for (const VerifyCase& c : suite.cases) {
        double residual = c.pass ? c.report.rel_residual
                                 : std::max(c.report.rel_residual, 1.0);
        cs.tally(c.label, residual, c.tolerance);
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 5. Confluent product identities and their integral forms.
// ---------------------------------------------------------------------------

CheckSet criterion_products() {
    CheckSet cs;
    CounterRng rng(suite_seed ^ 0xAC05ULL);
    for (int i = 0; i < 100; ++i) {
        double a = rng.uniform(0.3, 2.5);
        double c = rng.uniform(0.8, 3.2);
        double x = signed_uniform(rng, 0.1, 2.0);
        double y = signed_uniform(rng, 0.1, 2.0);
        std::ostringstream lab;
        lab << "expansion[" << i << "] a=" << a << " c=" << c << " x=" << x
            << " y=" << y;
        try {
            cs.tally(lab.str(),
                     product_expansion_residual(a, c, x, y).rel_residual,
                     1e-10);
        } catch (const std::exception& e) {
            cs.fail(lab.str() + " threw: " + e.what());
        }
    }
    for (int i = 0; i < 100; ++i) {
        double a = rng.uniform(0.3, 2.5);
        double c = rng.uniform(0.8, 3.2);
        double x = rng.uniform(0.2, 2.5);
        std::ostringstream lab;
        lab << "antisymmetric[" << i << "] a=" << a << " c=" << c
            << " x=" << x;
        try {
            cs.tally(lab.str(),
                     antisymmetric_product_residual(a, c, x).rel_residual,
                     1e-10);
        } catch (const std::exception& e) {
            cs.fail(lab.str() + " threw: " + e.what());
        }
    }
    for (int i = 0; i < 20; ++i) {
        double d = rng.uniform(0.6, 3.0);
        double h = rng.uniform(1.0, 2.5);
        double a = rng.uniform(0.3, 2.0);
        double c = rng.uniform(0.9, 3.0);
        double k = rng.uniform(0.1, 0.6) * h;
        ProductIntegralForm form = (i % 2 == 0)
                                       ? ProductIntegralForm::product_form
                                       : ProductIntegralForm::squared_form;
        std::ostringstream lab;
        lab << "integral[" << i << "] d=" << d << " h=" << h << " a=" << a
            << " c=" << c << " k=" << k
            << (i % 2 == 0 ? " product" : " squared");
        try {
            cs.tally(lab.str(),
                     product_integral_residual(d, h, a, c, k, form, 1e-10)
                         .rel_residual,
                     1e-8);
        } catch (const std::exception& e) {
            cs.fail(lab.str() + " threw: " + e.what());
        }
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 6. Orthonormality of both eigenbases on an 11 x 11 block.
// ---------------------------------------------------------------------------

double kratzer_moment_quadrature(const KratzerBasis& basis, long long n,
                                 long long m, double alpha, double abs_scale,
                                 double tol) {
    double eps_n = basis.B / (static_cast<double>(n) + basis.s + 1.0);
    double eps_m = basis.B / (static_cast<double>(m) + basis.s + 1.0);
    double decay = 0.5 * (eps_n + eps_m);
    QuadratureOptions opt;
    opt.decay_rate = decay;
    opt.split_point = (8.0 + 2.0 * basis.s + std::fabs(alpha) +
                       2.0 * static_cast<double>(n + m)) /
                      decay;
    opt.abs_scale = abs_scale;
    auto f = [&](double r) {
        double w = kratzer_wavefunction(n, basis, r) *
                   kratzer_wavefunction(m, basis, r);
        if (w == 0.0) return 0.0;
        return w * std::pow(r, alpha + 2.0);
    };
    return integrate_semiinfinite(f, tol, opt).value;
}

double oscillator_moment_quadrature(const OscillatorBasis& basis, long long n,
                                    long long m, double alpha,
                                    double abs_scale, double tol) {
    double T = std::sqrt(2.0 * static_cast<double>(std::max(n, m)) +
                         basis.gamma) + 5.0;
    QuadratureOptions opt;
    opt.split_point = T;
    opt.decay_rate = 2.0 * T;
    opt.abs_scale = abs_scale;
    // Half the inverse power on each factor keeps the intermediates
    // representable when the adaptive rule probes very small x.
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        double p = std::pow(x, -0.5 * alpha);
        return (gk_wavefunction(n, basis, x) * p) *
               (gk_wavefunction(m, basis, x) * p);
    };
    return integrate_semiinfinite(f, tol, opt).value;
}

CheckSet criterion_orthonormality() {
    CheckSet cs;
    OscillatorBasis osc = OscillatorBasis::from_gamma(2.3);
    for (long long n = 0; n <= 10; ++n) {
        for (long long m = 0; m <= 10; ++m) {
            std::ostringstream lab;
            lab << "oscillator[" << n << "," << m << "]";
            double target = (n == m) ? 1.0 : 0.0;
            try {
                cs.tally(lab.str(),
                         std::fabs(gk_overlap(n, m, osc) - target), 1e-10);
            } catch (const std::exception& e) {
                cs.fail(lab.str() + " threw: " + e.what());
            }
        }
    }
    KratzerBasis kra = KratzerBasis::make(1.0, 2.0, 0);
    for (long long n = 0; n <= 10; ++n) {
        for (long long m = n; m <= 10; ++m) {
            std::ostringstream lab;
            lab << "kratzer[" << n << "," << m << "]";
            double target = (n == m) ? 1.0 : 0.0;
            try {
                double v =
                    kratzer_moment_quadrature(kra, n, m, 0.0, 1.0, 1e-11);
                cs.tally(lab.str(), std::fabs(v - target), 1e-10);
            } catch (const std::exception& e) {
                cs.fail(lab.str() + " threw: " + e.what());
            }
        }
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 7. Perturbation matrix elements against direct quadrature, plus two
//    analytically known diagonal values.
// ---------------------------------------------------------------------------

CheckSet criterion_matrix_elements() {
    CheckSet cs;
    const double alphas[] = {0.5, 1.0, 2.0, 3.0};
    const double gammas[] = {1.6, 2.0, 3.0};
    for (double g : gammas) {
        OscillatorBasis basis = OscillatorBasis::from_gamma(g);
        for (double alpha : alphas) {
            if (!(alpha < 2.0 * g)) continue;
            for (long long n = 0; n <= 5; ++n) {
                for (long long m = n; m <= 5; ++m) {
                    std::ostringstream lab;
                    lab << "spiked[" << n << "," << m << "] gamma=" << g
                        << " alpha=" << alpha;
                    try {
                        double closed =
                            spiked_matrix_element(n, m, basis, alpha);
                        double quad = oscillator_moment_quadrature(
                            basis, n, m, alpha, std::fabs(closed), 1e-9);
                        cs.tally(lab.str(), rel_diff(closed, quad), 1e-8);
                    } catch (const std::exception& e) {
                        cs.fail(lab.str() + " threw: " + e.what());
                    }
                }
            }
        }
    }

    struct KratzerConfig {
        double A;
        double B;
        long long l;
    };
    const KratzerConfig configs[] = {{0.0, 2.0, 0}, {1.0, 2.0, 0},
                                     {0.0, 2.0, 1}};
    for (const KratzerConfig& cfg : configs) {
        KratzerBasis basis = KratzerBasis::make(cfg.A, cfg.B, cfg.l);
        for (double alpha : alphas) {
            for (long long n = 0; n <= 5; ++n) {
                for (long long m = n; m <= 5; ++m) {
                    std::ostringstream lab;
                    lab << "kratzer[" << n << "," << m << "] A=" << cfg.A
                        << " B=" << cfg.B << " l=" << cfg.l
                        << " alpha=" << alpha;
                    try {
                        double closed =
                            kratzer_matrix_element(n, m, basis, alpha);
                        double quad = kratzer_moment_quadrature(
                            basis, n, m, alpha, std::fabs(closed), 1e-9);
                        cs.tally(lab.str(), rel_diff(closed, quad), 1e-8);
                    } catch (const std::exception& e) {
                        cs.fail(lab.str() + " threw: " + e.what());
                    }
                }
            }
        }
    }

    try {
        OscillatorBasis g2 = OscillatorBasis::from_gamma(2.0);
        cs.tally("spiked spot <0|x^-2|0> = 1",
                 rel_diff(spiked_matrix_element(0, 0, g2, 2.0), 1.0), 1e-10);
        KratzerBasis coul = KratzerBasis::make(0.0, 2.0, 0);
        cs.tally("kratzer spot <0|r|0> = 3/2",
                 rel_diff(kratzer_matrix_element(0, 0, coul, 1.0), 1.5),
                 1e-10);
    } catch (const std::exception& e) {
        cs.fail(std::string("spot checks threw: ") + e.what());
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 8. Two-factor integral: closed form vs re-expansion at the symmetric decay
//    rate with a terminating first factor.
// ---------------------------------------------------------------------------

CheckSet criterion_gordon() {
    CheckSet cs;
    CounterRng rng(suite_seed ^ 0xAC08ULL);
    for (int i = 0; i < 12; ++i) {
        JspParams p;
        p.s = 0;
        p.p = 0;
        p.gamma = rng.uniform(0.8, 2.8);
        p.a = -static_cast<double>(1 + (i % 3));
        p.a_prime = rng.uniform(0.3, 2.2);
        p.k = rng.uniform(0.5, 1.2);
        p.k_prime = rng.uniform(0.3, p.k - 0.15);
        p.h = 0.5 * (p.k + p.k_prime);
        std::ostringstream lab;
        lab << "gordon[" << i << "] gamma=" << p.gamma << " a=" << p.a
            << " a'=" << p.a_prime << " k=" << p.k << " k'=" << p.k_prime;
        try {
            double closed =
                landau_lifshitz_J(p, JMethod::gordon_closed_form).value;
            double cont = landau_lifshitz_J(p, JMethod::continuation).value;
            cs.tally(lab.str(), rel_diff(closed, cont), 1e-9);
        } catch (const std::exception& e) {
            cs.fail(lab.str() + " threw: " + e.what());
        }
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 9. Closed finite sums of the coupled double series at integer parameters.
// ---------------------------------------------------------------------------

CheckSet criterion_finite_sums() {
    CheckSet cs;
    CounterRng rng(suite_seed ^ 0xAC09ULL);
    int produced = 0;
    while (produced < 25) {
        long long a = rng.uniform_int(0, 3);
        long long s = rng.uniform_int(0, 3);
        long long t = rng.uniform_int(0, 3);
        long long d = rng.uniform_int(0, 3);
        double x = signed_uniform(rng, 0.1, 0.75);
        double y = signed_uniform(rng, 0.1, 0.75);
        // The closed form involves negative powers of x - y, so nearly
        // coincident arguments amplify roundoff far beyond the target
        // tolerance; keep the draws well separated.
        if (std::fabs(x - y) < 0.3) continue;
        ++produced;
        std::ostringstream lab;
        lab << "finite[" << produced << "] a=" << a << " s=" << s
            << " t=" << t << " d=" << d << " x=" << x << " y=" << y;
        try {
            double closed = f1_finite_sum(a, s, t, d, x, y).value;
            double series = f1_series({static_cast<double>(a + 1),
                                       static_cast<double>(s + 1),
                                       static_cast<double>(t + 1),
                                       static_cast<double>(a + d + 2), x, y})
                                .value;
            cs.tally(lab.str(), rel_diff(closed, series), 1e-10);
        } catch (const std::exception& e) {
            cs.fail(lab.str() + " threw: " + e.what());
        }
    }
    return cs;
}

// ---------------------------------------------------------------------------
// 10. The CLI verification run is deterministic and exits cleanly.
// ---------------------------------------------------------------------------

struct CliRun {
    std::string output;
    int exit_code = -1;
    bool ok = false;
};

CliRun run_cli(const std::string& command) {
    CliRun run;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return run;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        run.output.append(buf, got);
    }
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) {
        run.exit_code = WEXITSTATUS(status);
        run.ok = true;
    }
    return run;
}

CheckSet criterion_cli_determinism(const std::string& cli_path) {
    CheckSet cs;
    std::string cmd = "\"" + cli_path + "\" verify all --seed 4242";
    CliRun first = run_cli(cmd);
    CliRun second = run_cli(cmd);
    if (!first.ok || !second.ok) {
        cs.fail("could not launch '" + cmd + "'");
        return cs;
    }
    cs.tally("first run exit code", static_cast<double>(first.exit_code),
             0.0);
    cs.tally("second run exit code", static_cast<double>(second.exit_code),
             0.0);
    if (first.output.empty()) {
        cs.fail("verification run produced no output");
    } else {
        ++cs.total;
    }
    if (first.output != second.output) {
        cs.fail("outputs of the two runs differ byte-wise");
    } else {
        ++cs.total;
    }
    return cs;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli_path = argv[1];

    int failures = 0;
    failures += report(1, "weighted product integrals match quadrature",
                       criterion_product_integrals());
    failures += report(2, "named integral catalog holds",
                       criterion_catalog());
    failures += report(3, "finite re-expansions agree with series and "
                          "quadrature",
                       criterion_from_suite(verify_continuations(suite_seed)));
    failures += report(4, "contiguous relations hold",
                       criterion_from_suite(verify_recurrences(suite_seed)));
    failures += report(5, "product identities and their integral forms hold",
                       criterion_products());
    failures += report(6, "both eigenbases are orthonormal",
                       criterion_orthonormality());
    failures += report(7, "matrix elements match direct quadrature",
                       criterion_matrix_elements());
    failures += report(8, "closed form agrees with the re-expansion at the "
                          "symmetric rate",
                       criterion_gordon());
    failures += report(9, "closed finite sums match the double series",
                       criterion_finite_sums());
    failures += report(10, "command-line verification is deterministic",
                       criterion_cli_determinism(cli_path));

    if (failures == 0) {
        std::printf("acceptance: all criteria satisfied\n");
    } else {
        std::printf("acceptance: %d criteria failed\n", failures);
    }
    return failures;
}
