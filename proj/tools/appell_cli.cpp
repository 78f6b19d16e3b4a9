#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "appell/f2.hpp"
#include "appell/laplace.hpp"
#include "appell/oracle.hpp"
#include "appell/physics.hpp"
#include "appell/special.hpp"
#include "appell/types.hpp"
#include "appell/verify.hpp"

using nlohmann::json;
using namespace appell;

namespace {

// Residual thresholds for the optional cross-checks; failing a check maps to
// exit code 1 even though the primary value was produced.
constexpr double brute_force_check_tol = 1e-10;
constexpr double quadrature_check_tol = 1e-8;

struct GlobalOptions {
    double tol = default_tolerance;
    std::string format = "json";
    std::uint64_t seed = 0;
};

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::parameter: return "parameter";
        case ErrorKind::domain: return "domain";
        case ErrorKind::divergence: return "divergence";
        case ErrorKind::convergence: return "convergence";
        case ErrorKind::singular: return "singular";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

// Usage and domain problems exit 2; numerical failures exit 1.
int error_exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::parameter:
        case ErrorKind::domain:
        case ErrorKind::usage:
            return 2;
        default:
            return 1;
    }
}

void validate_tolerance(double tol) {
    if (!(tol > 0.0) || tol > 1e-2) {
        throw Error(ErrorKind::usage, "--tol must lie in (0, 1e-2]");
    }
}

double default_tol_from_env() {
    const char* raw = std::getenv("APPELL_TOL");
    if (raw == nullptr || *raw == '\0') return default_tolerance;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0) || v > 1e-2) {
        throw Error(ErrorKind::usage,
                    "environment variable APPELL_TOL must be a number in "
                    "(0, 1e-2]");
    }
    return v;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return std::string(buf);
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json result_to_json(const EvaluationResult& r) {
    json j;
    j["value"] = r.value;
    j["abs_error"] = r.abs_error_estimate;
    j["method"] = method_name(r.method);
    j["terms"] = r.terms_used;
    return j;
}

struct CheckResult {
    double oracle_value;
    double rel_residual;
};

int emit_scalar(const GlobalOptions& g, const std::string& command,
                const json& inputs, const EvaluationResult& r,
                const std::optional<CheckResult>& check, double check_tol) {
    if (g.format == "json") {
        json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["result"] = result_to_json(r);
        if (check) {
            json c;
            c["oracle_value"] = check->oracle_value;
            c["rel_residual"] = check->rel_residual;
            doc["check"] = c;
        }
        print_json(doc);
    } else if (g.format == "csv") {
        std::cout << "value,abs_error,method,terms";
        if (check) std::cout << ",oracle_value,rel_residual";
        std::cout << "\n"
                  << fmt17(r.value) << "," << fmt17(r.abs_error_estimate) << ","
                  << method_name(r.method) << "," << r.terms_used;
        if (check) {
            std::cout << "," << fmt17(check->oracle_value) << ","
                      << fmt17(check->rel_residual);
        }
        std::cout << "\n";
    } else {
        std::cout << command << ": value = " << fmt17(r.value) << "\n"
                  << "  method = " << method_name(r.method) << ", abs_error ~ "
                  << fmt3(r.abs_error_estimate) << ", terms = " << r.terms_used
                  << "\n";
        if (check) {
            std::cout << "  check: oracle = " << fmt17(check->oracle_value)
                      << ", rel_residual = " << fmt3(check->rel_residual)
                      << "\n";
        }
    }
    if (check && !(check->rel_residual <= check_tol)) {
        std::cerr << "check failed: relative residual "
                  << fmt3(check->rel_residual) << " exceeds "
                  << fmt3(check_tol) << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// f2 / f1
// ---------------------------------------------------------------------------

struct F2Args {
    double d = 0, a = 0, ap = 0, b = 0, bp = 0, x = 0, y = 0;
    bool brute = false;
};

int run_f2(const GlobalOptions& g, const F2Args& fa) {
    validate_tolerance(g.tol);
    F2Params p{fa.d, fa.a, fa.ap, fa.b, fa.bp, fa.x, fa.y};
    EvaluationResult r = f2_eval(p, g.tol);
    std::optional<CheckResult> check;
    if (fa.brute) {
        double oracle = f2_bruteforce(p, 12);
        double rel = std::fabs(r.value - oracle) /
                     std::max({std::fabs(r.value), std::fabs(oracle), 1e-300});
        check = CheckResult{oracle, rel};
    }
    json inputs;
    inputs["d"] = fa.d;
    inputs["a"] = fa.a;
    inputs["ap"] = fa.ap;
    inputs["b"] = fa.b;
    inputs["bp"] = fa.bp;
    inputs["x"] = fa.x;
    inputs["y"] = fa.y;
    inputs["tol"] = g.tol;
    return emit_scalar(g, "f2", inputs, r, check, brute_force_check_tol);
}

struct F1Args {
    double a = 0, b = 0, bp = 0, c = 0, x = 0, y = 0;
    bool finite_sum = false;
};

int run_f1(const GlobalOptions& g, const F1Args& fa) {
    validate_tolerance(g.tol);
    EvaluationResult r;
    if (fa.finite_sum) {
        auto as_index = [](double v, const char* what) -> long long {
            if (!is_integer(v) || v < -integer_match_tolerance) {
                throw Error(ErrorKind::usage,
                            std::string("--finite-sum requires ") + what);
            }
            return std::llround(v);
        };
        long long ia = as_index(fa.a - 1.0, "a to be an integer >= 1");
        long long is = as_index(fa.b - 1.0, "b to be an integer >= 1");
        long long it = as_index(fa.bp - 1.0, "bp to be an integer >= 1");
        long long id = as_index(fa.c - fa.a - 1.0,
                                "c - a to be an integer >= 1");
        r = f1_finite_sum(ia, is, it, id, fa.x, fa.y);
    } else {
        F1Params p{fa.a, fa.b, fa.bp, fa.c, fa.x, fa.y};
        r = f1_series(p, g.tol);
    }
    json inputs;
    inputs["a"] = fa.a;
    inputs["b"] = fa.b;
    inputs["bp"] = fa.bp;
    inputs["c"] = fa.c;
    inputs["x"] = fa.x;
    inputs["y"] = fa.y;
    inputs["finite_sum"] = fa.finite_sum;
    inputs["tol"] = g.tol;
    return emit_scalar(g, "f1", inputs, r, std::nullopt, 0.0);
}

// ---------------------------------------------------------------------------
// integral
// ---------------------------------------------------------------------------

struct IntegralArgs {
    double d = 0, h = 0, a = 0, b = 0, k = 0;
    double ap = 0, bp = 0, kp = 0;
    double gamma = 0;
    long long s = 0, p = 0;
    std::string method = "auto";
    bool check = false;
    bool j_mode = false;
    bool has_second = false;
};

JMethod parse_j_method(const std::string& name) {
    if (name == "auto") return JMethod::automatic;
    if (name == "gordon") return JMethod::gordon_closed_form;
    if (name == "continuation") return JMethod::continuation;
    throw Error(ErrorKind::usage, "unknown --method '" + name + "'");
}

int run_integral(const GlobalOptions& g, const IntegralArgs& ia) {
    validate_tolerance(g.tol);
    EvaluationResult r;
    LaplaceProductSpec spec;
    json inputs;
    if (ia.j_mode) {
        JspParams jp{ia.gamma, ia.s, ia.p, ia.a, ia.ap, ia.k, ia.kp, ia.h};
        r = landau_lifshitz_J(jp, parse_j_method(ia.method), g.tol);
        spec.d = ia.gamma + static_cast<double>(ia.s);
        spec.h = ia.h;
        spec.a = ia.a;
        spec.b = ia.gamma;
        spec.k = ia.k;
        spec.has_second = true;
        spec.a_prime = ia.ap;
        spec.b_prime = ia.gamma - static_cast<double>(ia.p);
        spec.k_prime = ia.kp;
        inputs["gamma"] = ia.gamma;
        inputs["s"] = ia.s;
        inputs["p"] = ia.p;
        inputs["a"] = ia.a;
        inputs["ap"] = ia.ap;
        inputs["k"] = ia.k;
        inputs["kp"] = ia.kp;
        inputs["h"] = ia.h;
        inputs["method"] = ia.method;
    } else {
        spec.d = ia.d;
        spec.h = ia.h;
        spec.a = ia.a;
        spec.b = ia.b;
        spec.k = ia.k;
        spec.has_second = ia.has_second;
        spec.a_prime = ia.ap;
        spec.b_prime = ia.bp;
        spec.k_prime = ia.kp;
        r = ia.has_second ? laplace_product(spec, g.tol)
                          : laplace_single(ia.d, ia.h, ia.a, ia.b, ia.k, g.tol);
        inputs["d"] = ia.d;
        inputs["h"] = ia.h;
        inputs["a"] = ia.a;
        inputs["b"] = ia.b;
        inputs["k"] = ia.k;
        if (ia.has_second) {
            inputs["ap"] = ia.ap;
            inputs["bp"] = ia.bp;
            inputs["kp"] = ia.kp;
        }
    }
    inputs["tol"] = g.tol;
    std::optional<CheckResult> check;
    if (ia.check) {
        QuadratureOptions opt = laplace_quadrature_options(spec);
        opt.abs_scale = std::fabs(r.value);
        QuadratureResult q = integrate_semiinfinite(
            laplace_integrand(spec, g.tol), std::max(g.tol, 1e-10), opt);
        double rel = std::fabs(r.value - q.value) /
                     std::max({std::fabs(r.value), std::fabs(q.value), 1e-300});
        check = CheckResult{q.value, rel};
    }
    return emit_scalar(g, "integral", inputs, r, check, quadrature_check_tol);
}

// ---------------------------------------------------------------------------
// appendix
// ---------------------------------------------------------------------------

struct AppendixArgs {
    std::string id;
    std::vector<std::string> sets;
    bool list = false;
};

int run_appendix(const GlobalOptions& g, const AppendixArgs& aa) {
    validate_tolerance(g.tol);
    if (aa.list) {
        if (g.format == "json") {
            json cat = json::array();
            for (const auto& entry : appendix_catalog()) {
                json e;
                e["id"] = entry.id;
                e["params"] = entry.param_names;
                cat.push_back(e);
            }
            json doc;
            doc["command"] = "appendix";
            doc["catalog"] = cat;
            print_json(doc);
        } else if (g.format == "csv") {
            std::cout << "id,params\n";
            for (const auto& entry : appendix_catalog()) {
                std::cout << entry.id << ",\"";
                for (std::size_t i = 0; i < entry.param_names.size(); ++i) {
                    std::cout << (i ? " " : "") << entry.param_names[i];
                }
                std::cout << "\"\n";
            }
        } else {
            for (const auto& entry : appendix_catalog()) {
                std::cout << entry.id << ":";
                for (const auto& name : entry.param_names) {
                    std::cout << " " << name;
                }
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (aa.id.empty()) {
        throw Error(ErrorKind::usage, "appendix requires --id (or --list)");
    }
    std::map<std::string, double> params;
    for (const std::string& s : aa.sets) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorKind::usage,
                        "--set expects name=value, got '" + s + "'");
        }
        const char* start = s.c_str() + eq + 1;
        char* end = nullptr;
        double v = std::strtod(start, &end);
        if (end == start || *end != '\0') {
            throw Error(ErrorKind::usage,
                        "--set expects a numeric value, got '" + s + "'");
        }
        params[s.substr(0, eq)] = v;
    }
    IdentityReport rep = appendix_identity(aa.id, params, std::max(g.tol, 1e-10));
    EvaluationResult r;
    r.value = rep.rhs;
    r.abs_error_estimate =
        std::numeric_limits<double>::epsilon() * std::fabs(rep.rhs);
    r.terms_used = 0;
    r.method = Method::closed_form;
    json inputs;
    inputs["id"] = aa.id;
    for (const auto& [name, value] : params) inputs[name] = value;
    inputs["tol"] = g.tol;
    CheckResult check{rep.lhs, rep.rel_residual};
    return emit_scalar(g, "appendix", inputs, r, check, quadrature_check_tol);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const GlobalOptions& g, const std::string& suite) {
    validate_tolerance(g.tol);
    VerifySummary s = run_verify_suite(suite, g.seed);
    if (g.format == "json") {
        json cases = json::array();
        for (const VerifyCase& c : s.cases) {
            json jc;
            jc["suite"] = c.suite;
            jc["label"] = c.label;
            jc["id"] = c.report.identity_id;
            jc["lhs"] = c.report.lhs;
            jc["rhs"] = c.report.rhs;
            jc["abs_residual"] = c.report.abs_residual;
            jc["rel_residual"] = c.report.rel_residual;
            jc["lhs_method"] = method_name(c.report.lhs_method);
            jc["rhs_method"] = method_name(c.report.rhs_method);
            jc["tolerance"] = c.tolerance;
            jc["pass"] = c.pass;
            cases.push_back(jc);
        }
        json inputs;
        inputs["suite"] = suite;
        inputs["seed"] = g.seed;
        inputs["tol"] = g.tol;
        json doc;
        doc["command"] = "verify";
        doc["inputs"] = inputs;
        doc["cases"] = cases;
        doc["total"] = s.cases.size();
        doc["failures"] = s.failures;
        print_json(doc);
    } else if (g.format == "csv") {
        std::cout << "suite,id,lhs,rhs,abs_residual,rel_residual,tolerance,"
                     "pass,label\n";
        for (const VerifyCase& c : s.cases) {
            std::cout << c.suite << "," << c.report.identity_id << ","
                      << fmt17(c.report.lhs) << "," << fmt17(c.report.rhs)
                      << "," << fmt17(c.report.abs_residual) << ","
                      << fmt17(c.report.rel_residual) << ","
                      << fmt17(c.tolerance) << "," << (c.pass ? 1 : 0) << ",\""
                      << c.label << "\"\n";
        }
    } else {
        std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
        for (const VerifyCase& c : s.cases) {
            auto& tally = per_suite[c.suite];
            ++tally.second;
            if (c.pass) ++tally.first;
            if (!c.pass) {
                std::cout << "FAIL " << c.label
                          << " rel=" << fmt3(c.report.rel_residual)
                          << " abs=" << fmt3(c.report.abs_residual)
                          << " tol=" << fmt3(c.tolerance) << "\n";
            }
        }
        for (const auto& [name, tally] : per_suite) {
            std::cout << name << ": " << tally.first << "/" << tally.second
                      << " pass\n";
        }
    }
    return s.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// matrix
// ---------------------------------------------------------------------------

// Cyclic Jacobi diagonalization of a symmetric matrix stored row-major;
// adequate for the small variational blocks this tool emits.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    for (int sweep = 0; sweep < 128; ++sweep) {
        double off = 0.0;
        double scale = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            scale += std::fabs(a[p * n + p]);
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if (std::sqrt(off) <= 1e-14 * std::max(scale, 1.0)) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a[i * n + p];
                    double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - sn * aiq;
                    a[i * n + q] = sn * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double api = a[p * n + i];
                    double aqi = a[q * n + i];
                    a[p * n + i] = c * api - sn * aqi;
                    a[q * n + i] = sn * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

struct VariationalArgs {
    bool enabled = false;
    double lambda = 1.0;
    bool include_h0 = false;
};

std::vector<double> variational_eigenvalues(
    const MatrixBlock& blk, const std::function<double(long long)>& energy,
    const VariationalArgs& va) {
    std::size_t n = blk.size;
    std::vector<double> m = blk.entries;
    for (double& v : m) v *= va.lambda;
    if (va.include_h0) {
        for (std::size_t i = 0; i < n; ++i) {
            m[i * n + i] += energy(static_cast<long long>(i));
        }
    }
    return jacobi_eigenvalues(std::move(m), n);
}

int emit_matrix(const GlobalOptions& g, const json& inputs,
                const MatrixBlock& blk, const std::vector<double>* eig) {
    if (g.format == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n < blk.size; ++n) {
            json row = json::array();
            for (std::size_t m = 0; m < blk.size; ++m) {
                row.push_back(blk.at(n, m));
            }
            rows.push_back(row);
        }
        json mj;
        mj["size"] = blk.size;
        mj["alpha"] = blk.alpha;
        mj["basis"] = blk.basis_label;
        mj["entries"] = rows;
        json doc;
        doc["command"] = "matrix";
        doc["inputs"] = inputs;
        doc["matrix"] = mj;
        if (eig) doc["eigenvalues"] = *eig;
        print_json(doc);
    } else if (g.format == "csv") {
        std::cout << "n,m,value\n";
        for (std::size_t n = 0; n < blk.size; ++n) {
            for (std::size_t m = 0; m < blk.size; ++m) {
                std::cout << n << "," << m << "," << fmt17(blk.at(n, m))
                          << "\n";
            }
        }
        if (eig) {
            std::cout << "\ni,eigenvalue\n";
            for (std::size_t i = 0; i < eig->size(); ++i) {
                std::cout << i << "," << fmt17((*eig)[i]) << "\n";
            }
        }
    } else {
        std::cout << blk.basis_label << " block, size " << blk.size
                  << ", alpha = " << blk.alpha << "\n";
        for (std::size_t n = 0; n < blk.size; ++n) {
            for (std::size_t m = 0; m < blk.size; ++m) {
                char buf[32];
                std::snprintf(buf, sizeof buf, " %16.9e", blk.at(n, m));
                std::cout << buf;
            }
            std::cout << "\n";
        }
        if (eig) {
            std::cout << "eigenvalues:";
            for (double v : *eig) std::cout << " " << fmt17(v);
            std::cout << "\n";
        }
    }
    return 0;
}

struct SpikedArgs {
    double gamma = 0;
    double A = 0;
    bool has_gamma = false;
    bool has_A = false;
    double alpha = 0;
    std::size_t N = 1;
    VariationalArgs var;
};

int run_matrix_spiked(const GlobalOptions& g, const SpikedArgs& sa) {
    validate_tolerance(g.tol);
    if (sa.has_gamma == sa.has_A) {
        throw Error(ErrorKind::usage,
                    "matrix spiked requires exactly one of --gamma or --A");
    }
    OscillatorBasis basis = sa.has_gamma
                                ? OscillatorBasis::from_gamma(sa.gamma)
                                : OscillatorBasis::from_coupling(sa.A);
    MatrixBlock blk = build_perturbation_matrix(basis, sa.alpha, sa.N);
    json inputs;
    inputs["basis"] = "spiked";
    inputs["gamma"] = basis.gamma;
    inputs["A"] = basis.A;
    inputs["alpha"] = sa.alpha;
    inputs["n"] = sa.N;
    std::vector<double> eig;
    if (sa.var.enabled) {
        eig = variational_eigenvalues(
            blk, [&](long long n) { return gk_energy(n, basis); }, sa.var);
        inputs["lambda"] = sa.var.lambda;
        inputs["h0"] = sa.var.include_h0;
    }
    return emit_matrix(g, inputs, blk, sa.var.enabled ? &eig : nullptr);
}

struct KratzerArgs {
    double A = 0;
    double B = 0;
    long long l = 0;
    double alpha = 0;
    std::size_t N = 1;
    VariationalArgs var;
};

int run_matrix_kratzer(const GlobalOptions& g, const KratzerArgs& ka) {
    validate_tolerance(g.tol);
    KratzerBasis basis = KratzerBasis::make(ka.A, ka.B, ka.l);
    MatrixBlock blk = build_perturbation_matrix(basis, ka.alpha, ka.N);
    json inputs;
    inputs["basis"] = "kratzer";
    inputs["A"] = ka.A;
    inputs["B"] = ka.B;
    inputs["l"] = ka.l;
    inputs["s"] = basis.s;
    inputs["alpha"] = ka.alpha;
    inputs["n"] = ka.N;
    std::vector<double> eig;
    if (ka.var.enabled) {
        eig = variational_eigenvalues(
            blk, [&](long long n) { return kratzer_energy(n, basis); }, ka.var);
        inputs["lambda"] = ka.var.lambda;
        inputs["h0"] = ka.var.include_h0;
    }
    return emit_matrix(g, inputs, blk, ka.var.enabled ? &eig : nullptr);
}

void add_variational_options(CLI::App* cmd, VariationalArgs& va) {
    cmd->add_flag("--variational", va.enabled,
                  "also diagonalize the perturbed Hamiltonian block");
    cmd->add_option("--lambda", va.lambda,
                    "perturbation coupling strength for --variational")
        ->capture_default_str();
    cmd->add_flag("--h0", va.include_h0,
                  "include the unperturbed level energies on the diagonal");
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions g;
    try {
        g.tol = default_tol_from_env();
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
                  << "\n";
        return error_exit_code(e.kind());
    }

    int code = 0;
    CLI::App app{"Appell F2 series, Laplace-type integrals of confluent "
                 "hypergeometric products, and exactly solvable matrix "
                 "elements"};
    app.require_subcommand(1);
    app.add_option("--tol", g.tol, "evaluation tolerance in (0, 1e-2]")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for the randomized verify grids")
        ->capture_default_str();

    F2Args f2a;
    CLI::App* f2cmd = app.add_subcommand(
        "f2", "Evaluate the double series F2(d; a, a'; b, b'; x, y)");
    f2cmd->fallthrough();
    f2cmd->add_option("--d", f2a.d, "coupled numerator parameter")->required();
    f2cmd->add_option("--a", f2a.a, "first numerator parameter")->required();
    f2cmd->add_option("--ap", f2a.ap, "second numerator parameter")->required();
    f2cmd->add_option("--b", f2a.b, "first denominator parameter")->required();
    f2cmd->add_option("--bp", f2a.bp, "second denominator parameter")
        ->required();
    f2cmd->add_option("--x", f2a.x, "first argument")->required();
    f2cmd->add_option("--y", f2a.y, "second argument")->required();
    f2cmd->add_flag("--brute-force", f2a.brute,
                    "cross-check against the compensated reference double sum");
    f2cmd->callback([&]() { code = run_f2(g, f2a); });

    F1Args f1a;
    CLI::App* f1cmd = app.add_subcommand(
        "f1", "Evaluate the double series F1(a; b, b'; c; x, y)");
    f1cmd->fallthrough();
    f1cmd->add_option("--a", f1a.a, "coupled numerator parameter")->required();
    f1cmd->add_option("--b", f1a.b, "first numerator parameter")->required();
    f1cmd->add_option("--bp", f1a.bp, "second numerator parameter")->required();
    f1cmd->add_option("--c", f1a.c, "denominator parameter")->required();
    f1cmd->add_option("--x", f1a.x, "first argument")->required();
    f1cmd->add_option("--y", f1a.y, "second argument")->required();
    f1cmd->add_flag("--finite-sum", f1a.finite_sum,
                    "use the integer-parameter closed finite sum with "
                    "logarithmic terms");
    f1cmd->callback([&]() { code = run_f1(g, f1a); });

    IntegralArgs ia;
    CLI::App* intcmd = app.add_subcommand(
        "integral",
        "Weighted half-line integral of one or two confluent factors");
    intcmd->fallthrough();
    // the decay rate option is spelled --h, so move help off the short -h
    intcmd->set_help_flag("--help", "print this help message and exit");
    intcmd->add_option("--d", ia.d, "weight exponent (t^{d-1})");
    CLI::Option* opt_h =
        intcmd->add_option("--h", ia.h, "exponential decay rate")->required();
    CLI::Option* opt_a = intcmd->add_option("--a", ia.a, "first factor upper parameter");
    intcmd->add_option("--b", ia.b, "first factor lower parameter");
    CLI::Option* opt_k = intcmd->add_option("--k", ia.k, "first factor argument scale");
    CLI::Option* opt_ap =
        intcmd->add_option("--ap", ia.ap, "second factor upper parameter");
    CLI::Option* opt_bp =
        intcmd->add_option("--bp", ia.bp, "second factor lower parameter");
    CLI::Option* opt_kp =
        intcmd->add_option("--kp", ia.kp, "second factor argument scale");
    CLI::Option* opt_gamma = intcmd->add_option(
        "--gamma", ia.gamma,
        "shared denominator parameter (selects the tied-parameter J integral)");
    CLI::Option* opt_s =
        intcmd->add_option("--s", ia.s, "weight exponent offset for J");
    CLI::Option* opt_p =
        intcmd->add_option("--p", ia.p, "denominator offset for J");
    intcmd->add_option("--method", ia.method, "J evaluation route")
        ->check(CLI::IsMember({"auto", "gordon", "continuation"}))
        ->capture_default_str();
    intcmd->add_flag("--check", ia.check,
                     "also integrate numerically and report the residual");
    intcmd->callback([&]() {
        ia.j_mode = opt_gamma->count() > 0;
        std::size_t second = opt_ap->count() + opt_bp->count() + opt_kp->count();
        if (ia.j_mode) {
            if (opt_s->count() == 0 || opt_p->count() == 0 ||
                opt_a->count() == 0 || opt_ap->count() == 0 ||
                opt_k->count() == 0 || opt_kp->count() == 0) {
                throw Error(ErrorKind::usage,
                            "--gamma mode requires --s --p --a --ap --k --kp "
                            "--h");
            }
        } else {
            if (intcmd->count("--d") == 0 || opt_a->count() == 0 ||
                intcmd->count("--b") == 0 || opt_k->count() == 0) {
                throw Error(ErrorKind::usage,
                            "integral requires --d --h --a --b --k (plus "
                            "--ap --bp --kp for a second factor)");
            }
            if (second != 0 && (opt_ap->count() == 0 || opt_bp->count() == 0 ||
                                opt_kp->count() == 0)) {
                throw Error(ErrorKind::usage,
                            "a second factor needs all of --ap --bp --kp");
            }
            ia.has_second = second != 0;
        }
        (void)opt_h;
        code = run_integral(g, ia);
    });

    AppendixArgs aa;
    CLI::App* appcmd = app.add_subcommand(
        "appendix", "Check one catalogued closed-form integral by quadrature");
    appcmd->fallthrough();
    appcmd->add_option("--id", aa.id, "catalog identifier (I.1 ... I.21)");
    appcmd->add_option("--set", aa.sets,
                       "parameter assignment name=value (repeatable)");
    appcmd->add_flag("--list", aa.list,
                     "list catalog identifiers and their parameters");
    appcmd->callback([&]() { code = run_appendix(g, aa); });

    std::string suite;
    CLI::App* vercmd = app.add_subcommand(
        "verify", "Run a deterministic randomized identity suite");
    vercmd->fallthrough();
    vercmd
        ->add_option("suite", suite,
                     "appendix, recurrences, continuations, physics, or all")
        ->required()
        ->check(CLI::IsMember(
            {"appendix", "recurrences", "continuations", "physics", "all"}));
    vercmd->callback([&]() { code = run_verify(g, suite); });

    CLI::App* matcmd = app.add_subcommand(
        "matrix", "Emit a perturbation matrix block in an exact eigenbasis");
    matcmd->require_subcommand(1);
    matcmd->fallthrough();

    SpikedArgs sa;
    CLI::App* spiked = matcmd->add_subcommand(
        "spiked", "Inverse-power elements <n| x^{-alpha} |m> in the "
                  "barrier-oscillator basis");
    spiked->fallthrough();
    CLI::Option* opt_sg = spiked->add_option("--gamma", sa.gamma,
                                             "basis index gamma (>= 1)");
    CLI::Option* opt_sA =
        spiked->add_option("--A", sa.A, "barrier coupling A (>= -1/4)");
    spiked->add_option("--alpha", sa.alpha, "perturbation exponent")
        ->required();
    spiked->add_option("--n", sa.N, "block size N")
        ->required()
        ->check(CLI::PositiveNumber);
    add_variational_options(spiked, sa.var);
    spiked->callback([&]() {
        sa.has_gamma = opt_sg->count() > 0;
        sa.has_A = opt_sA->count() > 0;
        code = run_matrix_spiked(g, sa);
    });

    KratzerArgs ka;
    CLI::App* kratzer = matcmd->add_subcommand(
        "kratzer",
        "Radial moment elements <n| r^alpha |m> in the Kratzer basis");
    kratzer->fallthrough();
    kratzer->add_option("--A", ka.A, "inverse-square coupling")
        ->capture_default_str();
    kratzer->add_option("--B", ka.B, "Coulomb strength (> 0)")->required();
    kratzer->add_option("--l", ka.l, "angular momentum (>= 0)")
        ->capture_default_str();
    kratzer->add_option("--alpha", ka.alpha, "moment exponent")->required();
    kratzer->add_option("--n", ka.N, "block size N")
        ->required()
        ->check(CLI::PositiveNumber);
    add_variational_options(kratzer, ka.var);
    kratzer->callback([&]() { code = run_matrix_kratzer(g, ka); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
                  << "\n";
        return error_exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
