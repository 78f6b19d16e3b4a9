#ifndef APPELL_LAPLACE_HPP
#define APPELL_LAPLACE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "appell/oracle.hpp"
#include "appell/types.hpp"

namespace appell {

// Weighted half-line integral of a product of confluent hypergeometric
// factors:
//   integral_0^inf t^{d-1} e^{-ht} 1F1(a;b;kt) [1F1(a';b';k't)] dt.
// The second factor is optional; without it the integral reduces to the
// single-factor 2F1 closed form.
struct LaplaceProductSpec {
    double d;
    double h;
    double a;
    double b;
    double k;
    bool has_second = true;
    double a_prime = 0.0;
    double b_prime = 1.0;
    double k_prime = 0.0;
};

// Parameters of the weighted product integral whose two confluent factors
// share denominator parameters gamma and gamma - p and whose weight exponent
// is gamma + s - 1.
struct JspParams {
    double gamma;
    long long s;
    long long p;
    double a;
    double a_prime;
    double k;
    double k_prime;
    double h;
};

enum class JMethod { automatic, gordon_closed_form, continuation };

// Closed-route evaluation h^{-d} Gamma(d) F2(d; a, a'; b, b'; k/h, k'/h).
EvaluationResult laplace_product(const LaplaceProductSpec& spec,
                                 double tol = default_tolerance);

// Single-factor integral: h^{-d} Gamma(d) 2F1(d, a; b; k/h).
EvaluationResult laplace_single(double d, double h, double a, double b,
                                double k, double tol = default_tolerance);

// The J integral with shifted denominator parameters.  'continuation'
// evaluates h^{-gamma-s} Gamma(gamma+s) times the finite re-expansion of
// F2(gamma+s; a, a'; gamma, gamma-p; k/h, k'/h); 'gordon_closed_form' is the
// 2F1 closed form valid only for s = p = 0 at the symmetric decay rate
// h = (k + k')/2; 'automatic' takes the closed form when it applies and
// falls back to the re-expansion.
EvaluationResult landau_lifshitz_J(const JspParams& p,
                                   JMethod method = JMethod::automatic,
                                   double tol = default_tolerance);

// Direct quadrature setup for the product integral: integrand plus tuned
// options (decay hint, split point) for integrate_semiinfinite.
std::function<double(double)> laplace_integrand(const LaplaceProductSpec& spec,
                                                double tol = default_tolerance);
QuadratureOptions laplace_quadrature_options(const LaplaceProductSpec& spec);

// One entry of the closed-form integral catalog: named parameters, a domain
// predicate, the closed-form value, and the integrand with quadrature hints.
struct CatalogEntry {
    std::string id;
    std::vector<std::string> param_names;
    // Returns an empty string when params are in domain, else the violated
    // condition in human-readable form.
    std::function<std::string(const std::map<std::string, double>&)> domain_check;
    std::function<double(const std::map<std::string, double>&)> closed_form;
    std::function<std::function<double(double)>(
        const std::map<std::string, double>&)> integrand;
    std::function<QuadratureOptions(const std::map<std::string, double>&)>
        quad_options;
};

// The full catalog, in id order I.1 ... I.21.
const std::vector<CatalogEntry>& appendix_catalog();
const CatalogEntry& appendix_entry(const std::string& id);

// Quadrature value of the catalog integral (lhs) against its closed form
// (rhs), as an IdentityReport labelled by the catalog id.
IdentityReport appendix_identity(const std::string& id,
                                 const std::map<std::string, double>& params,
                                 double tol = default_tolerance);

// Residual of the squared-factor integral identities: the quadrature of
//   t^{d-1} e^{-ht} 1F1(a;c;kt) 1F1(a;c;-kt)        (product_form)
//   t^{d-1} e^{-ht} 2F3(a, c-a; c, c/2, (c+1)/2; (kt)^2/4)   (squared_form)
// against the closed form
//   Gamma(d) h^{-d} 4F3(d/2, (d+1)/2, a, c-a; c, c/2, (c+1)/2; k^2/h^2).
enum class ProductIntegralForm { product_form, squared_form };
IdentityReport product_integral_residual(double d, double h, double a,
                                         double c, double k,
                                         ProductIntegralForm form,
                                         double tol = default_tolerance);

}  // namespace appell

#endif
