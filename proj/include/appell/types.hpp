#ifndef APPELL_TYPES_HPP
#define APPELL_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace appell {

// How a value was obtained. Propagated through composite evaluations so a caller
// can tell whether a result came from the defining series, a closed form, an
// analytic continuation, or numerical integration.
enum class Method {
    series,
    reduction,
    continuation,
    quadrature,
    closed_form,
};

const char* method_name(Method m);

// Every evaluation routine returns the value together with a (crude but honest)
// absolute error estimate and the work expended.
struct EvaluationResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t terms_used = 0;
    Method method = Method::series;
};

// Failure categories. The CLI maps parameter/domain/usage problems to exit
// code 2 and numerical failures (non-convergence, singular configurations) to 1.
enum class ErrorKind {
    parameter,    // invalid or out-of-range parameter (e.g. pole in a denominator)
    domain,       // arguments outside the validity region of the requested formula
    divergence,   // series provably divergent for these arguments
    convergence,  // term budget exhausted before the tolerance was met
    singular,     // singular configuration (vanishing h-k, branch-cut base, ...)
    usage,        // malformed request (unknown id, bad flag combination)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Result of checking a two-sided identity: both side values, their residuals and
// the evaluation route of each side.
struct IdentityReport {
    std::string identity_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;   // abs / max(|lhs|, |rhs|, 1e-300)
    Method lhs_method = Method::series;
    Method rhs_method = Method::closed_form;
};

IdentityReport make_identity_report(std::string id, double lhs, double rhs,
                                    Method lhs_method, Method rhs_method);

}  // namespace appell

#endif
