#include "appell/physics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "appell/f2.hpp"
#include "appell/special.hpp"

namespace appell {

namespace {

void check_level(long long n, const char* who) {
    if (n < 0) {
        std::ostringstream os;
        os << who << ": level index must be nonnegative, got " << n;
        throw Error(ErrorKind::parameter, os.str());
    }
    if (n > 100000000) {
        std::ostringstream os;
        os << who << ": level index " << n << " is too large";
        throw Error(ErrorKind::parameter, os.str());
    }
}

// log of sqrt((gamma)_n (gamma)_m / (n! m!)), the index-dependent part of the
// product of two normalization constants.
double ln_norm_pair(double gamma, long long n, long long m) {
    return 0.5 * (ln_pochhammer(gamma, static_cast<unsigned>(n)).log_abs +
                  ln_pochhammer(gamma, static_cast<unsigned>(m)).log_abs -
                  std::lgamma(static_cast<double>(n) + 1.0) -
                  std::lgamma(static_cast<double>(m) + 1.0));
}

}  // namespace

OscillatorBasis OscillatorBasis::from_coupling(double A) {
    if (!(A >= -0.25)) {
        throw Error(ErrorKind::domain,
                    "OscillatorBasis: requires A >= -1/4 (below that the barrier "
                    "coupling admits no self-adjoint ground state)");
    }
    OscillatorBasis b;
    b.A = A;
    b.gamma = 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * A);
    return b;
}

OscillatorBasis OscillatorBasis::from_gamma(double gamma) {
    if (!(gamma >= 1.0)) {
        throw Error(ErrorKind::domain, "OscillatorBasis: requires gamma >= 1");
    }
    OscillatorBasis b;
    b.gamma = gamma;
    b.A = (gamma - 1.0) * (gamma - 1.0) - 0.25;
    return b;
}

double gk_energy(long long n, const OscillatorBasis& basis) {
    check_level(n, "gk_energy");
    return 2.0 * (2.0 * static_cast<double>(n) + basis.gamma);
}

double gk_wavefunction(long long n, const OscillatorBasis& basis, double x) {
    check_level(n, "gk_wavefunction");
    if (x < 0.0) {
        throw Error(ErrorKind::domain, "gk_wavefunction: requires x >= 0");
    }
    double g = basis.gamma;
    if (x == 0.0) {
        // x^{gamma-1/2} with gamma >= 1 vanishes at the origin.
        return 0.0;
    }
    EvaluationResult poly = hyp1f1(-static_cast<double>(n), g, x * x);
    if (poly.value == 0.0) return 0.0;
    double ln_mag = 0.5 * (std::log(2.0) +
                           ln_pochhammer(g, static_cast<unsigned>(n)).log_abs -
                           std::lgamma(static_cast<double>(n) + 1.0) -
                           ln_gamma(g).log_abs) +
                    (g - 0.5) * std::log(x) - 0.5 * x * x +
                    std::log(std::fabs(poly.value));
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (poly.value < 0.0) sign = -sign;
    return sign * std::exp(ln_mag);
}

double gk_overlap(long long n, long long m, const OscillatorBasis& basis) {
    check_level(n, "gk_overlap");
    check_level(m, "gk_overlap");
    double g = basis.gamma;
    F2Params p;
    p.d = g;
    p.a = -static_cast<double>(n);
    p.a_prime = -static_cast<double>(m);
    p.b = g;
    p.b_prime = g;
    p.x = 1.0;
    p.y = 1.0;
    EvaluationResult f2 = f2_eval(p);
    double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(ln_norm_pair(g, n, m)) * f2.value;
}

namespace {

// The closed form treats the two indices asymmetrically.  With
// q = alpha/2 + n - 1 a nonnegative integer, the lower parameter
// 1 - alpha/2 - n of the 3F2 sits q + 1 steps above a pole, so terms beyond
// index q divide by zero; the orientation is unusable whenever q < m (the
// series would need m + 1 terms).
bool spiked_orientation_blocked(long long n, long long m, double alpha) {
    double q = 0.5 * alpha + static_cast<double>(n) - 1.0;
    if (!is_integer(q)) return false;
    long long qi = std::llround(q);
    return qi >= 0 && qi < m;
}

double spiked_oriented(long long n, long long m, double g, double alpha) {
    double h = 0.5 * alpha;
    PfqParams f3;
    f3.upper = {-static_cast<double>(m), g - h, 1.0 - h};
    f3.lower = {g, 1.0 - h - static_cast<double>(n)};
    f3.x = 1.0;
    EvaluationResult series = pfq(f3);
    double pre = std::exp(ln_norm_pair(g, n, m)) * gamma_fn(g - h) /
                 gamma_fn(g) * pochhammer(h, static_cast<unsigned>(n)) /
                 pochhammer(g, static_cast<unsigned>(n));
    double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
    return sign * pre * series.value;
}

}  // namespace

double spiked_matrix_element(long long n, long long m,
                             const OscillatorBasis& basis, double alpha) {
    check_level(n, "spiked_matrix_element");
    check_level(m, "spiked_matrix_element");
    double g = basis.gamma;
    if (!(alpha < 2.0 * g)) {
        std::ostringstream os;
        os << "spiked_matrix_element: requires alpha < 2*gamma = " << 2.0 * g
           << " for a finite expectation of x^{-alpha}, got alpha = " << alpha;
        throw Error(ErrorKind::domain, os.str());
    }
    if (!spiked_orientation_blocked(n, m, alpha)) {
        return spiked_oriented(n, m, g, alpha);
    }
    if (!spiked_orientation_blocked(m, n, alpha)) {
        return spiked_oriented(m, n, g, alpha);
    }
    throw Error(ErrorKind::parameter,
                "spiked_matrix_element: both index orientations place the "
                "closed form's lower parameter at a pole");
}

KratzerBasis KratzerBasis::make(double A, double B, long long l) {
    if (!(B > 0.0)) {
        throw Error(ErrorKind::parameter, "KratzerBasis: requires B > 0");
    }
    if (l < 0) {
        throw Error(ErrorKind::parameter, "KratzerBasis: requires l >= 0");
    }
    double disc = 4.0 * A + (2.0 * static_cast<double>(l) + 1.0) *
                                (2.0 * static_cast<double>(l) + 1.0);
    if (!(disc > 0.0)) {
        throw Error(ErrorKind::domain,
                    "KratzerBasis: requires 4A + (2l+1)^2 > 0 for a real "
                    "effective index s");
    }
    KratzerBasis b;
    b.A = A;
    b.B = B;
    b.l = l;
    b.s = -0.5 + 0.5 * std::sqrt(disc);
    return b;
}

double kratzer_energy(long long n, const KratzerBasis& basis) {
    check_level(n, "kratzer_energy");
    double d = static_cast<double>(n) + basis.s + 1.0;
    return -basis.B * basis.B / (4.0 * d * d);
}

double kratzer_normalization(long long n, const KratzerBasis& basis) {
    check_level(n, "kratzer_normalization");
    double s = basis.s;
    double ln_inv_sq =
        std::log(2.0) - (2.0 * s + 3.0) * std::log(basis.B) +
        (2.0 * s + 4.0) * std::log(s + static_cast<double>(n) + 1.0) +
        ln_gamma(2.0 * s + 2.0).log_abs +
        std::lgamma(static_cast<double>(n) + 1.0) -
        ln_pochhammer(2.0 * s + 2.0, static_cast<unsigned>(n)).log_abs;
    return std::exp(-0.5 * ln_inv_sq);
}

double kratzer_wavefunction(long long n, const KratzerBasis& basis, double r) {
    check_level(n, "kratzer_wavefunction");
    if (r < 0.0) {
        throw Error(ErrorKind::domain, "kratzer_wavefunction: requires r >= 0");
    }
    double s = basis.s;
    double c = kratzer_normalization(n, basis);
    if (r == 0.0) {
        if (s > 0.0) return 0.0;
        if (s == 0.0) return c;
        throw Error(ErrorKind::singular,
                    "kratzer_wavefunction: r^s diverges at r = 0 for s < 0");
    }
    double eps = basis.B / (static_cast<double>(n) + s + 1.0);
    EvaluationResult poly = hyp1f1(-static_cast<double>(n), 2.0 * s + 2.0, eps * r);
    if (poly.value == 0.0) return 0.0;
    double ln_mag = std::log(c) + s * std::log(r) - 0.5 * eps * r +
                    std::log(std::fabs(poly.value));
    return (poly.value < 0.0 ? -1.0 : 1.0) * std::exp(ln_mag);
}

namespace {

// Doubly finite form of the moment integral: an outer sum over the bra index
// with an inner terminating Gauss series over the ket index.
double kratzer_general_sum(long long n, long long m, const KratzerBasis& basis,
                           double alpha) {
    double s = basis.s;
    double rho = 2.0 * s + 3.0 + alpha;  // radial moment exponent
    double H = 0.5 * basis.B * (1.0 / (static_cast<double>(n) + s + 1.0) +
                                1.0 / (static_cast<double>(m) + s + 1.0));
    double denom = static_cast<double>(n) + static_cast<double>(m) + 2.0 * s + 2.0;
    double X = (2.0 * static_cast<double>(m) + 2.0 * s + 2.0) / denom;
    double Y = (2.0 * static_cast<double>(n) + 2.0 * s + 2.0) / denom;
    double total = 0.0;
    double coef = 1.0;
    for (long long k = 0; k <= n; ++k) {
        if (k > 0) {
            double kk = static_cast<double>(k);
            coef *= (rho + kk - 1.0) * (-static_cast<double>(n) + kk - 1.0) /
                    ((2.0 * s + 2.0 + kk - 1.0) * kk) * X;
        }
        if (coef == 0.0) continue;
        EvaluationResult inner =
            hyp2f1(rho + static_cast<double>(k), -static_cast<double>(m),
                   2.0 * s + 2.0, Y);
        total += coef * inner.value;
    }
    double pre = gamma_fn(rho) * kratzer_normalization(n, basis) *
                 kratzer_normalization(m, basis) * real_pow(H, -rho);
    return pre * total;
}

// Single terminating 3F2 form of the diagonal moment.  Unusable when its lower
// parameter 2 + alpha - n sits at a nonpositive integer before the -n
// termination, i.e. for integer alpha with n >= alpha + 2.
double kratzer_diagonal(long long n, const KratzerBasis& basis, double alpha) {
    double s = basis.s;
    double rho = 2.0 * s + 3.0 + alpha;
    double pre = 0.5 * real_pow(basis.B, -alpha) *
                 std::pow(static_cast<double>(n) + s + 1.0, alpha - 1.0) *
                 std::exp(ln_gamma(rho).log_abs - ln_gamma(2.0 * s + 2.0).log_abs) *
                 pochhammer(-1.0 - alpha, static_cast<unsigned>(n)) /
                 std::tgamma(static_cast<double>(n) + 1.0);
    PfqParams f3;
    f3.upper = {-static_cast<double>(n), rho, 2.0 + alpha};
    f3.lower = {2.0 * s + 2.0, 2.0 + alpha - static_cast<double>(n)};
    f3.x = 1.0;
    return pre * pfq(f3).value;
}

}  // namespace

double kratzer_matrix_element(long long n, long long m,
                              const KratzerBasis& basis, double alpha) {
    check_level(n, "kratzer_matrix_element");
    check_level(m, "kratzer_matrix_element");
    double rho = 2.0 * basis.s + 3.0 + alpha;
    if (!(rho > 0.0)) {
        std::ostringstream os;
        os << "kratzer_matrix_element: requires 2s + 3 + alpha > 0 for a "
              "convergent radial moment, got "
           << rho;
        throw Error(ErrorKind::domain, os.str());
    }
    if (n == m) {
        bool blocked = is_integer(alpha) &&
                       static_cast<double>(n) >= std::round(alpha) + 2.0;
        if (!blocked) return kratzer_diagonal(n, basis, alpha);
    }
    return kratzer_general_sum(n, m, basis, alpha);
}

namespace {

template <typename Elem>
MatrixBlock build_block(std::string label, double alpha, std::size_t N,
                        Elem element) {
    if (N == 0) {
        throw Error(ErrorKind::usage,
                    "build_perturbation_matrix: requires N >= 1");
    }
    MatrixBlock blk;
    blk.size = N;
    blk.alpha = alpha;
    blk.basis_label = std::move(label);
    blk.entries.assign(N * N, 0.0);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = n; m < N; ++m) {
            double v = element(static_cast<long long>(n),
                               static_cast<long long>(m));
            blk.at(n, m) = v;
            blk.at(m, n) = v;
        }
    }
    // Mirroring assumed index symmetry; verify it on a few entries computed in
    // the opposite orientation.
    std::size_t checks = 0;
    for (std::size_t n = 0; n + 1 < N && checks < 3; ++n) {
        std::size_t m = N - 1 - n;
        if (m <= n) break;
        double swapped = element(static_cast<long long>(m),
                                 static_cast<long long>(n));
        double ref = blk.at(n, m);
        double scale = std::max({std::fabs(ref), std::fabs(swapped), 1e-300});
        if (std::fabs(swapped - ref) > 1e-9 * scale) {
            std::ostringstream os;
            os << "build_perturbation_matrix: entry (" << n << "," << m
               << ") disagrees between orientations: " << ref << " vs "
               << swapped;
            throw Error(ErrorKind::convergence, os.str());
        }
        ++checks;
    }
    return blk;
}

}  // namespace

MatrixBlock build_perturbation_matrix(const OscillatorBasis& basis,
                                      double alpha, std::size_t N) {
    return build_block("spiked", alpha, N, [&](long long n, long long m) {
        return spiked_matrix_element(n, m, basis, alpha);
    });
}

MatrixBlock build_perturbation_matrix(const KratzerBasis& basis, double alpha,
                                      std::size_t N) {
    return build_block("kratzer", alpha, N, [&](long long n, long long m) {
        return kratzer_matrix_element(n, m, basis, alpha);
    });
}

}  // namespace appell
