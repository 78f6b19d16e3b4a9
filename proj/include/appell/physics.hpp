#ifndef APPELL_PHYSICS_HPP
#define APPELL_PHYSICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "appell/types.hpp"

namespace appell {

// Radial oscillator with an added A/x^2 barrier on the half line; the exact
// eigenbasis is indexed by gamma = 1 + sqrt(1 + 4A)/2.
struct OscillatorBasis {
    double A;
    double gamma;

    static OscillatorBasis from_coupling(double A);
    static OscillatorBasis from_gamma(double gamma);
};

// Radial -B/r + A/r^2 problem at angular momentum l; the exact eigenbasis is
// indexed by s = -1/2 + sqrt(4A + (2l+1)^2)/2, with s = l exactly when A = 0.
struct KratzerBasis {
    double A;
    double B;
    long long l;
    double s;

    static KratzerBasis make(double A, double B, long long l);
};

struct MatrixBlock {
    std::size_t size = 0;
    double alpha = 0.0;
    std::string basis_label;
    std::vector<double> entries;  // row-major, size*size

    double& at(std::size_t n, std::size_t m) { return entries[n * size + m]; }
    double at(std::size_t n, std::size_t m) const {
        return entries[n * size + m];
    }
};

// Oscillator level n energy: 2(2n + gamma).
double gk_energy(long long n, const OscillatorBasis& basis);

// Normalized oscillator radial eigenfunction at x > 0, evaluated through
// exponent-summed logarithms so large x does not overflow.
double gk_wavefunction(long long n, const OscillatorBasis& basis, double x);

// Overlap <psi_n|psi_m> computed through the terminating double-series value
// F2(gamma; -n, -m; gamma, gamma; 1, 1) = n! delta_nm / (gamma)_n rather than
// by assuming orthonormality.
double gk_overlap(long long n, long long m, const OscillatorBasis& basis);

// Matrix element <psi_n| x^{-alpha} |psi_m> for 2*gamma > alpha, by the
// terminating 3F2 closed form.  When alpha is an even integer the 3F2's lower
// parameter 1 - alpha/2 - n can sit at a nonpositive integer before the series
// terminates; the two index orientations are tried in turn (the element is
// symmetric) and an error is raised only if both collide.
double spiked_matrix_element(long long n, long long m,
                             const OscillatorBasis& basis, double alpha);

// Level n energy: -B^2 / (4 (n + s + 1)^2).
double kratzer_energy(long long n, const KratzerBasis& basis);

// Normalization constant C with
//   C^{-2} = 2 B^{-2s-3} (s+n+1)^{2s+4} Gamma(2s+2) n! / (2s+2)_n,
// making the radial function below unit-normalized under the r^2 dr measure.
double kratzer_normalization(long long n, const KratzerBasis& basis);

// Normalized radial eigenfunction C r^s e^{-eps r/2} 1F1(-n; 2s+2; eps r)
// with eps = B/(n+s+1), evaluated through summed logarithms.
double kratzer_wavefunction(long long n, const KratzerBasis& basis, double r);

// Matrix element <psi_n| r^alpha |psi_m> for alpha > 0, both normalization
// constants included.  Off-diagonal entries use the doubly terminating
// nested finite sum; diagonal entries use the single 3F2 closed form, falling
// back to the nested sum when the 3F2's lower parameter 2 + alpha - n sits at
// a nonpositive integer (alpha integer with n >= alpha + 2).
double kratzer_matrix_element(long long n, long long m,
                              const KratzerBasis& basis, double alpha);

// N x N block of x^{-alpha} (oscillator) or r^{alpha} (Kratzer) elements.
// The n <= m triangle is computed and mirrored after spot-checking that both
// orientations of a few off-diagonal entries agree to 1e-9 relative.
MatrixBlock build_perturbation_matrix(const OscillatorBasis& basis,
                                      double alpha, std::size_t N);
MatrixBlock build_perturbation_matrix(const KratzerBasis& basis, double alpha,
                                      std::size_t N);

}  // namespace appell

#endif
