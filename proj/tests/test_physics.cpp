#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "appell/oracle.hpp"
#include "appell/physics.hpp"

using namespace appell;

namespace {

double rel_diff(double a, double b) {
    return std::fabs(a - b) /
           std::max({std::fabs(a), std::fabs(b), 1e-300});
}

template <typename Fn>
ErrorKind error_kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected the call to throw appell::Error");
}

const double pi = 3.14159265358979323846;

}  // namespace

TEST_CASE("oscillator basis index round-trips through the coupling") {
    OscillatorBasis b = OscillatorBasis::from_coupling(0.75);
    CHECK(rel_diff(b.gamma, 2.0) < 1e-14);
    OscillatorBasis c = OscillatorBasis::from_gamma(2.0);
    CHECK(rel_diff(c.A, 0.75) < 1e-14);
    CHECK(error_kind_of([] { OscillatorBasis::from_coupling(-0.5); }) ==
          ErrorKind::domain);
    CHECK(error_kind_of([] { OscillatorBasis::from_gamma(0.8); }) ==
          ErrorKind::domain);
}

TEST_CASE("oscillator energies and wavefunction shape") {
    OscillatorBasis g2 = OscillatorBasis::from_gamma(2.0);
    CHECK(gk_energy(0, g2) == 4.0);
    CHECK(gk_energy(2, g2) == 12.0);

    CHECK(gk_wavefunction(0, g2, 0.0) == 0.0);
    CHECK(gk_wavefunction(0, g2, 1.0) > 0.0);
    // The first excited level changes sign across its single node at
    // x = sqrt(2).
    CHECK(gk_wavefunction(1, g2, 1.0) * gk_wavefunction(1, g2, 2.0) < 0.0);
    CHECK(error_kind_of([&] { gk_wavefunction(0, g2, -1.0); }) ==
          ErrorKind::domain);

    // Unit normalization, checked by quadrature.
    QuadratureOptions opt;
    opt.decay_rate = 2.0;
    opt.split_point = 6.0;
    QuadratureResult norm = integrate_semiinfinite(
        [&](double x) {
            double w = gk_wavefunction(2, g2, x);
            return w * w;
        },
        1e-10, opt);
    CHECK(rel_diff(norm.value, 1.0) < 1e-9);
}

TEST_CASE("oscillator overlaps through the terminating double series") {
    OscillatorBasis b = OscillatorBasis::from_gamma(2.2);
    CHECK(rel_diff(gk_overlap(0, 0, b), 1.0) < 1e-12);
    CHECK(rel_diff(gk_overlap(3, 3, b), 1.0) < 1e-11);
    CHECK(std::fabs(gk_overlap(0, 4, b)) < 1e-11);
    CHECK(std::fabs(gk_overlap(2, 5, b)) < 1e-11);
}

TEST_CASE("inverse-power oscillator elements at reference points") {
    OscillatorBasis g2 = OscillatorBasis::from_gamma(2.0);
    OscillatorBasis g25 = OscillatorBasis::from_gamma(2.5);
    OscillatorBasis g16 = OscillatorBasis::from_gamma(1.6);
    OscillatorBasis g3 = OscillatorBasis::from_gamma(3.0);

    // <1|x^-1|0> at gamma = 2 has the closed value -sqrt(2 pi)/8.
    CHECK(rel_diff(spiked_matrix_element(1, 0, g2, 1.0),
                   -std::sqrt(2.0 * pi) / 8.0) < 1e-12);
    CHECK(rel_diff(spiked_matrix_element(1, 1, g25, 1.2),
                   0.654035881084744555) < 1e-12);
    CHECK(rel_diff(spiked_matrix_element(2, 1, g25, 1.2),
                   -0.312393737285046465) < 1e-12);
    CHECK(rel_diff(spiked_matrix_element(0, 3, g2, 1.0),
                   -0.13847295710199344) < 1e-12);
    CHECK(rel_diff(spiked_matrix_element(3, 2, g16, 0.5),
                   -0.204680719255477805) < 1e-12);
    CHECK(rel_diff(spiked_matrix_element(5, 5, g3, 3.0),
                   0.871859003878453599) < 1e-12);

    // <0|x^-2|0> at gamma = 2 is exactly 1.
    CHECK(rel_diff(spiked_matrix_element(0, 0, g2, 2.0), 1.0) < 1e-12);
}

TEST_CASE("even integer power can block one index orientation") {
    // At alpha = 2 the lower parameter 1 - alpha/2 - n of the terminating sum
    // sits on a nonpositive integer for one ordering of (0, 2); the element
    // must come out of the swapped orientation, and symmetrically.
    OscillatorBasis g2 = OscillatorBasis::from_gamma(2.0);
    double v02 = spiked_matrix_element(0, 2, g2, 2.0);
    double v20 = spiked_matrix_element(2, 0, g2, 2.0);
    CHECK(rel_diff(v02, 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK(rel_diff(v20, v02) < 1e-14);
}

TEST_CASE("inverse-power element rejections") {
    OscillatorBasis g15 = OscillatorBasis::from_gamma(1.5);
    CHECK(error_kind_of([&] { spiked_matrix_element(0, 0, g15, 3.0); }) ==
          ErrorKind::domain);
    OscillatorBasis g2 = OscillatorBasis::from_gamma(2.0);
    CHECK(error_kind_of([&] { spiked_matrix_element(-1, 0, g2, 1.0); }) ==
          ErrorKind::parameter);
}

TEST_CASE("screened Coulomb basis construction") {
    KratzerBasis kb = KratzerBasis::make(1.0, 2.0, 0);
    CHECK(rel_diff(kb.s, 0.6180339887498948482) < 1e-14);
    KratzerBasis l1 = KratzerBasis::make(0.0, 2.0, 1);
    CHECK(rel_diff(l1.s, 1.0) < 1e-14);

    CHECK(error_kind_of([] { KratzerBasis::make(1.0, 0.0, 0); }) ==
          ErrorKind::parameter);
    CHECK(error_kind_of([] { KratzerBasis::make(1.0, 2.0, -1); }) ==
          ErrorKind::parameter);
    CHECK(error_kind_of([] { KratzerBasis::make(-0.25, 2.0, 0); }) ==
          ErrorKind::domain);
}

TEST_CASE("hydrogen-like spectrum at zero barrier") {
    KratzerBasis coul = KratzerBasis::make(0.0, 2.0, 0);
    CHECK(rel_diff(kratzer_energy(0, coul), -1.0) < 1e-15);
    CHECK(rel_diff(kratzer_energy(1, coul), -0.25) < 1e-15);
    CHECK(rel_diff(kratzer_energy(3, coul), -1.0 / 16.0) < 1e-14);
}

TEST_CASE("radial wavefunction boundary behavior") {
    KratzerBasis kb = KratzerBasis::make(1.0, 2.0, 0);
    CHECK(kratzer_wavefunction(0, kb, 0.0) == 0.0);
    CHECK(error_kind_of([&] { kratzer_wavefunction(0, kb, -0.5); }) ==
          ErrorKind::domain);

    // s = 0: the radial function starts at its normalization constant.
    KratzerBasis coul = KratzerBasis::make(0.0, 2.0, 0);
    CHECK(kratzer_wavefunction(0, coul, 0.0) ==
          kratzer_normalization(0, coul));

    // A slightly negative barrier makes s < 0 and the origin singular.
    KratzerBasis weak = KratzerBasis::make(-0.2, 2.0, 0);
    CHECK(weak.s < 0.0);
    CHECK(error_kind_of([&] { kratzer_wavefunction(0, weak, 0.0); }) ==
          ErrorKind::singular);

    // Unit normalization under the r^2 dr measure.
    QuadratureOptions opt;
    opt.decay_rate = 2.0 / (1.0 + kb.s + 1.0);
    opt.split_point = 40.0;
    QuadratureResult norm = integrate_semiinfinite(
        [&](double r) {
            double w = kratzer_wavefunction(1, kb, r);
            return w * w * r * r;
        },
        1e-10, opt);
    CHECK(rel_diff(norm.value, 1.0) < 1e-9);
}

TEST_CASE("radial moment elements at reference points") {
    KratzerBasis kb = KratzerBasis::make(1.0, 2.0, 0);
    CHECK(rel_diff(kratzer_matrix_element(2, 1, kb, 1.0),
                   -2.96664187786135276) < 1e-12);
    CHECK(rel_diff(kratzer_matrix_element(1, 1, kb, 1.0),
                   9.78115294937452682) < 1e-12);
    CHECK(rel_diff(kratzer_matrix_element(3, 0, kb, 2.5),
                   -5.5835721178308218) < 1e-12);
    CHECK(rel_diff(kratzer_matrix_element(0, 0, kb, 1.0),
                   3.42705098312484227) < 1e-12);
    // Integer alpha = 2 with n = 1 < alpha + 2 stays on the diagonal closed
    // form.
    CHECK(rel_diff(kratzer_matrix_element(1, 1, kb, 2.0),
                   110.5926824431198) < 1e-12);

    KratzerBasis kb3 = KratzerBasis::make(1.0, 3.0, 0);
    CHECK(rel_diff(kratzer_matrix_element(2, 2, kb3, 1.3),
                   28.1690354134295649) < 1e-12);
}

TEST_CASE("hydrogen-like radial moments") {
    KratzerBasis coul = KratzerBasis::make(0.0, 2.0, 0);
    CHECK(rel_diff(kratzer_matrix_element(0, 0, coul, 1.0), 1.5) < 1e-13);
    CHECK(rel_diff(kratzer_matrix_element(1, 1, coul, 1.0), 6.0) < 1e-12);
    // Level n = 1 here is the principal quantum number 2 state:
    // <r^2> = n^2 (5 n^2 + 1 - 3 l(l+1)) / 2 = 42.
    CHECK(rel_diff(kratzer_matrix_element(1, 1, coul, 2.0), 42.0) < 1e-12);
}

TEST_CASE("integer alpha diagonal falls back to the nested sum") {
    // alpha = 1 with n >= 3 blocks the single-sum diagonal; the nested sum
    // must agree with direct quadrature of the moment.
    KratzerBasis kb = KratzerBasis::make(1.0, 2.0, 0);
    double closed = kratzer_matrix_element(3, 3, kb, 1.0);
    double eps = 2.0 / (3.0 + kb.s + 1.0);
    QuadratureOptions opt;
    opt.decay_rate = eps;
    opt.split_point = (8.0 + 2.0 * kb.s + 1.0 + 12.0) / eps;
    opt.abs_scale = std::fabs(closed);
    QuadratureResult q = integrate_semiinfinite(
        [&](double r) {
            double w = kratzer_wavefunction(3, kb, r);
            return w * w * r * r * r;
        },
        1e-10, opt);
    CHECK(rel_diff(closed, q.value) < 1e-8);
}

TEST_CASE("radial moment rejections") {
    KratzerBasis kb = KratzerBasis::make(1.0, 2.0, 0);
    CHECK(error_kind_of([&] {
              kratzer_matrix_element(0, 0, kb, -2.0 * kb.s - 3.5);
          }) == ErrorKind::domain);
}

TEST_CASE("perturbation blocks are symmetric and labelled") {
    OscillatorBasis g2 = OscillatorBasis::from_gamma(2.0);
    MatrixBlock blk = build_perturbation_matrix(g2, 1.0, 4);
    CHECK(blk.size == 4);
    CHECK(blk.alpha == 1.0);
    CHECK(blk.basis_label == "spiked");
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t m = 0; m < n; ++m)
            CHECK(blk.at(n, m) == blk.at(m, n));
    CHECK(rel_diff(blk.at(1, 0), spiked_matrix_element(1, 0, g2, 1.0)) <
          1e-14);

    KratzerBasis kb = KratzerBasis::make(1.0, 2.0, 0);
    MatrixBlock kblk = build_perturbation_matrix(kb, 1.0, 3);
    CHECK(kblk.basis_label == "kratzer");
    CHECK(rel_diff(kblk.at(2, 1), -2.96664187786135276) < 1e-12);

    CHECK(error_kind_of([&] { build_perturbation_matrix(g2, 1.0, 0); }) ==
          ErrorKind::usage);
}
