#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rksamp/jacobi.hpp"
#include "rksamp/pw.hpp"
#include "rksamp/reconstruct.hpp"
#include "rksamp/verify.hpp"

using rksamp::Complex;
using rksamp::JacobiCoefficients;
using rksamp::JacobiModel;
using rksamp::PWConfig;
using rksamp::PWModel;
using rksamp::SampledSignal;
using rksamp::SamplingSet;
using rksamp::SplitMix64;
using rksamp::StateVector;

TEST_CASE("sample transform tabulates values in point order") {
    const JacobiModel model(JacobiCoefficients::free_rule(), 3);
    const auto set = model.extension_spectrum(0.8, 0);
    SplitMix64 rng(83);
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    phi.coeffs.resize(3);
    for (Complex& c : phi.coeffs) c = rng.complex_disk(1.0);

    const SampledSignal signal = rksamp::sample_transform(model, phi, set);
    REQUIRE(signal.values.size() == set.size());
    for (std::size_t i = 0; i < set.size(); ++i)
        CHECK(signal.values[i] ==
              model.transform(phi, Complex(set.points[i], 0.0)));

    StateVector bad = phi;
    bad.basis_tag = "other";
    CHECK_THROWS_AS(rksamp::sample_transform(model, bad, set),
                    std::invalid_argument);
}

TEST_CASE("series order sorts by |x| with ties toward the smaller point") {
    SamplingSet set;
    set.points = {-2.0, -1.0, 1.0, 3.0};
    set.kernel_norms = {1.0, 1.0, 1.0, 1.0};
    set.weights = {1.0, 1.0, 1.0, 1.0};
    const auto order = rksamp::series_order(set);
    REQUIRE(order.size() == 4);
    CHECK(order[0] == 1);  // -1 beats +1 on the tie
    CHECK(order[1] == 2);
    CHECK(order[2] == 0);
    CHECK(order[3] == 3);
}

TEST_CASE("kernel series on the free 2x2 hand case") {
    // Sampling points -1, 1 with weights 1/2; kernel 1 + z*w.
    const JacobiModel model(JacobiCoefficients::free_rule(), 2);
    const auto set = model.extension_spectrum(0.0, 0);

    StateVector ones = model.gauge();            // transform == 1
    StateVector line = ones;                     // transform == z
    line.coeffs = {Complex(0.0, 0.0), Complex(1.0, 0.0)};

    const auto sig1 = rksamp::sample_transform(model, ones, set);
    const auto sigz = rksamp::sample_transform(model, line, set);

    SplitMix64 rng(89);
    for (int trial = 0; trial < 8; ++trial) {
        const Complex z = rng.complex_disk(3.0);
        // (1-z)/2 + (1+z)/2 == 1 and -(1-z)/2 + (1+z)/2 == z.
        CHECK(std::abs(rksamp::kernel_series(model, sig1, z, 2) - 1.0) < 1e-14);
        CHECK(std::abs(rksamp::kernel_series(model, sigz, z, 2) - z) < 1e-14);
    }

    // One term keeps only the smaller-|x| point, here -1.
    const Complex z(0.4, 0.0);
    CHECK(std::abs(rksamp::kernel_series(model, sig1, z, 1) - (1.0 - 0.4) * 0.5) <
          1e-15);

    // Zero terms is the empty sum; more terms than samples is an error.
    CHECK(rksamp::kernel_series(model, sig1, z, 0) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(rksamp::kernel_series(model, sig1, z, 3),
                    std::invalid_argument);
}

TEST_CASE("kernel series passes stored samples through unchanged") {
    const JacobiModel model(JacobiCoefficients::chebyshev_rule(), 5);
    const auto set = model.extension_spectrum(0.3, 0);
    SplitMix64 rng(97);
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    phi.coeffs.resize(5);
    for (Complex& c : phi.coeffs) c = rng.complex_disk(1.0);
    const auto signal = rksamp::sample_transform(model, phi, set);
    for (std::size_t n = 0; n < set.size(); ++n) {
        const Complex z(set.points[n], 0.0);
        CHECK(rksamp::kernel_series(model, signal, z, 2) == signal.values[n]);
        const auto gen = rksamp::make_lagrange_generator(model, set, 0);
        CHECK(rksamp::lagrange_series(gen, signal, z, 2) == signal.values[n]);
    }
}

TEST_CASE("lagrange generator closed forms") {
    const JacobiModel model(JacobiCoefficients::free_rule(), 2);
    const auto set = model.extension_spectrum(0.0, 0);

    // Anchor at the point +1: G(z) = (z-1)(1+z)/2 = (z^2-1)/2.
    const auto gen1 = rksamp::make_lagrange_generator(model, set, 1);
    SplitMix64 rng(101);
    for (int trial = 0; trial < 8; ++trial) {
        const Complex z = rng.complex_disk(2.0);
        CHECK(std::abs(rksamp::lagrange_G(gen1, z) - (z * z - 1.0) / 2.0) < 1e-14);
    }
    // G vanishes at every sampling point.
    CHECK(std::abs(rksamp::lagrange_G(gen1, Complex(-1.0, 0.0))) < 1e-15);
    CHECK(std::abs(rksamp::lagrange_G(gen1, Complex(1.0, 0.0))) < 1e-15);

    CHECK_THROWS_AS(rksamp::make_lagrange_generator(model, set, 2),
                    std::invalid_argument);

    // Derivative normalization at the anchor: (G(x+h) - G(x-h)) / 2h -> 1.
    const double h = 1e-6;
    const Complex dg = (rksamp::lagrange_G(gen1, Complex(1.0 + h, 0.0)) -
                        rksamp::lagrange_G(gen1, Complex(1.0 - h, 0.0))) /
                       (2.0 * h);
    CHECK(std::abs(dg - 1.0) < 1e-9);
}

TEST_CASE("lagrange generator on the mode lattice") {
    // Anchor at lambda_0 = 0: G(z) = (exp(2*pi*i*z) - 1) / (2*pi*i).
    const PWModel model(PWConfig{2 * std::numbers::pi, 4});
    const auto set = model.extension_spectrum(0.0, 6);
    const auto order = rksamp::series_order(set);
    const auto gen = rksamp::make_lagrange_generator(model, set, order[0]);
    const Complex i2pi(0.0, 2 * std::numbers::pi);
    SplitMix64 rng(103);
    for (int trial = 0; trial < 6; ++trial) {
        const Complex z = rng.complex_disk(2.0);
        const Complex want = (std::exp(i2pi * z) - 1.0) / i2pi;
        CHECK(std::abs(rksamp::lagrange_G(gen, z) - want) < 1e-13);
    }
    for (double x : set.points)
        CHECK(std::abs(rksamp::lagrange_G(gen, Complex(x, 0.0))) < 1e-13);
}

TEST_CASE("lagrange series matches the kernel series") {
    SplitMix64 rng(107);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 3 + rng.next() % 8;
        std::vector<double> b(n), q(n);
        for (double& x : b) x = rng.uniform(0.5, 1.5);
        for (double& x : q) x = rng.uniform(-1.0, 1.0);
        const JacobiModel model(JacobiCoefficients::from_arrays(b, q), n);
        const double tau = rng.uniform(0.0, 3.0);
        const auto set = model.extension_spectrum(tau, 0);

        StateVector phi;
        phi.basis_tag = model.basis_tag();
        phi.coeffs.resize(n);
        for (Complex& c : phi.coeffs) c = rng.complex_disk(1.0);
        const auto signal = rksamp::sample_transform(model, phi, set);
        const auto order = rksamp::series_order(set);
        const auto gen = rksamp::make_lagrange_generator(model, set, order[0]);

        for (int pt = 0; pt < 6; ++pt) {
            const Complex z = rng.complex_disk(4.0);
            const Complex a = rksamp::kernel_series(model, signal, z, n);
            const Complex c = rksamp::lagrange_series(gen, signal, z, n);
            CHECK(std::abs(a - c) <= 1e-9 * std::max(1.0, std::abs(a)));
            // Both reproduce the transform exactly at full term count.
            const Complex truth = model.transform(phi, z);
            CHECK(std::abs(a - truth) <= 1e-9 * std::max(1.0, std::abs(truth)));
        }
    }
}

TEST_CASE("lagrange series recovers polynomial samples at a point") {
    const JacobiModel model(JacobiCoefficients::free_rule(), 2);
    const auto set = model.extension_spectrum(0.0, 0);
    StateVector line;
    line.basis_tag = model.basis_tag();
    line.coeffs = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
    const auto signal = rksamp::sample_transform(model, line, set);
    const auto gen = rksamp::make_lagrange_generator(model, set, 0);
    CHECK(std::abs(rksamp::lagrange_series(gen, signal, Complex(0.3, 0.0), 2) -
                   0.3) < 1e-10);
    CHECK_THROWS_AS(rksamp::lagrange_series(gen, signal, Complex(0.3, 0.0), 5),
                    std::invalid_argument);
}

TEST_CASE("single-mode signals reconstruct exactly on the mode lattice") {
    const PWConfig cfg{2.0, 4};
    const PWModel model(cfg);
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    phi.coeffs.assign(model.dimension(), Complex(0.0, 0.0));
    phi.coeffs[6] = Complex(0.7, -0.2);  // mode k = +2

    const auto set = model.extension_spectrum(0.0, 8);
    const auto signal = rksamp::sample_transform(model, phi, set);
    SplitMix64 rng(109);
    for (int trial = 0; trial < 6; ++trial) {
        const Complex z = rng.complex_disk(2.5);
        const Complex truth = model.transform(phi, z);
        CHECK(std::abs(rksamp::kernel_series(model, signal, z, set.size()) -
                       truth) < 1e-12);
    }
}

TEST_CASE("reconstruction report layout and schedule validation") {
    const JacobiModel model(JacobiCoefficients::free_rule(), 6);
    SplitMix64 rng(113);
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    phi.coeffs.resize(6);
    for (Complex& c : phi.coeffs) c = rng.complex_disk(1.0);

    const std::vector<Complex> grid = {Complex(-1.0, 0.0), Complex(0.2, 0.0),
                                       Complex(0.5, 0.5)};
    const auto report =
        rksamp::reconstruction_report(model, phi, 0.9, 0, grid, {2, 6});
    REQUIRE(report.rows.size() == 6);
    // Schedule-major layout, grid-minor.
    CHECK(report.rows[0].terms == 2);
    CHECK(report.rows[2].terms == 2);
    CHECK(report.rows[3].terms == 6);
    CHECK(report.rows[1].z == grid[1]);
    // Full-term rows reproduce the transform.
    for (std::size_t i = 3; i < 6; ++i) {
        CHECK(report.rows[i].err_kernel < 1e-9);
        CHECK(report.rows[i].err_lagrange < 1e-9);
    }
    // Partial sums cannot beat machine noise to zero on generic grids.
    CHECK(report.rows[0].err_kernel > 0.0);

    CHECK_THROWS_AS(rksamp::reconstruction_report(model, phi, 0.9, 0, grid, {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rksamp::reconstruction_report(model, phi, 0.9, 0, grid, {7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        rksamp::reconstruction_report(model, phi, 0.9, 0, grid, {4, 2}),
        std::invalid_argument);
}
