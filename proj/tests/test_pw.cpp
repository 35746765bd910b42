#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rksamp/pw.hpp"
#include "rksamp/verify.hpp"

using rksamp::Complex;
using rksamp::PhaseParameter;
using rksamp::PWConfig;
using rksamp::PWModel;
using rksamp::SplitMix64;
using rksamp::StateVector;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Long-double reference for the interval transform of 1, accurate to a few
// units in the last double place.
Complex phase_kernel_ld(double a, Complex u) {
    const std::complex<long double> iu(-static_cast<long double>(u.imag()),
                                       static_cast<long double>(u.real()));
    const std::complex<long double> num = std::exp(iu * static_cast<long double>(a)) - 1.0L;
    const std::complex<long double> q = num / iu;
    return Complex(static_cast<double>(q.real()), static_cast<double>(q.imag()));
}

}  // namespace

TEST_CASE("pw config and phase validation") {
    CHECK_NOTHROW(rksamp::validate(PWConfig{1.0, 4}));
    CHECK_THROWS_AS(rksamp::validate(PWConfig{0.0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(rksamp::validate(PWConfig{-2.0, 4}), std::invalid_argument);
    CHECK_NOTHROW(rksamp::validate(PhaseParameter{0.0}));
    CHECK_THROWS_AS(rksamp::validate(PhaseParameter{-0.1}), std::invalid_argument);
    CHECK_THROWS_AS(rksamp::validate(PhaseParameter{kTwoPi}), std::invalid_argument);
}

TEST_CASE("pw lattice on a hand case") {
    // a = 2*pi, theta = pi: lambda_n = n - 1/2.
    const PWConfig cfg{kTwoPi, 4};
    const auto set = rksamp::pw_sampling_points(cfg, PhaseParameter{std::numbers::pi}, 1);
    REQUIRE(set.size() == 3);
    CHECK(set.points[0] == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(set.points[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(set.points[2] == doctest::Approx(0.5).epsilon(1e-15));
    for (std::size_t i = 0; i < set.size(); ++i) {
        CHECK(set.kernel_norms[i] == doctest::Approx(kTwoPi));
        CHECK(set.weights[i] == doctest::Approx(1.0 / kTwoPi));
    }
    CHECK(set.extension_param == std::numbers::pi);
}

TEST_CASE("pw lattice satisfies the boundary phase condition") {
    const PWConfig cfg{1.7, 4};
    const double theta = 2.3;
    const auto set = rksamp::pw_sampling_points(cfg, PhaseParameter{theta}, 8);
    CHECK(set.size() == 17);
    // Position-space eigenfunctions exp(-i*lambda*t) pick up exp(i*theta)
    // across the interval.
    const Complex target = std::exp(Complex(0.0, theta));
    for (double lam : set.points) {
        const Complex across = std::exp(Complex(0.0, -lam * cfg.a));
        CHECK(std::abs(across - target) < 1e-12);
    }
    // Consecutive spacing is 2*pi/a.
    for (std::size_t i = 0; i + 1 < set.size(); ++i)
        CHECK(set.points[i + 1] - set.points[i] ==
              doctest::Approx(kTwoPi / cfg.a).epsilon(1e-13));
}

TEST_CASE("phase kernel: closed-form values") {
    // u -> 0 limit is the interval length.
    CHECK(std::abs(rksamp::phase_kernel(kTwoPi, Complex(0.0, 0.0)) - kTwoPi) <
          1e-13);
    // a = 2*pi, u = 1/2: (exp(i*pi) - 1) / (i/2) = 4i.
    const Complex v = rksamp::phase_kernel(kTwoPi, Complex(0.5, 0.0));
    CHECK(std::abs(v - Complex(0.0, 4.0)) < 1e-12);
}

TEST_CASE("phase kernel: series branch joins the exact formula") {
    const double a = kTwoPi;
    const Complex probes[] = {
        Complex(1e-7, 0.0),    Complex(5e-7, 0.0),  Complex(9.9e-7, 0.0),
        Complex(3e-7, 4e-7),   Complex(1.01e-6, 0.0), Complex(1e-5, 0.0),
        Complex(-8e-7, 2e-7),
    };
    for (const Complex& u : probes)
        CHECK(std::abs(rksamp::phase_kernel(a, u) - phase_kernel_ld(a, u)) < 1e-13);
}

TEST_CASE("pw kernel and transform frozen values") {
    const PWConfig cfg{kTwoPi, 4};
    CHECK(std::abs(rksamp::pw_kernel(cfg, Complex(0.5, 0.0), Complex(0.0, 0.0)) -
                   Complex(0.0, 4.0)) < 1e-12);

    const PWModel model(cfg);
    StateVector mode0;
    mode0.coeffs.assign(model.dimension(), Complex(0.0, 0.0));
    mode0.coeffs[cfg.cutoff] = 1.0;  // slot of mode k = 0
    mode0.basis_tag = model.basis_tag();
    // tau_0(0) = sqrt(a); at the lattice point z = 5 the mode vanishes.
    CHECK(std::abs(model.transform(mode0, Complex(0.0, 0.0)) -
                   std::sqrt(kTwoPi)) < 1e-12);
    CHECK(std::abs(model.transform(mode0, Complex(5.0, 0.0))) < 1e-12);
}

TEST_CASE("pw biorthogonality over the lattice") {
    // The mode basis lives on the phase-0 lattice, where it is biorthogonal.
    const PWConfig cfg{1.3, 4};
    const PWModel model(cfg);
    const auto set = rksamp::pw_sampling_points(cfg, PhaseParameter{0.0}, 4);
    const double root_a = std::sqrt(cfg.a);
    for (std::size_t j = 0; j < model.dimension(); ++j) {
        const int k = model.mode_of_slot(j);
        for (std::size_t m = 0; m < set.size(); ++m) {
            const int lattice_index = static_cast<int>(m) - 4;
            const Complex v = model.basis_function(j, Complex(set.points[m], 0.0));
            const double want = lattice_index == k ? root_a : 0.0;
            CHECK(std::abs(v - want) < 1e-12);
        }
    }
}

TEST_CASE("pw transform agrees with the plain mode sum") {
    const PWConfig cfg{2.6, 6};
    const PWModel model(cfg);
    SplitMix64 rng(71);
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    phi.coeffs.resize(model.dimension());
    for (Complex& c : phi.coeffs) c = rng.complex_disk(1.0);

    for (int trial = 0; trial < 5; ++trial) {
        const Complex z = rng.complex_disk(3.0);
        Complex acc = 0.0;
        for (std::size_t j = 0; j < model.dimension(); ++j)
            acc += phi.coeffs[j] * model.basis_function(j, z);
        CHECK(std::abs(model.transform(phi, z) - acc) < 1e-13);
    }

    StateVector bad = phi;
    bad.coeffs.pop_back();
    CHECK_THROWS_AS(model.transform(bad, Complex(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("pw sample tabulates the transform in point order") {
    const PWConfig cfg{2.0, 3};
    const PWModel model(cfg);
    SplitMix64 rng(73);
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    phi.coeffs.resize(model.dimension());
    for (Complex& c : phi.coeffs) c = rng.complex_disk(1.0);

    const auto set = rksamp::pw_sampling_points(cfg, PhaseParameter{1.0}, 5);
    const auto values = rksamp::pw_sample(cfg, phi, set);
    REQUIRE(values.size() == set.size());
    for (std::size_t i = 0; i < set.size(); ++i)
        CHECK(values[i] == model.transform(phi, Complex(set.points[i], 0.0)));
}

TEST_CASE("pw star-symmetric kernel realization") {
    const PWConfig cfg{2.2, 5};
    const PWModel model(cfg);
    SplitMix64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        const Complex z = rng.complex_disk(2.0);
        const Complex w = rng.complex_disk(2.0);
        const Complex u = z - w;
        const Complex recentred =
            std::exp(Complex(0.0, -cfg.a / 2.0) * u) * model.kernel(z, w);
        CHECK(std::abs(model.debranges_kernel(z, w) - recentred) < 1e-12);
        if (std::abs(u) > 1e-3) {
            const Complex closed = 2.0 * std::sin(u * (cfg.a / 2.0)) / u;
            CHECK(std::abs(model.debranges_kernel(z, w) - closed) < 1e-11);
        }
    }
    CHECK(std::abs(model.debranges_kernel(Complex(0.7, 0.0), Complex(0.7, 0.0)) -
                   cfg.a) < 1e-12);
}

TEST_CASE("pw kernel mode-sum truncations improve with the cutoff") {
    // The full kernel is the cutoff -> infinity limit of the mode sums; the
    // truncation error must shrink as the cutoff doubles.
    const double a = 2.0;
    const Complex z(0.31, 0.0), w(-0.77, 0.0);
    const Complex full = rksamp::pw_kernel(PWConfig{a, 4}, z, w);
    double prev_err = 1e300;
    for (std::size_t cutoff : {8, 16, 32}) {
        const PWModel model(PWConfig{a, cutoff});
        Complex acc = 0.0;
        for (std::size_t j = 0; j < model.dimension(); ++j)
            acc += model.basis_function(j, z) * std::conj(model.basis_function(j, w));
        const double err = std::abs(acc - full);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 0.05);
}

TEST_CASE("pw slot bookkeeping") {
    const PWModel model(PWConfig{1.0, 3});
    CHECK(model.dimension() == 7);
    CHECK(model.mode_of_slot(0) == -3);
    CHECK(model.mode_of_slot(3) == 0);
    CHECK(model.mode_of_slot(6) == 3);
    CHECK_THROWS_AS(model.mode_of_slot(7), std::invalid_argument);
    CHECK_THROWS_AS(model.basis_function(7, Complex(0.0, 0.0)),
                    std::invalid_argument);
    CHECK(model.expected_sample_gap(-10.0, 10.0) == doctest::Approx(kTwoPi));
}
