#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rksamp/tridiag.hpp"
#include "rksamp/verify.hpp"

using rksamp::SplitMix64;
using rksamp::TridiagMatrix;

namespace {

TridiagMatrix random_matrix(SplitMix64& rng, std::size_t n) {
    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (double& x : d) x = rng.uniform(-1.0, 1.0);
    for (double& x : e) x = rng.uniform(0.5, 1.5);
    return TridiagMatrix(d, e);
}

std::vector<double> dense_eigenvalues(const TridiagMatrix& m) {
    const std::size_t n = m.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = m.diag()[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        a(i, i + 1) = a(i + 1, i) = m.offdiag()[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

}  // namespace

TEST_CASE("tridiag: construction guards") {
    CHECK_THROWS_AS(TridiagMatrix({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(TridiagMatrix({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(TridiagMatrix({0.0, 0.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(TridiagMatrix({0.0, 0.0}, {-1.0}), std::invalid_argument);
    const TridiagMatrix m({1.0, -3.0}, {2.0});
    CHECK(m.size() == 2);
    CHECK(m.scale() == 3.0);
}

TEST_CASE("tridiag: sturm counts on hand matrices") {
    // [[0,1],[1,0]] has eigenvalues -1 and 1.
    const TridiagMatrix m2({0.0, 0.0}, {1.0});
    CHECK(rksamp::sturm_count(m2, 2.0) == 2);
    CHECK(rksamp::sturm_count(m2, 0.0) == 1);
    CHECK(rksamp::sturm_count(m2, -2.0) == 0);
    // An eigenvalue sitting exactly at x is not counted.
    CHECK(rksamp::sturm_count(m2, 1.0) == 1);
    CHECK(rksamp::sturm_count(m2, -1.0) == 0);

    // 3x3 free matrix: eigenvalues -sqrt(2), 0, sqrt(2).
    const TridiagMatrix m3({0.0, 0.0, 0.0}, {1.0, 1.0});
    CHECK(rksamp::sturm_count(m3, 0.0) == 1);
    CHECK(rksamp::sturm_count(m3, 1.5) == 2);
    CHECK(rksamp::sturm_count(m3, 3.0) == 3);
}

TEST_CASE("tridiag: sturm count is monotone across the spectrum interval") {
    SplitMix64 rng(2024);
    const TridiagMatrix m = random_matrix(rng, 9);
    const auto [lo, hi] = rksamp::gershgorin_interval(m);
    CHECK(rksamp::sturm_count(m, lo) == 0);
    CHECK(rksamp::sturm_count(m, hi + 1e-12 * m.scale()) == 9);
    int prev = 0;
    for (int i = 0; i <= 200; ++i) {
        const double x = lo + (hi - lo) * i / 200.0;
        const int c = rksamp::sturm_count(m, x);
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("tridiag: eigenvalues of closed-form matrices") {
    const TridiagMatrix m2({0.0, 0.0}, {1.0});
    const auto ev2 = rksamp::eigenvalues(m2, 1e-14);
    REQUIRE(ev2.size() == 2);
    CHECK(ev2[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ev2[1] == doctest::Approx(1.0).epsilon(1e-12));

    const TridiagMatrix m3({0.0, 0.0, 0.0}, {1.0, 1.0});
    const auto ev3 = rksamp::eigenvalues(m3, 1e-14);
    REQUIRE(ev3.size() == 3);
    CHECK(ev3[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::fabs(ev3[1]) < 1e-12);
    CHECK(ev3[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // Constant 1/2 off-diagonal of size 4: eigenvalues cos(k*pi/5), k = 4..1.
    const TridiagMatrix m4({0.0, 0.0, 0.0, 0.0}, {0.5, 0.5, 0.5});
    const auto ev4 = rksamp::eigenvalues(m4, 1e-14);
    REQUIRE(ev4.size() == 4);
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < 4; ++k)
        CHECK(ev4[k] == doctest::Approx(std::cos((4 - k) * pi / 5)).epsilon(1e-12));
}

TEST_CASE("tridiag: bisection matches a dense solver on random matrices") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.next() % 11;
        const TridiagMatrix m = random_matrix(rng, n);
        const auto ours = rksamp::eigenvalues(m, 1e-13);
        const auto dense = dense_eigenvalues(m);
        REQUIRE(ours.size() == dense.size());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(ours[i] - dense[i]) < 1e-10 * (1.0 + m.scale()));
    }
}

TEST_CASE("tridiag: eigenvalues of successive truncations interlace") {
    SplitMix64 rng(11);
    std::vector<double> d(12), e(11);
    for (double& x : d) x = rng.uniform(-1.0, 1.0);
    for (double& x : e) x = rng.uniform(0.5, 1.5);
    for (std::size_t n = 2; n <= 12; ++n) {
        const TridiagMatrix small(
            std::vector<double>(d.begin(), d.begin() + n - 1),
            std::vector<double>(e.begin(), e.begin() + n - 2));
        const TridiagMatrix big(std::vector<double>(d.begin(), d.begin() + n),
                                std::vector<double>(e.begin(), e.begin() + n - 1));
        const auto inner = rksamp::eigenvalues(small, 1e-13);
        const auto outer = rksamp::eigenvalues(big, 1e-13);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            CHECK(outer[i] < inner[i]);
            CHECK(inner[i] < outer[i + 1]);
        }
    }
}

TEST_CASE("tridiag: gershgorin interval contains the dense spectrum") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const TridiagMatrix m = random_matrix(rng, 4 + rng.next() % 6);
        const auto [lo, hi] = rksamp::gershgorin_interval(m);
        for (double x : dense_eigenvalues(m)) {
            CHECK(x >= lo);
            CHECK(x <= hi);
        }
    }
}

TEST_CASE("tridiag: characteristic polynomial values and scaling") {
    // det(M - xI) for [[0,1],[1,0]] is x^2 - 1.
    const TridiagMatrix m2({0.0, 0.0}, {1.0});
    const auto [p0, dp0] = rksamp::char_poly(m2, 0.0);
    CHECK(std::ldexp(p0.value, p0.exponent) == doctest::Approx(-1.0));
    CHECK(std::ldexp(dp0.value, dp0.exponent) == doctest::Approx(0.0));
    const auto [p3, dp3] = rksamp::char_poly(m2, 3.0);
    CHECK(std::ldexp(p3.value, p3.exponent) == doctest::Approx(8.0));
    CHECK(std::ldexp(dp3.value, dp3.exponent) == doctest::Approx(6.0));

    // Large entries must not overflow the scaled representation.
    std::vector<double> d(60, 0.0), e(59);
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = static_cast<double>((k + 2) * (k + 2));
    const TridiagMatrix big(d, e);
    const auto [pb, dpb] = rksamp::char_poly(big, 1.0);
    CHECK(std::isfinite(pb.value));
    CHECK(std::isfinite(dpb.value));
    CHECK(std::fabs(pb.value) > 0.0);
    // The scaled value is outside double range only through the exponent.
    CHECK(std::fabs(pb.value) < 1e300);
}

TEST_CASE("tridiag: eigenvector recurrence on hand matrices") {
    const TridiagMatrix m2({0.0, 0.0}, {1.0});
    const auto v_plus = rksamp::eigvec_by_recurrence(m2, 1.0);
    REQUIRE(v_plus.size() == 2);
    CHECK(v_plus[0] == doctest::Approx(1.0));
    CHECK(v_plus[1] == doctest::Approx(1.0));
    const auto v_minus = rksamp::eigvec_by_recurrence(m2, -1.0);
    CHECK(v_minus[1] == doctest::Approx(-1.0));

    const TridiagMatrix m3({0.0, 0.0, 0.0}, {1.0, 1.0});
    const auto v3 = rksamp::eigvec_by_recurrence(m3, std::sqrt(2.0));
    REQUIRE(v3.size() == 3);
    CHECK(v3[0] == doctest::Approx(1.0));
    CHECK(v3[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(v3[2] == doctest::Approx(1.0));

    CHECK_THROWS_AS(rksamp::eigvec_by_recurrence(m2, 0.5), std::invalid_argument);
}

TEST_CASE("tridiag: eigenvector residuals are small for computed eigenvalues") {
    SplitMix64 rng(17);
    const TridiagMatrix m = random_matrix(rng, 10);
    const auto evs = rksamp::eigenvalues(m, 1e-13);
    for (double x : evs) {
        const auto v = rksamp::eigvec_by_recurrence(m, x);
        // Residual check: ||(M - x)v|| against scale * ||v||.
        double rss = 0.0, vss = 0.0;
        const auto& d = m.diag();
        const auto& e = m.offdiag();
        for (std::size_t i = 0; i < v.size(); ++i) {
            double r = (d[i] - x) * v[i];
            if (i > 0) r += e[i - 1] * v[i - 1];
            if (i + 1 < v.size()) r += e[i] * v[i + 1];
            rss += r * r;
            vss += v[i] * v[i];
        }
        CHECK(std::sqrt(rss) <= 1e-8 * m.scale() * std::sqrt(vss));
    }
}
