#include "rksamp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>

#include "rksamp/debranges.hpp"
#include "rksamp/jacobi.hpp"
#include "rksamp/pw.hpp"
#include "rksamp/reconstruct.hpp"
#include "rksamp/tridiag.hpp"

namespace rksamp {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

Complex SplitMix64::complex_disk(double r) {
    const double rad = r * std::sqrt(uniform01());
    const double ang = uniform(0.0, 2.0 * kPi);
    return Complex(rad * std::cos(ang), rad * std::sin(ang));
}

namespace {

JacobiCoefficients random_coeffs(SplitMix64& rng, std::size_t len) {
    std::vector<double> b(len), q(len);
    for (std::size_t k = 0; k < len; ++k) {
        b[k] = rng.uniform(0.5, 1.5);
        q[k] = rng.uniform(-1.0, 1.0);
    }
    return JacobiCoefficients::from_arrays(std::move(b), std::move(q));
}

std::unique_ptr<JacobiModel> random_jacobi(SplitMix64& rng, std::size_t nmin,
                                           std::size_t nmax) {
    const std::size_t n =
        nmin + static_cast<std::size_t>(rng.uniform01() * static_cast<double>(nmax - nmin + 1));
    const std::size_t nn = std::min(n, nmax);
    return std::make_unique<JacobiModel>(random_coeffs(rng, nn), nn);
}

StateVector random_state(SplitMix64& rng, const Model& m) {
    StateVector phi;
    phi.basis_tag = m.basis_tag();
    phi.coeffs.resize(m.dimension());
    for (Complex& v : phi.coeffs) v = rng.complex_disk(1.0);
    double nn = phi.norm();
    if (nn == 0.0) {
        phi.coeffs[0] = 1.0;
        nn = 1.0;
    }
    for (Complex& v : phi.coeffs) v /= nn;
    return phi;
}

// Boundary angle bounded away from the decoupled value so tan stays modest.
double random_tau(SplitMix64& rng) {
    for (;;) {
        const double tau = rng.uniform(0.0, kPi);
        if (std::fabs(tau - kPi / 2) > 0.05 && tau < kPi) return tau;
    }
}

using CheckFn = std::function<CheckResult(SplitMix64&)>;

CheckResult make_result(const char* name, double max_err, double tol,
                        std::string detail = "") {
    CheckResult r;
    r.name = name;
    r.max_err = max_err;
    r.tolerance = tol;
    r.pass = max_err <= tol;
    r.detail = std::move(detail);
    return r;
}

CheckResult check_kernel_hermitian(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto jm = random_jacobi(rng, 2, 12);
        const PWModel pm(PWConfig{rng.uniform(0.5, 4.0), 6});
        const Complex z = rng.complex_disk(3.0), w = rng.complex_disk(3.0);
        for (const Model* m : {static_cast<const Model*>(jm.get()),
                               static_cast<const Model*>(&pm)}) {
            const Complex lhs = m->kernel(z, w);
            const Complex rhs = std::conj(m->kernel(std::conj(w), std::conj(z)));
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    }
    return make_result("kernel.hermitian", worst, 1e-13);
}

CheckResult check_kernel_reproducing(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const auto jm = random_jacobi(rng, 2, 10);
        const StateVector phi = random_state(rng, *jm);
        const double tau = random_tau(rng);
        const auto mu = spectral_measure(jm->extension_spectrum(tau, 0));
        const Complex w = rng.complex_disk(2.0);
        const Complex via_measure = parseval_inner(*jm, jm->xi_state(w), phi, mu);
        const Complex direct = jm->transform(phi, w);
        worst = std::max(worst, std::abs(via_measure - direct) /
                                    std::max(1.0, std::abs(direct)));
    }
    return make_result("kernel.reproducing", worst, 1e-10);
}

CheckResult check_kernel_gauge(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const auto jm = random_jacobi(rng, 1, 10);
        const Complex z = rng.complex_disk(3.0);
        worst = std::max(worst, std::abs(jm->transform(jm->gauge(), z) - 1.0));
        const Complex z0(rng.uniform(-1.0, 1.0), rng.uniform(0.3, 2.0));
        const auto spec = jm->canonical_kernel_vector(z0);
        if (jm->dimension() >= 2) {
            const StateVector xi = jm->xi_from_psi(spec, random_tau(rng),
                                                   random_tau(rng), z0 + 0.25, 1e-8);
            worst = std::max(worst, std::abs(xi.coeffs[0] - 1.0));
        }
    }
    return make_result("kernel.gauge_normalization", worst, 1e-12);
}

CheckResult check_lemma1_independence(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const auto jm = random_jacobi(rng, 2, 12);
        const Complex z0(rng.uniform(-1.0, 1.0), rng.uniform(0.4, 2.0));
        const auto spec = jm->canonical_kernel_vector(z0);
        const Complex z = rng.complex_disk(2.0) + Complex(0.0, 0.4);
        const StateVector xi =
            jm->xi_from_psi(spec, random_tau(rng), random_tau(rng), z, 1e-9);
        // Direct oracle: the kernel section at z has coefficients
        // conj(P_j(z)), already gauge-normalized since P_0 = 1.
        const StateVector oracle = jm->xi_state(z);
        double diff = 0.0, nn = 0.0;
        for (std::size_t j = 0; j < xi.coeffs.size(); ++j) {
            diff += std::norm(xi.coeffs[j] - oracle.coeffs[j]);
            nn += std::norm(oracle.coeffs[j]);
        }
        worst = std::max(worst, std::sqrt(diff) / std::max(1.0, std::sqrt(nn)));
    }
    return make_result("kernel.lemma1_independence", worst, 1e-8);
}

CheckResult check_kernel_positivity(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const auto jm = random_jacobi(rng, 2, 10);
        const PWModel pm(PWConfig{rng.uniform(0.5, 3.0), 6});
        for (const Model* m : {static_cast<const Model*>(jm.get()),
                               static_cast<const Model*>(&pm)}) {
            const std::size_t mpts = 2 + static_cast<std::size_t>(rng.uniform01() * 4);
            std::vector<double> xs(mpts);
            std::vector<Complex> cs(mpts);
            for (std::size_t i = 0; i < mpts; ++i) {
                xs[i] = rng.uniform(-3.0, 3.0);
                cs[i] = rng.complex_disk(1.0);
            }
            Complex quad = 0.0;
            double scale = 0.0;
            for (std::size_t i = 0; i < mpts; ++i)
                for (std::size_t j = 0; j < mpts; ++j) {
                    const Complex kij = m->kernel(Complex(xs[i], 0.0), Complex(xs[j], 0.0));
                    quad += std::conj(cs[i]) * cs[j] * kij;
                    scale = std::max(scale, std::abs(kij));
                }
            const double viol = std::max(0.0, -quad.real()) + std::fabs(quad.imag());
            worst = std::max(worst, viol / std::max(1.0, scale));
        }
    }
    return make_result("kernel.positivity", worst, 1e-12);
}

CheckResult check_cd_identity(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform01() * 32);
        const JacobiCoefficients c = random_coeffs(rng, std::min<std::size_t>(n, 32));
        const std::size_t nn = std::min<std::size_t>(n, 32);
        const Complex z = rng.complex_disk(3.0), w = rng.complex_disk(3.0);
        const Complex viaq = cd_kernel(c, nn, z, w);
        const OrthoPolyEval ez = eval_ortho_polys(c, nn - 1, z);
        const OrthoPolyEval ew = eval_ortho_polys(c, nn - 1, w);
        Complex direct = 0.0;
        for (std::size_t k = 0; k < nn; ++k) direct += ez.values[k] * ew.values[k];
        direct *= std::exp(ez.log_scale + ew.log_scale);
        worst = std::max(worst,
                         std::abs(viaq - direct) / std::max(1.0, std::abs(direct)));
    }
    return make_result("jacobi.cd_identity", worst, 1e-12);
}

CheckResult check_eigvec_consistency(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 15; ++trial) {
        const auto jm = random_jacobi(rng, 2, 10);
        const double tau = random_tau(rng);
        const SamplingSet set = jm->extension_spectrum(tau, 0);
        const TridiagMatrix t = jm->truncation(BoundaryAngle{tau});
        for (double x : set.points) {
            const std::vector<double> v = eigvec_by_recurrence(t, x, 1e-8);
            const OrthoPolyEval e =
                eval_ortho_polys(jm->coefficients(), jm->dimension() - 1, x);
            const double s = std::exp(e.log_scale);
            for (std::size_t k = 0; k < v.size(); ++k)
                worst = std::max(worst, std::fabs(v[k] - e.values[k].real() * s) /
                                            std::max(1.0, std::fabs(v[k])));
        }
    }
    return make_result("jacobi.eigvec_consistency", worst, 1e-12);
}

CheckResult check_extension_sweep(SplitMix64& rng) {
    // Sampling sets of two different angles must strictly alternate (their
    // truncations differ by a rank-one boundary perturbation).
    double violations = 0.0;
    for (int trial = 0; trial < 15; ++trial) {
        const auto jm = random_jacobi(rng, 2, 10);
        const double t1 = random_tau(rng);
        double t2 = random_tau(rng);
        while (std::fabs(std::tan(t1) - std::tan(t2)) < 0.3) t2 = random_tau(rng);
        const SamplingSet s1 = jm->extension_spectrum(t1, 0);
        const SamplingSet s2 = jm->extension_spectrum(t2, 0);

        std::vector<std::pair<double, int>> merged;
        for (double x : s1.points) merged.emplace_back(x, 0);
        for (double x : s2.points) merged.emplace_back(x, 1);
        std::sort(merged.begin(), merged.end());
        for (std::size_t i = 0; i + 1 < merged.size(); ++i)
            if (merged[i].second == merged[i + 1].second) violations += 1.0;
    }
    return make_result("jacobi.extension_sweep", violations, 0.0);
}

CheckResult check_xi_orthogonality(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto jm = random_jacobi(rng, 2, 8);
        const SamplingSet set = jm->extension_spectrum(random_tau(rng), 0);
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j) {
                const Complex kij = jm->kernel(Complex(set.points[i], 0.0),
                                               Complex(set.points[j], 0.0));
                worst = std::max(worst, std::abs(kij) /
                                            std::sqrt(set.kernel_norms[i] *
                                                      set.kernel_norms[j]));
            }
    }
    return make_result("jacobi.xi_orthogonality", worst, 1e-10);
}

CheckResult check_gauge_first_component(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto jm = random_jacobi(rng, 1, 10);
        const SamplingSet set = jm->extension_spectrum(random_tau(rng), 0);
        for (double x : set.points)
            worst = std::max(worst,
                             std::abs(jm->xi_state(Complex(x, 0.0)).coeffs[0] - 1.0));
    }
    return make_result("jacobi.gauge_first_component", worst, 0.0);
}

CheckResult check_limit_circle_mechanism(SplitMix64&) {
    // Degenerate tolerance accepts anything; constant coefficients diverge.
    const auto free_c = JacobiCoefficients::free_rule();
    const LimitCircleReport any =
        limit_circle_diagnostic(free_c, Complex(0.0, 1.0), 8,
                                std::numeric_limits<double>::infinity());
    const LimitCircleReport diverging =
        limit_circle_diagnostic(free_c, Complex(0.0, 0.0), 200, 1e-8);
    const bool ok = any.converged && !diverging.converged &&
                    diverging.last_increment > 0.1;
    return make_result("jacobi.limit_circle_mechanism", ok ? 0.0 : 1.0, 0.0);
}

CheckResult check_interlacing(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform01() * 10);
        const JacobiCoefficients c = random_coeffs(rng, n);
        std::vector<double> d(n), e(n - 1);
        for (std::size_t k = 0; k < n; ++k) d[k] = c.q(k + 1);
        for (std::size_t k = 0; k + 1 < n; ++k) e[k] = c.b(k + 1);
        const TridiagMatrix full(d, e);
        const TridiagMatrix lead(std::vector<double>(d.begin(), d.end() - 1),
                                 std::vector<double>(e.begin(), e.end() - 1));
        const auto lam = eigenvalues(full, 1e-13);
        const auto mu = eigenvalues(lead, 1e-13);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            worst = std::max(worst, lam[i] - mu[i]);      // require lam[i] < mu[i]
            worst = std::max(worst, mu[i] - lam[i + 1]);  // require mu[i] < lam[i+1]
        }
    }
    return make_result("tridiag.interlacing", std::max(worst, 0.0), 1e-10);
}

CheckResult check_sturm_monotonicity(SplitMix64& rng) {
    double violations = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform01() * 12);
        const JacobiCoefficients c = random_coeffs(rng, std::max<std::size_t>(n, 1));
        std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
        for (std::size_t k = 0; k < n; ++k) d[k] = c.q(k + 1);
        for (std::size_t k = 0; k + 1 < n; ++k) e[k] = c.b(k + 1);
        const TridiagMatrix t(d, e);
        const auto [lo, hi] = gershgorin_interval(t);
        if (sturm_count(t, lo - 1.0) != 0) violations += 1.0;
        if (sturm_count(t, hi + 1.0) != static_cast<int>(n)) violations += 1.0;
        double x = rng.uniform(lo - 1.0, hi + 1.0);
        double y = rng.uniform(lo - 1.0, hi + 1.0);
        if (x > y) std::swap(x, y);
        if (sturm_count(t, x) > sturm_count(t, y)) violations += 1.0;
    }
    return make_result("tridiag.sturm_monotonicity", violations, 0.0);
}

CheckResult check_pw_biorthogonality(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const PWConfig cfg{rng.uniform(1.0, 3.0), 8};
        const PWModel m(cfg);
        const SamplingSet lattice = m.extension_spectrum(0.0, cfg.cutoff);
        const double root_a = std::sqrt(cfg.a);
        for (std::size_t j = 0; j < m.dimension(); ++j)
            for (std::size_t i = 0; i < lattice.size(); ++i) {
                const Complex v =
                    m.basis_function(j, Complex(lattice.points[i], 0.0));
                const double expect =
                    (m.mode_of_slot(j) ==
                     static_cast<int>(i) - static_cast<int>(cfg.cutoff))
                        ? root_a
                        : 0.0;
                worst = std::max(worst, std::abs(v - expect) / root_a);
            }
    }
    return make_result("pw.biorthogonality", worst, 1e-12);
}

CheckResult check_pw_one_term(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const PWConfig cfg{rng.uniform(1.0, 3.0), 6};
        const PWModel m(cfg);
        StateVector phi;
        phi.basis_tag = m.basis_tag();
        phi.coeffs.assign(m.dimension(), 0.0);
        const std::size_t slot = static_cast<std::size_t>(rng.uniform01() * m.dimension());
        phi.coeffs[std::min(slot, m.dimension() - 1)] = 1.0;

        const SamplingSet lattice = m.extension_spectrum(0.0, cfg.cutoff);
        const SampledSignal sig = sample_transform(m, phi, lattice);
        for (int g = 0; g < 6; ++g) {
            const Complex z = rng.complex_disk(3.0);
            const Complex recon = kernel_series(m, sig, z, lattice.size());
            const Complex truth = m.transform(phi, z);
            worst = std::max(worst, std::abs(recon - truth));
        }
    }
    return make_result("pw.one_term_exactness", worst, 1e-12);
}

CheckResult check_pw_parseval(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const PWConfig cfg{rng.uniform(1.0, 3.0), 6};
        const PWModel m(cfg);
        const StateVector phi = random_state(rng, m);
        const StateVector eta = random_state(rng, m);
        const auto mu = spectral_measure(m.extension_spectrum(0.0, cfg.cutoff));
        Complex direct = 0.0;
        for (std::size_t j = 0; j < phi.coeffs.size(); ++j)
            direct += std::conj(phi.coeffs[j]) * eta.coeffs[j];
        const Complex viaq = parseval_inner(m, phi, eta, mu);
        worst = std::max(worst, std::abs(viaq - direct));
    }
    return make_result("pw.parseval", worst, 1e-12);
}

CheckResult check_pw_lattice_boundary(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const PWConfig cfg{rng.uniform(0.5, 4.0), 8};
        const PWModel m(cfg);
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        const SamplingSet set = m.extension_spectrum(theta, 6);
        const Complex target = std::exp(Complex(0.0, theta));
        for (double lam : set.points)
            worst = std::max(worst,
                             std::abs(std::exp(Complex(0.0, -lam * cfg.a)) - target));
    }
    return make_result("pw.lattice_boundary", worst, 1e-12);
}

CheckResult check_reconstruct_exactness(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 15; ++trial) {
        const auto jm = random_jacobi(rng, 1, 12);
        const StateVector phi = random_state(rng, *jm);
        const SamplingSet set = jm->extension_spectrum(random_tau(rng), 0);
        const SampledSignal sig = sample_transform(*jm, phi, set);
        for (int g = 0; g < 8; ++g) {
            const Complex z = rng.complex_disk(4.0);
            const Complex recon = kernel_series(*jm, sig, z, set.size());
            const Complex truth = jm->transform(phi, z);
            worst = std::max(worst,
                             std::abs(recon - truth) / std::max(1.0, std::abs(truth)));
        }
    }
    return make_result("reconstruct.exactness", worst, 1e-10);
}

CheckResult check_reconstruct_equivalence(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto jm = random_jacobi(rng, 2, 12);
        const StateVector phi = random_state(rng, *jm);
        const SamplingSet set = jm->extension_spectrum(random_tau(rng), 0);
        const SampledSignal sig = sample_transform(*jm, phi, set);
        const std::vector<std::size_t> order = series_order(set);
        const LagrangeGenerator gen = make_lagrange_generator(*jm, set, order[0]);
        for (int g = 0; g < 6; ++g) {
            const Complex z = rng.complex_disk(4.0);
            const Complex a = kernel_series(*jm, sig, z, set.size());
            const Complex b = lagrange_series(gen, sig, z, set.size());
            worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
        }
    }
    return make_result("reconstruct.equivalence", worst, 1e-9);
}

CheckResult check_reconstruct_passthrough(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto jm = random_jacobi(rng, 1, 10);
        const StateVector phi = random_state(rng, *jm);
        const SamplingSet set = jm->extension_spectrum(random_tau(rng), 0);
        const SampledSignal sig = sample_transform(*jm, phi, set);
        for (std::size_t i = 0; i < set.size(); ++i) {
            const Complex z(set.points[i], 0.0);
            worst = std::max(worst,
                             std::abs(kernel_series(*jm, sig, z, 1) - sig.values[i]));
        }
    }
    return make_result("reconstruct.interpolation_passthrough", worst, 0.0);
}

CheckResult check_pw_cross_extension(SplitMix64&) {
    // theta = pi lattice samples of a fixed decaying state; widening the
    // window must shrink the worst grid error.
    const PWConfig cfg{2.0 * kPi, 16};
    const PWModel m(cfg);
    StateVector phi;
    phi.basis_tag = m.basis_tag();
    phi.coeffs.resize(m.dimension());
    for (std::size_t j = 0; j < m.dimension(); ++j) {
        const int k = static_cast<int>(j) - static_cast<int>(cfg.cutoff);
        phi.coeffs[j] = 1.0 / (1.0 + std::abs(k));
    }
    auto max_err = [&](std::size_t window) {
        const SamplingSet set = m.extension_spectrum(kPi, window);
        const SampledSignal sig = sample_transform(m, phi, set);
        double worst = 0.0;
        for (int g = 0; g <= 20; ++g) {
            const Complex z(-3.0 + 6.0 * g / 20.0, 0.0);
            worst = std::max(worst, std::abs(kernel_series(m, sig, z, set.size()) -
                                             m.transform(phi, z)));
        }
        return worst;
    };
    const double e8 = max_err(8), e32 = max_err(32);
    return make_result("reconstruct.pw_cross_extension", e32 < e8 ? 0.0 : 1.0, 0.0,
                       "err(W=8)=" + std::to_string(e8) +
                           " err(W=32)=" + std::to_string(e32));
}

CheckResult check_debranges_jacobi_zeros(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const auto jm = random_jacobi(rng, 3, 8);
        const auto sf = make_structure_function(*jm, Complex(0.0, 1.0));
        const TridiagMatrix t = jm->truncation(BoundaryAngle{0.0});
        const auto [lo, hi] = gershgorin_interval(t);
        const double t_angle = rng.uniform(0.0, kPi - 1e-3);
        const std::vector<double> zeros =
            st_zeros(sf, t_angle, lo - 1.0, hi + 1.0);
        if (zeros.empty()) {
            worst = std::max(worst, 1.0);
            continue;
        }
        // Every zero determines the same boundary angle, but near-parallel
        // polynomial values make a few of the per-zero estimates hypersensitive
        // to root-position noise. The median over all zeros is a stable anchor.
        const double ref =
            place_sampling_point(jm->coefficients(), jm->dimension(), zeros[0])
                .tau;
        std::vector<double> offsets;
        offsets.reserve(zeros.size());
        for (double z : zeros) {
            double d = place_sampling_point(jm->coefficients(),
                                            jm->dimension(), z)
                           .tau -
                       ref;
            while (d > kPi / 2.0) d -= kPi;
            while (d <= -kPi / 2.0) d += kPi;
            offsets.push_back(d);
        }
        std::nth_element(offsets.begin(),
                         offsets.begin() +
                             static_cast<std::ptrdiff_t>(offsets.size() / 2),
                         offsets.end());
        double tau = ref + offsets[offsets.size() / 2];
        if (tau >= kPi) tau -= kPi;
        if (tau < 0.0) tau += kPi;
        const SamplingSet set = jm->extension_spectrum(tau, 0);
        for (double z : zeros) {
            double best = std::numeric_limits<double>::infinity();
            for (double x : set.points) best = std::min(best, std::fabs(x - z));
            worst = std::max(worst, best);
        }
    }
    return make_result("debranges.jacobi_zero_family", worst, 1e-8);
}

CheckResult check_debranges_pw_lattice(SplitMix64& rng) {
    const PWConfig cfg{2.0 * kPi, 8};
    const PWModel m(cfg);
    const auto sf = make_structure_function(m, Complex(0.0, 1.0));
    const double spacing = 2.0 * kPi / cfg.a;
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const double t = rng.uniform(0.0, kPi);
        const std::vector<double> zeros = st_zeros(sf, t, -3.0, 3.0);
        if (zeros.size() < 4) {
            worst = std::max(worst, 1.0);
            continue;
        }
        for (std::size_t i = 0; i + 1 < zeros.size(); ++i)
            worst = std::max(worst,
                             std::fabs((zeros[i + 1] - zeros[i]) - spacing));
    }
    return make_result("debranges.pw_lattice", worst, 1e-8);
}

CheckResult check_debranges_blaschke(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto jm = random_jacobi(rng, 2, 12);
        StateVector h = random_state(rng, *jm);
        h.coeffs.back() = 0.0;
        if (h.norm() == 0.0) h.coeffs[0] = 1.0;
        const Complex w = rng.complex_disk(2.0) + Complex(0.0, 0.3);
        const BlaschkeReport rep = axiom_blaschke_check(*jm, h, w);
        worst = std::max(worst, std::fabs(rep.norm_ratio - 1.0));
    }
    return make_result("debranges.blaschke_ratio", worst, 1e-12);
}

CheckResult check_debranges_star(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto jm = random_jacobi(rng, 1, 12);
        const StateVector phi = random_state(rng, *jm);
        std::vector<Complex> grid;
        for (int g = 0; g < 6; ++g) grid.push_back(rng.complex_disk(3.0));
        worst = std::max(worst, axiom_star_check(*jm, phi, grid));
    }
    return make_result("debranges.star_identity", worst, 1e-12);
}

CheckResult check_debranges_eval_bound(SplitMix64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto jm = random_jacobi(rng, 1, 12);
        const PWModel pm(PWConfig{rng.uniform(1.0, 3.0), 6});
        const Complex w = rng.complex_disk(3.0);
        for (const Model* m : {static_cast<const Model*>(jm.get()),
                               static_cast<const Model*>(&pm)}) {
            const StateVector phi = random_state(rng, *m);
            const EvalBoundReport rep = evaluation_bound_check(*m, phi, w);
            if (!rep.holds) worst = std::max(worst, rep.lhs - rep.rhs);
        }
        // Equality case: the normalized kernel section at w saturates the
        // bound (finite Jacobi only; the PW mode sum is cutoff-truncated).
        StateVector xi = jm->xi_state(w);
        const double nn = xi.norm();
        for (Complex& v : xi.coeffs) v /= nn;
        const EvalBoundReport eq = evaluation_bound_check(*jm, xi, w);
        worst = std::max(worst,
                         std::fabs(eq.lhs - eq.rhs) / std::max(1.0, eq.rhs));
    }
    return make_result("debranges.evaluation_bound", worst, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const std::pair<const char*, CheckFn> table[] = {
        {"kernel.hermitian", check_kernel_hermitian},
        {"kernel.reproducing", check_kernel_reproducing},
        {"kernel.gauge_normalization", check_kernel_gauge},
        {"kernel.lemma1_independence", check_lemma1_independence},
        {"kernel.positivity", check_kernel_positivity},
        {"jacobi.cd_identity", check_cd_identity},
        {"jacobi.eigvec_consistency", check_eigvec_consistency},
        {"jacobi.extension_sweep", check_extension_sweep},
        {"jacobi.xi_orthogonality", check_xi_orthogonality},
        {"jacobi.gauge_first_component", check_gauge_first_component},
        {"jacobi.limit_circle_mechanism", check_limit_circle_mechanism},
        {"tridiag.interlacing", check_interlacing},
        {"tridiag.sturm_monotonicity", check_sturm_monotonicity},
        {"pw.biorthogonality", check_pw_biorthogonality},
        {"pw.one_term_exactness", check_pw_one_term},
        {"pw.parseval", check_pw_parseval},
        {"pw.lattice_boundary", check_pw_lattice_boundary},
        {"reconstruct.exactness", check_reconstruct_exactness},
        {"reconstruct.equivalence", check_reconstruct_equivalence},
        {"reconstruct.interpolation_passthrough", check_reconstruct_passthrough},
        {"reconstruct.pw_cross_extension", check_pw_cross_extension},
        {"debranges.jacobi_zero_family", check_debranges_jacobi_zeros},
        {"debranges.pw_lattice", check_debranges_pw_lattice},
        {"debranges.blaschke_ratio", check_debranges_blaschke},
        {"debranges.star_identity", check_debranges_star},
        {"debranges.evaluation_bound", check_debranges_eval_bound},
    };

    std::vector<CheckResult> results;
    results.reserve(std::size(table));
    std::uint64_t stream = 0;
    for (const auto& [name, fn] : table) {
        SplitMix64 rng(opts.seed + 0x632be59bd9b4e019ull * ++stream);
        CheckResult r = fn(rng);
        r.name = name;
        if (opts.has_tol_override) {
            r.tolerance = opts.tol_override;
            r.pass = r.max_err <= r.tolerance;
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace rksamp
