#include "rksamp/pw.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rksamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

std::string make_pw_tag(const PWConfig& cfg) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "pw:a=%.17g:K=%zu", cfg.a, cfg.cutoff);
    return buf;
}

// Mode frequency for mode index k (reference extension, phase 0).
double mode_freq(const PWConfig& cfg, int k) { return kTwoPi * k / cfg.a; }

// tau_k(z) = phase_kernel(a, z - lambda_k) / sqrt(a).
Complex mode_function(const PWConfig& cfg, int k, Complex z) {
    return phase_kernel(cfg.a, z - mode_freq(cfg, k)) / std::sqrt(cfg.a);
}

}  // namespace

void validate(const PWConfig& cfg) {
    if (!std::isfinite(cfg.a) || cfg.a <= 0.0)
        throw std::invalid_argument("pw config: interval length must be positive");
}

void validate(const PhaseParameter& phase) {
    if (!std::isfinite(phase.theta) || phase.theta < 0.0 || phase.theta >= kTwoPi)
        throw std::invalid_argument("pw phase: theta must lie in [0, 2*pi)");
}

Complex phase_kernel(double a, Complex u) {
    if (std::abs(u) < 1e-6) {
        // (exp(iua) - 1)/(iu) = a (1 + w/2 + w^2/6 + w^3/24 + ...), w = iua.
        const Complex w = kI * u * a;
        return a * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0))));
    }
    return (std::exp(kI * u * a) - 1.0) / (kI * u);
}

SamplingSet pw_sampling_points(const PWConfig& cfg, PhaseParameter phase,
                               std::size_t window) {
    validate(cfg);
    validate(phase);
    const int w = static_cast<int>(window);
    SamplingSet set;
    set.extension_param = phase.theta;
    set.points.reserve(2 * window + 1);
    for (int n = -w; n <= w; ++n)
        set.points.push_back((kTwoPi * n - phase.theta) / cfg.a);
    set.kernel_norms.assign(set.points.size(), cfg.a);
    set.weights.assign(set.points.size(), 1.0 / cfg.a);
    return set;
}

Complex pw_kernel(const PWConfig& cfg, Complex z, Complex w) {
    validate(cfg);
    return phase_kernel(cfg.a, z - w);
}

Complex pw_transform(const PWConfig& cfg, const StateVector& phi, Complex z) {
    validate(cfg);
    if (phi.basis_tag != make_pw_tag(cfg))
        throw std::invalid_argument("pw transform: state basis tag mismatch");
    if (phi.coeffs.size() != 2 * cfg.cutoff + 1)
        throw std::invalid_argument("pw transform: state length mismatch");
    const int kk = static_cast<int>(cfg.cutoff);

    // Mode 0 first, then symmetric pairs with the negative mode leading.
    Complex acc = phi.coeffs[kk] * mode_function(cfg, 0, z);
    for (int j = 1; j <= kk; ++j) {
        acc += phi.coeffs[kk - j] * mode_function(cfg, -j, z);
        acc += phi.coeffs[kk + j] * mode_function(cfg, j, z);
    }
    return acc;
}

std::vector<Complex> pw_sample(const PWConfig& cfg, const StateVector& phi,
                               const SamplingSet& set) {
    std::vector<Complex> out;
    out.reserve(set.size());
    for (double x : set.points)
        out.push_back(pw_transform(cfg, phi, Complex(x, 0.0)));
    return out;
}

PWModel::PWModel(PWConfig cfg) : cfg_(cfg) {
    validate(cfg_);
    tag_ = make_pw_tag(cfg_);
}

std::string PWModel::basis_tag() const { return tag_; }

int PWModel::mode_of_slot(std::size_t j) const {
    if (j >= dimension())
        throw std::invalid_argument("pw model: basis index out of range");
    return static_cast<int>(j) - static_cast<int>(cfg_.cutoff);
}

Complex PWModel::basis_function(std::size_t j, Complex z) const {
    return mode_function(cfg_, mode_of_slot(j), z);
}

Complex PWModel::transform(const StateVector& phi, Complex z) const {
    check_state(phi);
    return pw_transform(cfg_, phi, z);
}

Complex PWModel::kernel(Complex z, Complex w) const {
    return phase_kernel(cfg_.a, z - w);
}

Complex PWModel::debranges_kernel(Complex z, Complex w) const {
    // Recentred to the star-symmetric realization: multiplying by the
    // unimodular exp(-i(z-w)a/2) turns the kernel into 2 sin((z-w)a/2)/(z-w),
    // which is real symmetric in (z, w) on the reals.
    const Complex u = z - w;
    return std::exp(-kI * u * (cfg_.a / 2.0)) * phase_kernel(cfg_.a, u);
}

SamplingSet PWModel::extension_spectrum(double param, std::size_t window) const {
    return pw_sampling_points(cfg_, PhaseParameter{param}, window);
}

double PWModel::expected_sample_gap(double, double) const {
    return kTwoPi / cfg_.a;
}

}  // namespace rksamp
