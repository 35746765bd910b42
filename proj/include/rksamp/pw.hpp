#pragma once

// Band-limited model on the interval [0, a]: two-sided Fourier mode basis,
// phase-parametrized point lattices, and the sinc-type kernel.

#include <cstddef>
#include <string>
#include <vector>

#include "rksamp/kernel_core.hpp"

namespace rksamp {

// Interval length a > 0 and two-sided mode cutoff K (modes -K..K).
struct PWConfig {
    double a = 1.0;
    std::size_t cutoff = 8;
};

void validate(const PWConfig& cfg);

// Extension phase theta in [0, 2*pi); the extension's boundary condition is
// f(a) = exp(i*theta) f(0).
struct PhaseParameter {
    double theta;
};

void validate(const PhaseParameter& phase);

// (exp(i*u*a) - 1) / (i*u), the interval transform of the constant 1; switches
// to a four-term Taylor expansion for |u| < 1e-6.
Complex phase_kernel(double a, Complex u);

// Lattice points lambda_n = (2*pi*n - theta) / a for n = -window..window,
// ascending, each with kernel norm a and weight 1/a.
SamplingSet pw_sampling_points(const PWConfig& cfg, PhaseParameter phase,
                               std::size_t window);

// Kernel k(z, w) = phase_kernel(a, z - w).
Complex pw_kernel(const PWConfig& cfg, Complex z, Complex w);

// Transform of a mode-coefficient state at z, summed mode 0 first and then
// the pairs (-1,+1), (-2,+2), ... for reproducibility.
Complex pw_transform(const PWConfig& cfg, const StateVector& phi, Complex z);

// Transform evaluated at every point of the set, in point order.
std::vector<Complex> pw_sample(const PWConfig& cfg, const StateVector& phi,
                               const SamplingSet& set);

class PWModel : public Model {
  public:
    explicit PWModel(PWConfig cfg);

    std::string basis_tag() const override;
    std::size_t dimension() const override { return 2 * cfg_.cutoff + 1; }
    Complex basis_function(std::size_t j, Complex z) const override;
    Complex transform(const StateVector& phi, Complex z) const override;
    Complex kernel(Complex z, Complex w) const override;
    // Star-symmetric realization: the plain kernel recentred by the
    // unimodular factor exp(-i(z-w)a/2), i.e. 2*sin((z-w)a/2)/(z-w).
    Complex debranges_kernel(Complex z, Complex w) const override;
    SamplingSet extension_spectrum(double param, std::size_t window) const override;
    double expected_sample_gap(double lo, double hi) const override;
    bool supports_gauge() const override { return false; }
    bool real_symmetric_basis() const override { return false; }

    const PWConfig& config() const { return cfg_; }

    // Mode index for storage slot j in [0, 2K]: k = j - K.
    int mode_of_slot(std::size_t j) const;

  private:
    PWConfig cfg_;
    std::string tag_;
};

}  // namespace rksamp
