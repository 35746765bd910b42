#pragma once

// Jacobi-matrix model: orthonormal polynomial evaluation, Christoffel-Darboux
// kernel, boundary-angle sampling sets from tridiagonal truncations, and the
// limit-point / limit-circle diagnostic.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "rksamp/kernel_core.hpp"
#include "rksamp/tridiag.hpp"

namespace rksamp {

// Recurrence coefficients b_k > 0 (k >= 1) and q_k (k >= 1), either explicit
// finite arrays or one of the built-in unbounded rules.
class JacobiCoefficients {
  public:
    enum class Rule { explicit_arrays, free, chebyshev, power };

    static JacobiCoefficients from_arrays(std::vector<double> b,
                                          std::vector<double> q);
    // b_k = 1, q_k = 0.
    static JacobiCoefficients free_rule();
    // b_k = 1/2, q_k = 0.
    static JacobiCoefficients chebyshev_rule();
    // b_k = (k+1)^p, q_k = 0.
    static JacobiCoefficients power_rule(double p);
    // "free" | "chebyshev" | "power:<p>".
    static JacobiCoefficients from_rule(const std::string& name);

    double b(std::size_t k) const;  // 1-based
    double q(std::size_t k) const;  // 1-based

    // Largest k for which b(k), q(k) are defined; SIZE_MAX for rules.
    std::size_t max_index() const;

    Rule rule() const { return rule_; }
    double power() const { return power_; }
    const std::vector<double>& b_array() const { return b_; }
    const std::vector<double>& q_array() const { return q_; }

    // Short name used in basis tags: "free", "chebyshev", "power:2",
    // "explicit:<n>".
    std::string label() const;

  private:
    JacobiCoefficients() = default;

    Rule rule_ = Rule::free;
    double power_ = 0.0;
    std::vector<double> b_;
    std::vector<double> q_;
};

// Self-adjoint extension parameter tau in [0, pi).  tau = pi/2 selects the
// decoupled truncation (one point fewer); all other values shift the last
// diagonal entry by tan(tau).
struct BoundaryAngle {
    double tau;
};

void validate(const BoundaryAngle& angle);

// Orthonormal polynomial values P_0(z) .. P_N(z), stored as values[k] *
// exp(log_scale) with a common factor so that huge arguments do not overflow.
struct OrthoPolyEval {
    std::vector<Complex> values;
    double log_scale = 0.0;
};

// Same layout with derivatives carried along.
struct OrthoPolyEvalD {
    std::vector<Complex> values;
    std::vector<Complex> derivs;
    double log_scale = 0.0;
};

OrthoPolyEval eval_ortho_polys(const JacobiCoefficients& c, std::size_t n,
                               Complex z);
OrthoPolyEvalD eval_ortho_polys_d(const JacobiCoefficients& c, std::size_t n,
                                  Complex z);

// Christoffel-Darboux kernel K_N(z, w) = sum_{k<N} P_k(z) P_k(w), computed
// from the endpoint form; within 1e-8 * (1 + |z|) of the diagonal it switches
// to the confluent form at the midpoint.
Complex cd_kernel(const JacobiCoefficients& c, std::size_t n, Complex z,
                  Complex w);

// Sampling set of the N-truncation with boundary angle tau: eigenvalues of
// the shifted truncation (or of the leading (N-1)-truncation at tau = pi/2),
// with kernel_norms K_N(x, x) and weights 1 / K_N(x, x).
SamplingSet sampling_set(const JacobiCoefficients& c, std::size_t n,
                         BoundaryAngle angle);

// The unique boundary angle whose sampling set contains x_star.
BoundaryAngle place_sampling_point(const JacobiCoefficients& c, std::size_t n,
                                   double x_star);

struct LimitCircleReport {
    bool converged = false;
    // Partial sums sum_{k<=K} |P_k(z)|^2 at K = k_max/4, k_max/2, k_max.
    std::vector<double> partial_sums;
    // Last relative increment (S3 - S2) / S3.
    double last_increment = 0.0;
};

// Probes square-summability of the polynomial sequence at z.  Reports
// converged when the last relative increment drops below tol.
LimitCircleReport limit_circle_diagnostic(const JacobiCoefficients& c, Complex z,
                                          std::size_t k_max, double tol);

class JacobiModel : public Model {
  public:
    JacobiModel(JacobiCoefficients coeffs, std::size_t n);

    std::string basis_tag() const override;
    std::size_t dimension() const override { return n_; }
    Complex basis_function(std::size_t j, Complex z) const override;
    Complex transform(const StateVector& phi, Complex z) const override;
    Complex kernel(Complex z, Complex w) const override;
    SamplingSet extension_spectrum(double param, std::size_t window) const override;
    double expected_sample_gap(double lo, double hi) const override;
    bool supports_gauge() const override { return true; }
    StateVector gauge() const override;
    bool real_symmetric_basis() const override { return true; }
    StateVector xi_from_psi(const KernelVectorSpec& spec, double ext_a,
                            double ext_b, Complex z,
                            double agree_tol) const override;
    StateVector multiply_by_x(const StateVector& phi) const override;

    // Canonical resolvent seed at z0: psi0 = normalized (P_0(z0) .. P_{N-1}(z0)).
    KernelVectorSpec canonical_kernel_vector(Complex z0) const;

    const JacobiCoefficients& coefficients() const { return coeffs_; }

    // Truncated multiplication matrix with the last diagonal shifted by
    // tan(tau); the decoupled angle returns the leading (N-1)-truncation.
    TridiagMatrix truncation(BoundaryAngle angle) const;

  private:
    JacobiCoefficients coeffs_;
    std::size_t n_;
    std::string tag_;
};

}  // namespace rksamp
