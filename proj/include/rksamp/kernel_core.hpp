#pragma once

// Core vocabulary shared by every model: states in a fixed orthonormal basis,
// sampling sets with their kernel normalizations, and the abstract Model
// interface that the reconstruction and structure-function layers consume.
//
// Conventions used throughout:
//   * kernel(z, w) is holomorphic in BOTH arguments.  The sesquilinear inner
//     product of two kernel sections is kernel(z, conj(w)); on real points the
//     two coincide, and the symmetry kernel(z, w) == conj(kernel(conj(w), conj(z)))
//     holds identically.
//   * Inner products are anti-linear in the FIRST argument.
//   * Every series is summed in a fixed documented order so results are
//     bit-reproducible across runs: basis sums ascend in index (two-sided mode
//     sums take index 0, then the pair -1,+1, then -2,+2, ...), and sums over
//     sampling points ascend in |x| with ties broken toward the smaller point.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace rksamp {

using Complex = std::complex<double>;

// Coefficient vector in a model's orthonormal basis.  The tag records which
// basis the coefficients refer to; operations that mix a state with a model
// check the tags and refuse mismatches.
struct StateVector {
    std::vector<Complex> coeffs;
    std::string basis_tag;

    double norm() const;
};

// Discrete set of real sampling points together with the diagonal kernel
// values k(x_n, x_n) and the reconstruction weights 1 / k(x_n, x_n).
// Points are strictly increasing; kernel norms are strictly positive.
struct SamplingSet {
    std::vector<double> points;
    std::vector<double> kernel_norms;
    std::vector<double> weights;
    double extension_param = 0.0;

    std::size_t size() const { return points.size(); }
};

// Throws std::invalid_argument if the set violates its invariants
// (mismatched lengths, non-increasing points, non-positive kernel norms).
void validate(const SamplingSet& set);

// Atomic measure carried by a sampling set: one atom per point, jump equal to
// the reconstruction weight.
struct DiscreteSpectralMeasure {
    std::vector<double> atoms;
    std::vector<double> jumps;
};

DiscreteSpectralMeasure spectral_measure(const SamplingSet& set);

// Seed data for building kernel sections from the resolvent: a non-real base
// point z0 and the coefficients of the generating state psi0.
struct KernelVectorSpec {
    Complex z0;
    std::vector<Complex> psi0;
};

void validate(const KernelVectorSpec& spec);

class Model {
  public:
    virtual ~Model() = default;

    // Identifies the basis this model's StateVectors live in.
    virtual std::string basis_tag() const = 0;

    // Number of basis coefficients a state carries (finite truncation or
    // two-sided mode cutoff).
    virtual std::size_t dimension() const = 0;

    // j-th basis function evaluated at z, j in [0, dimension()).
    virtual Complex basis_function(std::size_t j, Complex z) const = 0;

    // The transform phi -> sum_j phi_j * basis_function(j, .).  Models with a
    // two-sided index override this to fix the symmetric pairing order.
    virtual Complex transform(const StateVector& phi, Complex z) const;

    // Reproducing kernel, holomorphic in both arguments (see file comment).
    virtual Complex kernel(Complex z, Complex w) const = 0;

    // Kernel handed to the structure-function layer.  Defaults to kernel();
    // models whose transform range is not star-invariant override this with
    // the star-symmetric realization of the same space.
    virtual Complex debranges_kernel(Complex z, Complex w) const;

    // Sampling set of the self-adjoint extension selected by param.  window
    // bounds the two-sided index range for infinite lattices and is ignored
    // by finite models.
    virtual SamplingSet extension_spectrum(double param, std::size_t window) const = 0;

    // Typical spacing between consecutive sampling points inside [lo, hi];
    // used to choose scan resolutions.
    virtual double expected_sample_gap(double lo, double hi) const = 0;

    // Whether the model distinguishes a gauge functional; gauge() throws
    // std::logic_error when unsupported.
    virtual bool supports_gauge() const = 0;
    virtual StateVector gauge() const;

    // True when every basis function is real on the real axis, which is what
    // the star axiom checks rely on.
    virtual bool real_symmetric_basis() const = 0;

    // State representing the kernel section at w: coefficients
    // conj(basis_function(j, w)), so that transform(xi_state(w), z) equals
    // kernel(z, conj(w)).
    StateVector xi_state(Complex w) const;

    // Builds the normalized kernel section at z from the resolvent seed,
    // computing it under two different extensions (ext_a, ext_b) and checking
    // that the results agree to agree_tol after gauge normalization.  Only
    // models with a gauge support this; the default throws std::logic_error.
    virtual StateVector xi_from_psi(const KernelVectorSpec& spec, double ext_a,
                                    double ext_b, Complex z,
                                    double agree_tol) const;

    // Applies the model's multiplication operator (truncated) to a state.
    // Defined for finite models; the default throws std::logic_error.
    virtual StateVector multiply_by_x(const StateVector& phi) const;

  protected:
    // Shared guard: throws std::invalid_argument on tag or length mismatch.
    void check_state(const StateVector& phi) const;
};

// Discrete Parseval pairing sum_n jumps_n * conj(phi_hat(atom_n)) * eta_hat(atom_n),
// summed in stored atom order.
Complex parseval_inner(const Model& model, const StateVector& phi,
                       const StateVector& eta, const DiscreteSpectralMeasure& mu);

// Convenience forwarder for Model::xi_from_psi with the default agreement
// tolerance used by the verification suite.
StateVector build_xi_from_psi(const Model& model, const KernelVectorSpec& spec,
                              double ext_a, double ext_b, Complex z,
                              double agree_tol = 1e-10);

}  // namespace rksamp
