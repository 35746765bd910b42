#include "rksamp/kernel_core.hpp"

#include <cmath>
#include <stdexcept>

namespace rksamp {

double StateVector::norm() const {
    double nn = 0.0;
    for (const Complex& v : coeffs) nn += std::norm(v);
    return std::sqrt(nn);
}

void validate(const SamplingSet& set) {
    if (set.kernel_norms.size() != set.points.size() ||
        set.weights.size() != set.points.size())
        throw std::invalid_argument("sampling set: column lengths differ");
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        if (!std::isfinite(set.points[i]))
            throw std::invalid_argument("sampling set: non-finite point");
        if (i > 0 && !(set.points[i - 1] < set.points[i]))
            throw std::invalid_argument("sampling set: points must be strictly increasing");
        if (!(set.kernel_norms[i] > 0.0))
            throw std::invalid_argument("sampling set: kernel norms must be positive");
        if (!(set.weights[i] > 0.0))
            throw std::invalid_argument("sampling set: weights must be positive");
    }
}

DiscreteSpectralMeasure spectral_measure(const SamplingSet& set) {
    validate(set);
    return DiscreteSpectralMeasure{set.points, set.weights};
}

void validate(const KernelVectorSpec& spec) {
    if (spec.z0.imag() == 0.0)
        throw std::invalid_argument("kernel vector: base point must be non-real");
    double nn = 0.0;
    for (const Complex& v : spec.psi0) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("kernel vector: non-finite psi0 entry");
        nn += std::norm(v);
    }
    if (!(nn > 0.0))
        throw std::invalid_argument("kernel vector: psi0 must be nonzero");
}

void Model::check_state(const StateVector& phi) const {
    if (phi.basis_tag != basis_tag())
        throw std::invalid_argument("state basis tag '" + phi.basis_tag +
                                    "' does not match model '" + basis_tag() + "'");
    if (phi.coeffs.size() != dimension())
        throw std::invalid_argument("state length does not match model dimension");
}

Complex Model::transform(const StateVector& phi, Complex z) const {
    check_state(phi);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < phi.coeffs.size(); ++j)
        acc += phi.coeffs[j] * basis_function(j, z);
    return acc;
}

Complex Model::debranges_kernel(Complex z, Complex w) const { return kernel(z, w); }

StateVector Model::gauge() const {
    throw std::logic_error("model '" + basis_tag() + "' has no gauge functional");
}

StateVector Model::xi_state(Complex w) const {
    StateVector out;
    out.basis_tag = basis_tag();
    out.coeffs.resize(dimension());
    for (std::size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] = std::conj(basis_function(j, w));
    return out;
}

StateVector Model::xi_from_psi(const KernelVectorSpec&, double, double, Complex,
                               double) const {
    throw std::logic_error("model '" + basis_tag() + "' does not support xi_from_psi");
}

StateVector Model::multiply_by_x(const StateVector&) const {
    throw std::logic_error("model '" + basis_tag() +
                           "' has no truncated multiplication operator");
}

Complex parseval_inner(const Model& model, const StateVector& phi,
                       const StateVector& eta, const DiscreteSpectralMeasure& mu) {
    if (mu.atoms.size() != mu.jumps.size())
        throw std::invalid_argument("parseval_inner: measure column lengths differ");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        const Complex x(mu.atoms[i], 0.0);
        acc += mu.jumps[i] * std::conj(model.transform(phi, x)) * model.transform(eta, x);
    }
    return acc;
}

StateVector build_xi_from_psi(const Model& model, const KernelVectorSpec& spec,
                              double ext_a, double ext_b, Complex z,
                              double agree_tol) {
    return model.xi_from_psi(spec, ext_a, ext_b, z, agree_tol);
}

}  // namespace rksamp
