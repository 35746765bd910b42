#include "rksamp/debranges.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rksamp {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

StructureFunction make_structure_function(const Model& model, Complex w0) {
    if (!(w0.imag() > 0.0))
        throw std::invalid_argument("structure function: anchor must lie in the upper half-plane");
    // k(w0, conj(w0)) is the squared norm of the kernel section at w0; a
    // non-positive value means the anchor is unusable.
    const Complex kd = model.debranges_kernel(w0, std::conj(w0));
    if (!(kd.real() > 0.0) || std::fabs(kd.imag()) > 1e-8 * kd.real())
        throw std::invalid_argument("structure function: invalid anchor (kernel norm not positive)");
    return StructureFunction{&model, w0};
}

Complex structure_function_eval(const StructureFunction& sf, Complex z) {
    if (sf.model == nullptr)
        throw std::invalid_argument("structure function: missing model");
    const Complex w0 = sf.w0;
    const Complex wb = std::conj(w0);
    const double knorm = sf.model->debranges_kernel(w0, wb).real();
    const double c = std::sqrt(std::numbers::pi / (knorm * w0.imag()));
    return kI * c * (wb - z) * sf.model->debranges_kernel(z, wb);
}

ABPair ab_split(const StructureFunction& sf, Complex z) {
    const Complex e = structure_function_eval(sf, z);
    const Complex estar = std::conj(structure_function_eval(sf, std::conj(z)));
    return ABPair{0.5 * (e + estar), (e - estar) / (2.0 * kI)};
}

Complex st_eval(const StructureFunction& sf, double t, Complex z) {
    if (!std::isfinite(t) || t < 0.0 || t >= std::numbers::pi)
        throw std::invalid_argument("st_eval: t must lie in [0, pi)");
    const ABPair ab = ab_split(sf, z);
    return -std::sin(t) * ab.a + std::cos(t) * ab.b;
}

std::vector<double> st_zeros(const StructureFunction& sf, double t, double lo,
                             double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("st_zeros: empty interval");
    const double gap = sf.model->expected_sample_gap(lo, hi);
    const double step = gap / 8.0;
    const std::size_t cells =
        std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil((hi - lo) / step)));

    // On the real axis s_t is real by construction; scan for sign changes and
    // bisect each bracket down to 1e-10.
    auto s_at = [&](double x) { return st_eval(sf, t, Complex(x, 0.0)).real(); };

    std::vector<double> zeros;
    double x0 = lo, s0 = s_at(x0);
    for (std::size_t i = 1; i <= cells; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / cells;
        const double s1 = s_at(x1);
        if (s0 == 0.0) {
            zeros.push_back(x0);
        } else if (s1 != 0.0 && std::signbit(s0) != std::signbit(s1)) {
            double a = x0, b = x1, sa = s0;
            while (b - a > 1e-10) {
                const double mid = 0.5 * (a + b);
                const double sm = s_at(mid);
                if (sm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(sm) == std::signbit(sa)) {
                    a = mid;
                    sa = sm;
                } else {
                    b = mid;
                }
            }
            zeros.push_back(0.5 * (a + b));
        }
        x0 = x1;
        s0 = s1;
    }
    if (s0 == 0.0) zeros.push_back(x0);
    return zeros;
}

BlaschkeReport axiom_blaschke_check(const Model& model, const StateVector& h,
                                    Complex w) {
    if (w.imag() == 0.0)
        throw std::invalid_argument("blaschke check: w must be non-real");
    if (h.coeffs.empty() || h.norm() == 0.0)
        throw std::invalid_argument("blaschke check: h must be nonzero");
    if (h.coeffs.back() != Complex(0.0))
        throw std::invalid_argument(
            "blaschke check: top coefficient must be zero (degree overflow)");

    // f = (X - w) h and g = (X - conj(w)) h stay inside the truncation because
    // the top coefficient of h vanishes, so both are computed exactly.
    const StateVector xh = model.multiply_by_x(h);
    BlaschkeReport rep;
    rep.f.basis_tag = rep.g.basis_tag = h.basis_tag;
    rep.f.coeffs.resize(h.coeffs.size());
    rep.g.coeffs.resize(h.coeffs.size());
    for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
        rep.f.coeffs[j] = xh.coeffs[j] - w * h.coeffs[j];
        rep.g.coeffs[j] = xh.coeffs[j] - std::conj(w) * h.coeffs[j];
    }
    rep.norm_ratio = rep.g.norm() / rep.f.norm();
    return rep;
}

double axiom_star_check(const Model& model, const StateVector& phi,
                        const std::vector<Complex>& grid) {
    if (!model.real_symmetric_basis())
        throw std::logic_error("star check: model basis is not real on the real axis");
    StateVector star;
    star.basis_tag = phi.basis_tag;
    star.coeffs.reserve(phi.coeffs.size());
    for (const Complex& v : phi.coeffs) star.coeffs.push_back(std::conj(v));

    if (star.norm() != phi.norm())
        throw std::runtime_error("star check: conjugation changed the norm");

    double worst = 0.0;
    for (const Complex& z : grid) {
        const Complex lhs = model.transform(star, z);
        const Complex rhs = std::conj(model.transform(phi, std::conj(z)));
        const double denom = std::max(1.0, std::abs(rhs));
        worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
    return worst;
}

EvalBoundReport evaluation_bound_check(const Model& model,
                                       const StateVector& phi, Complex w) {
    EvalBoundReport rep;
    rep.lhs = std::abs(model.transform(phi, w));
    const double kn = model.kernel(w, std::conj(w)).real();
    rep.rhs = std::sqrt(std::max(kn, 0.0)) * phi.norm();
    rep.holds = rep.lhs <= rep.rhs + 1e-10;
    return rep;
}

}  // namespace rksamp
