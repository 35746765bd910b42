#include "rksamp/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace rksamp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;  // the representable double nearest pi/2

// Magnitude at which polynomial evaluation folds a common factor into the
// log scale.
constexpr double kRescaleAt = 1e150;

// Compensated (double-double) arithmetic for the real-argument kernel path.
// The Christoffel-Darboux quotient subtracts two near-equal products when z
// sits close to a kernel zero, and plain doubles leave an absolute error of
// eps times the product magnitude there. Carrying the recurrence in paired
// doubles keeps the quotient accurate relative to its own value, which the
// divided-difference derivative probes in the Lagrange series depend on.
struct DD {
    double hi, lo;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    return {s, (a - (s - t)) + (b - t)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    const DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double d) {
    DD p = two_prod(a.hi, d);
    p.lo += a.lo * d;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double d) {
    const double q0 = a.hi / d;
    const DD r = dd_sub(a, two_prod(q0, d));
    const double q1 = (r.hi + r.lo) / d;
    return quick_two_sum(q0, q1);
}

inline DD dd_div(DD a, DD b) {
    const double q0 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul_d(b, q0));
    const double q1 = r.hi / b.hi;
    r = dd_sub(r, dd_mul_d(b, q1));
    const double q2 = r.hi / b.hi;
    DD q = quick_two_sum(q0, q1);
    q.lo += q2;
    return quick_two_sum(q.hi, q.lo);
}

}  // namespace

JacobiCoefficients JacobiCoefficients::from_arrays(std::vector<double> b,
                                                   std::vector<double> q) {
    if (b.empty() || q.empty())
        throw std::invalid_argument("jacobi coefficients: empty arrays");
    for (double v : b)
        if (!std::isfinite(v) || v <= 0.0)
            throw std::invalid_argument("jacobi coefficients: b entries must be positive");
    for (double v : q)
        if (!std::isfinite(v))
            throw std::invalid_argument("jacobi coefficients: q entries must be finite");
    JacobiCoefficients c;
    c.rule_ = Rule::explicit_arrays;
    c.b_ = std::move(b);
    c.q_ = std::move(q);
    return c;
}

JacobiCoefficients JacobiCoefficients::free_rule() {
    JacobiCoefficients c;
    c.rule_ = Rule::free;
    return c;
}

JacobiCoefficients JacobiCoefficients::chebyshev_rule() {
    JacobiCoefficients c;
    c.rule_ = Rule::chebyshev;
    return c;
}

JacobiCoefficients JacobiCoefficients::power_rule(double p) {
    if (!std::isfinite(p))
        throw std::invalid_argument("jacobi coefficients: power must be finite");
    JacobiCoefficients c;
    c.rule_ = Rule::power;
    c.power_ = p;
    return c;
}

JacobiCoefficients JacobiCoefficients::from_rule(const std::string& name) {
    if (name == "free") return free_rule();
    if (name == "chebyshev") return chebyshev_rule();
    if (name.rfind("power:", 0) == 0) {
        const std::string tail = name.substr(6);
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("jacobi coefficients: bad power rule '" + name + "'");
        }
        if (used != tail.size())
            throw std::invalid_argument("jacobi coefficients: bad power rule '" + name + "'");
        return power_rule(p);
    }
    throw std::invalid_argument("jacobi coefficients: unknown rule '" + name + "'");
}

double JacobiCoefficients::b(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("jacobi coefficients: b index is 1-based");
    switch (rule_) {
        case Rule::free: return 1.0;
        case Rule::chebyshev: return 0.5;
        case Rule::power: return std::pow(static_cast<double>(k + 1), power_);
        case Rule::explicit_arrays:
            if (k > b_.size())
                throw std::invalid_argument("jacobi coefficients: b index out of range");
            return b_[k - 1];
    }
    throw std::logic_error("jacobi coefficients: bad rule");
}

double JacobiCoefficients::q(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("jacobi coefficients: q index is 1-based");
    switch (rule_) {
        case Rule::free:
        case Rule::chebyshev:
        case Rule::power:
            return 0.0;
        case Rule::explicit_arrays:
            if (k > q_.size())
                throw std::invalid_argument("jacobi coefficients: q index out of range");
            return q_[k - 1];
    }
    throw std::logic_error("jacobi coefficients: bad rule");
}

std::size_t JacobiCoefficients::max_index() const {
    if (rule_ != Rule::explicit_arrays) return SIZE_MAX;
    return std::min(b_.size(), q_.size());
}

std::string JacobiCoefficients::label() const {
    switch (rule_) {
        case Rule::free: return "free";
        case Rule::chebyshev: return "chebyshev";
        case Rule::power: {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "power:%.17g", power_);
            return buf;
        }
        case Rule::explicit_arrays:
            return "explicit:" + std::to_string(max_index());
    }
    return "?";
}

void validate(const BoundaryAngle& angle) {
    if (!std::isfinite(angle.tau) || angle.tau < 0.0 || angle.tau >= kPi)
        throw std::invalid_argument("boundary angle: tau must lie in [0, pi)");
}

OrthoPolyEval eval_ortho_polys(const JacobiCoefficients& c, std::size_t n,
                               Complex z) {
    if (c.max_index() < n)
        throw std::invalid_argument("eval_ortho_polys: coefficient arrays too short");
    OrthoPolyEval out;
    out.values.resize(n + 1);
    out.values[0] = 1.0;
    if (n == 0) return out;

    out.values[1] = (z - c.q(1)) / c.b(1);
    for (std::size_t k = 1; k < n; ++k) {
        out.values[k + 1] =
            ((z - c.q(k + 1)) * out.values[k] - c.b(k) * out.values[k - 1]) / c.b(k + 1);
        const double mag = std::max(std::abs(out.values[k + 1]), std::abs(out.values[k]));
        if (mag > kRescaleAt) {
            for (std::size_t j = 0; j <= k + 1; ++j) out.values[j] /= mag;
            out.log_scale += std::log(mag);
        }
    }
    return out;
}

OrthoPolyEvalD eval_ortho_polys_d(const JacobiCoefficients& c, std::size_t n,
                                  Complex z) {
    if (c.max_index() < n)
        throw std::invalid_argument("eval_ortho_polys_d: coefficient arrays too short");
    OrthoPolyEvalD out;
    out.values.resize(n + 1);
    out.derivs.resize(n + 1);
    out.values[0] = 1.0;
    out.derivs[0] = 0.0;
    if (n == 0) return out;

    out.values[1] = (z - c.q(1)) / c.b(1);
    out.derivs[1] = 1.0 / c.b(1);
    for (std::size_t k = 1; k < n; ++k) {
        const Complex a = z - c.q(k + 1);
        const double bk = c.b(k), bk1 = c.b(k + 1);
        out.values[k + 1] = (a * out.values[k] - bk * out.values[k - 1]) / bk1;
        out.derivs[k + 1] =
            (out.values[k] + a * out.derivs[k] - bk * out.derivs[k - 1]) / bk1;
        const double mag =
            std::max(std::max(std::abs(out.values[k + 1]), std::abs(out.values[k])),
                     std::max(std::abs(out.derivs[k + 1]), std::abs(out.derivs[k])));
        if (mag > kRescaleAt) {
            for (std::size_t j = 0; j <= k + 1; ++j) {
                out.values[j] /= mag;
                out.derivs[j] /= mag;
            }
            out.log_scale += std::log(mag);
        }
    }
    return out;
}

namespace {

// Real-argument kernel quotient carried in compensated arithmetic; declines
// (returns false) when the polynomial values outgrow the guard so the caller
// can fall back to the log-scaled path.
bool cd_kernel_real(const JacobiCoefficients& c, std::size_t n, double x,
                    double y, double& out) {
    constexpr double kGuard = 1e140;
    DD px_prev{1.0, 0.0}, py_prev{1.0, 0.0};
    DD px = dd_div_d(two_sum(x, -c.q(1)), c.b(1));
    DD py = dd_div_d(two_sum(y, -c.q(1)), c.b(1));
    for (std::size_t k = 1; k < n; ++k) {
        const double bk = c.b(k), bk1 = c.b(k + 1), qk1 = c.q(k + 1);
        const DD nx = dd_div_d(
            dd_sub(dd_mul(two_sum(x, -qk1), px), dd_mul_d(px_prev, bk)), bk1);
        const DD ny = dd_div_d(
            dd_sub(dd_mul(two_sum(y, -qk1), py), dd_mul_d(py_prev, bk)), bk1);
        if (std::fabs(nx.hi) > kGuard || std::fabs(ny.hi) > kGuard) return false;
        px_prev = px;
        py_prev = py;
        px = nx;
        py = ny;
    }
    const DD diff = dd_sub(dd_mul(px, py_prev), dd_mul(px_prev, py));
    const DD k = dd_div(dd_mul_d(diff, c.b(n)), two_sum(x, -y));
    out = k.hi + k.lo;
    return true;
}

}  // namespace

Complex cd_kernel(const JacobiCoefficients& c, std::size_t n, Complex z,
                  Complex w) {
    if (n == 0) throw std::invalid_argument("cd_kernel: n must be >= 1");
    if (c.max_index() < n)
        throw std::invalid_argument("cd_kernel: coefficient arrays too short");

    if (std::abs(z - w) < 1e-8 * (1.0 + std::abs(z))) {
        // Confluent form at the midpoint; quadratic error in |z - w|.
        const Complex mid = 0.5 * (z + w);
        const OrthoPolyEvalD e = eval_ortho_polys_d(c, n, mid);
        const Complex k = c.b(n) * (e.values[n - 1] * e.derivs[n] -
                                    e.values[n] * e.derivs[n - 1]);
        return k * std::exp(2.0 * e.log_scale);
    }
    if (z.imag() == 0.0 && w.imag() == 0.0) {
        double k;
        if (cd_kernel_real(c, n, z.real(), w.real(), k)) return Complex(k, 0.0);
    }
    const OrthoPolyEval ez = eval_ortho_polys(c, n, z);
    const OrthoPolyEval ew = eval_ortho_polys(c, n, w);
    const Complex k = c.b(n) *
                      (ez.values[n] * ew.values[n - 1] - ez.values[n - 1] * ew.values[n]) /
                      (z - w);
    return k * std::exp(ez.log_scale + ew.log_scale);
}

namespace {

TridiagMatrix jacobi_truncation(const JacobiCoefficients& c, std::size_t n,
                                BoundaryAngle angle) {
    validate(angle);
    if (c.max_index() < n)
        throw std::invalid_argument("jacobi truncation: coefficient arrays too short");
    if (angle.tau == kHalfPi) {
        if (n < 2)
            throw std::invalid_argument("jacobi truncation: decoupled angle needs n >= 2");
        std::vector<double> d(n - 1), e(n >= 2 ? n - 2 : 0);
        for (std::size_t k = 0; k + 1 < n; ++k) d[k] = c.q(k + 1);
        for (std::size_t k = 0; k + 2 < n; ++k) e[k] = c.b(k + 1);
        return TridiagMatrix(std::move(d), std::move(e));
    }
    std::vector<double> d(n), e(n - 1);
    for (std::size_t k = 0; k < n; ++k) d[k] = c.q(k + 1);
    for (std::size_t k = 0; k + 1 < n; ++k) e[k] = c.b(k + 1);
    d[n - 1] += std::tan(angle.tau);
    return TridiagMatrix(std::move(d), std::move(e));
}

}  // namespace

SamplingSet sampling_set(const JacobiCoefficients& c, std::size_t n,
                         BoundaryAngle angle) {
    validate(angle);
    if (n == 0) throw std::invalid_argument("sampling_set: n must be >= 1");
    if (c.max_index() < n)
        throw std::invalid_argument("sampling_set: coefficient arrays too short");

    SamplingSet set;
    set.extension_param = angle.tau;
    if (angle.tau == kHalfPi && n == 1) return set;  // decoupled 1x1: no points

    const TridiagMatrix t = jacobi_truncation(c, n, angle);
    const double tol = 1e-13 * std::max(1.0, t.scale());
    set.points = eigenvalues(t, tol);

    for (std::size_t i = 0; i + 1 < set.points.size(); ++i)
        if (!(set.points[i] < set.points[i + 1]))
            throw std::runtime_error("sampling_set: eigenvalues failed to separate");

    set.kernel_norms.reserve(set.points.size());
    set.weights.reserve(set.points.size());
    for (double x : set.points) {
        const double kn = cd_kernel(c, n, x, x).real();
        if (!(kn > 0.0) || !std::isfinite(kn))
            throw std::runtime_error("sampling_set: non-positive kernel norm");
        set.kernel_norms.push_back(kn);
        set.weights.push_back(1.0 / kn);
    }
    return set;
}

BoundaryAngle place_sampling_point(const JacobiCoefficients& c, std::size_t n,
                                   double x_star) {
    if (n == 0) throw std::invalid_argument("place_sampling_point: n must be >= 1");
    if (!std::isfinite(x_star))
        throw std::invalid_argument("place_sampling_point: x must be finite");
    if (c.max_index() < n)
        throw std::invalid_argument("place_sampling_point: coefficient arrays too short");

    // x* is an eigenvalue of the angle-tau truncation iff
    // b_N P_N(x*) = tan(tau) P_{N-1}(x*); atan2 picks the angle directly and
    // the shared log scale cancels as a positive common factor.
    const OrthoPolyEval e = eval_ortho_polys(c, n, x_star);
    const double y = c.b(n) * e.values[n].real();
    const double x = e.values[n - 1].real();
    if (y == 0.0 && x == 0.0)
        throw std::runtime_error("place_sampling_point: degenerate polynomial pair");
    double tau = std::atan2(y, x);
    if (tau < 0.0) tau += kPi;
    if (tau >= kPi) tau = 0.0;  // atan2(-0, negative) folds to pi
    return BoundaryAngle{tau};
}

LimitCircleReport limit_circle_diagnostic(const JacobiCoefficients& c, Complex z,
                                          std::size_t k_max, double tol) {
    if (k_max < 8)
        throw std::invalid_argument("limit_circle_diagnostic: k_max must be >= 8");
    if (std::isnan(tol) || tol <= 0.0)
        throw std::invalid_argument("limit_circle_diagnostic: tol must be positive");
    if (c.max_index() < k_max)
        throw std::invalid_argument("limit_circle_diagnostic: coefficient arrays too short");

    const std::size_t checkpoints[3] = {k_max / 4, k_max / 2, k_max};

    // Running pair of polynomial values with a shared log scale, and the
    // partial sum held as s_hat * exp(s_ls) so divergent sequences do not
    // overflow before the report is assembled.
    Complex p_prev = 1.0, p_cur = 0.0;
    double ls = 0.0;
    double s_hat = 0.0, s_ls = 0.0;
    double cp_hat[3] = {0, 0, 0}, cp_ls[3] = {0, 0, 0};

    auto add_term = [&](const Complex& p) {
        const double t_hat = std::norm(p);
        if (t_hat == 0.0) return;
        const double t_ls = 2.0 * ls;
        if (s_hat == 0.0) {
            s_hat = t_hat;
            s_ls = t_ls;
        } else if (t_ls > s_ls) {
            s_hat = s_hat * std::exp(s_ls - t_ls) + t_hat;
            s_ls = t_ls;
        } else {
            s_hat += t_hat * std::exp(t_ls - s_ls);
        }
    };

    std::size_t next_cp = 0;
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k == 0) {
            p_cur = 1.0;
        } else if (k == 1) {
            p_prev = p_cur;
            p_cur = (z - c.q(1)) / c.b(1);
        } else {
            const Complex next =
                ((z - c.q(k)) * p_cur - c.b(k - 1) * p_prev) / c.b(k);
            p_prev = p_cur;
            p_cur = next;
            const double mag = std::max(std::abs(p_cur), std::abs(p_prev));
            if (mag > kRescaleAt) {
                p_cur /= mag;
                p_prev /= mag;
                ls += std::log(mag);
            }
        }
        add_term(p_cur);
        while (next_cp < 3 && k == checkpoints[next_cp]) {
            cp_hat[next_cp] = s_hat;
            cp_ls[next_cp] = s_ls;
            ++next_cp;
        }
    }

    LimitCircleReport rep;
    rep.partial_sums.resize(3);
    for (int i = 0; i < 3; ++i) rep.partial_sums[i] = cp_hat[i] * std::exp(cp_ls[i]);
    // S2/S3 in scaled space; the ratio is well-defined even when the plain
    // sums overflow.
    const double ratio = (cp_hat[1] / cp_hat[2]) * std::exp(cp_ls[1] - cp_ls[2]);
    rep.last_increment = 1.0 - ratio;
    rep.converged = rep.last_increment < tol;
    return rep;
}

JacobiModel::JacobiModel(JacobiCoefficients coeffs, std::size_t n)
    : coeffs_(std::move(coeffs)), n_(n) {
    if (n_ == 0) throw std::invalid_argument("jacobi model: n must be >= 1");
    if (coeffs_.max_index() < n_)
        throw std::invalid_argument("jacobi model: coefficient arrays too short for n");
    tag_ = "jacobi:" + coeffs_.label() + ":N=" + std::to_string(n_);
}

std::string JacobiModel::basis_tag() const { return tag_; }

Complex JacobiModel::basis_function(std::size_t j, Complex z) const {
    if (j >= n_) throw std::invalid_argument("jacobi model: basis index out of range");
    const OrthoPolyEval e = eval_ortho_polys(coeffs_, j, z);
    return e.values[j] * std::exp(e.log_scale);
}

Complex JacobiModel::transform(const StateVector& phi, Complex z) const {
    check_state(phi);
    const OrthoPolyEval e = eval_ortho_polys(coeffs_, n_ - 1, z);
    const double s = std::exp(e.log_scale);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += phi.coeffs[j] * e.values[j];
    return acc * s;
}

Complex JacobiModel::kernel(Complex z, Complex w) const {
    return cd_kernel(coeffs_, n_, z, w);
}

SamplingSet JacobiModel::extension_spectrum(double param, std::size_t) const {
    return sampling_set(coeffs_, n_, BoundaryAngle{param});
}

double JacobiModel::expected_sample_gap(double lo, double hi) const {
    const TridiagMatrix t = jacobi_truncation(coeffs_, n_, BoundaryAngle{0.0});
    const auto [glo, ghi] = gershgorin_interval(t);
    const double g = (ghi - glo) / static_cast<double>(n_);
    if (g > 0.0) return g;
    return std::max((hi - lo) / 8.0, 1e-3);
}

StateVector JacobiModel::gauge() const {
    StateVector g;
    g.coeffs.assign(n_, 0.0);
    g.coeffs[0] = 1.0;
    g.basis_tag = tag_;
    return g;
}

StateVector JacobiModel::multiply_by_x(const StateVector& phi) const {
    check_state(phi);
    StateVector out;
    out.basis_tag = tag_;
    out.coeffs.assign(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        Complex acc = coeffs_.q(j + 1) * phi.coeffs[j];
        if (j > 0) acc += coeffs_.b(j) * phi.coeffs[j - 1];
        if (j + 1 < n_) acc += coeffs_.b(j + 1) * phi.coeffs[j + 1];
        out.coeffs[j] = acc;
    }
    return out;
}

TridiagMatrix JacobiModel::truncation(BoundaryAngle angle) const {
    return jacobi_truncation(coeffs_, n_, angle);
}

KernelVectorSpec JacobiModel::canonical_kernel_vector(Complex z0) const {
    if (z0.imag() == 0.0)
        throw std::invalid_argument("kernel vector: base point must be non-real");
    const OrthoPolyEval e = eval_ortho_polys(coeffs_, n_ - 1, z0);
    KernelVectorSpec spec;
    spec.z0 = z0;
    spec.psi0.assign(e.values.begin(), e.values.end());
    double nn = 0.0;
    for (const Complex& v : spec.psi0) nn += std::norm(v);
    nn = std::sqrt(nn);
    for (Complex& v : spec.psi0) v /= nn;
    return spec;
}

StateVector JacobiModel::xi_from_psi(const KernelVectorSpec& spec, double ext_a,
                                     double ext_b, Complex z,
                                     double agree_tol) const {
    validate(spec);
    if (spec.psi0.size() != n_)
        throw std::invalid_argument("xi_from_psi: psi0 length must match dimension");
    if (!(agree_tol > 0.0))
        throw std::invalid_argument("xi_from_psi: agreement tolerance must be positive");

    const Complex zb = std::conj(z);
    auto xi_under = [&](double tau) {
        const BoundaryAngle angle{tau};
        validate(angle);
        if (angle.tau == kHalfPi)
            throw std::invalid_argument(
                "xi_from_psi: decoupled angle has no full-size resolvent");
        const TridiagMatrix t = jacobi_truncation(coeffs_, n_, angle);

        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_, n_);
        for (std::size_t k = 0; k < n_; ++k) {
            a(k, k) = t.diag()[k] - zb;
            if (k + 1 < n_) {
                a(k, k + 1) = t.offdiag()[k];
                a(k + 1, k) = t.offdiag()[k];
            }
        }
        Eigen::VectorXcd rhs(n_);
        for (std::size_t k = 0; k < n_; ++k) rhs(k) = spec.psi0[k];

        const Eigen::VectorXcd y = a.partialPivLu().solve(rhs);
        const double resid = (a * y - rhs).norm();
        if (!(resid <= 1e-8 * rhs.norm()) || !y.allFinite())
            throw std::invalid_argument(
                "xi_from_psi: z collides with the extension spectrum");

        std::vector<Complex> psi(n_);
        for (std::size_t k = 0; k < n_; ++k)
            psi[k] = spec.psi0[k] + (zb - spec.z0) * y(k);
        // Gauge normalization: divide by the pairing with the gauge
        // functional, which in this basis is the first coefficient.
        const Complex g = psi[0];
        if (std::abs(g) < 1e-250)
            throw std::runtime_error("xi_from_psi: gauge pairing vanished");
        for (Complex& v : psi) v /= g;
        return psi;
    };

    const std::vector<Complex> xa = xi_under(ext_a);
    const std::vector<Complex> xb = xi_under(ext_b);
    double diff = 0.0, na = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
        diff += std::norm(xa[k] - xb[k]);
        na += std::norm(xa[k]);
    }
    diff = std::sqrt(diff);
    na = std::sqrt(na);
    if (!(diff <= agree_tol * std::max(1.0, na)))
        throw std::runtime_error(
            "xi_from_psi: results disagree across extensions (deviation " +
            std::to_string(diff) + ")");

    StateVector out;
    out.coeffs = xa;
    out.basis_tag = tag_;
    return out;
}

}  // namespace rksamp
