#include "rksamp/tridiag.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rksamp {

namespace {

// Pivot floor: small relative to the matrix, nonzero even for the 1x1 zero
// matrix.
double pivot_floor(const TridiagMatrix& m) {
    double s = m.scale();
    return s > 0.0 ? DBL_EPSILON * s : DBL_MIN;
}

// Keeps a pivot away from zero without flipping its sign.  An exact zero is
// nudged positive, so an eigenvalue sitting exactly at the shift is not
// counted by the strict "less than" count.
double guard_pivot(double piv, double floor_val) {
    if (piv == 0.0) return floor_val;
    if (std::fabs(piv) < floor_val) return std::copysign(floor_val, piv);
    return piv;
}

}  // namespace

TridiagMatrix::TridiagMatrix(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.empty())
        throw std::invalid_argument("tridiag: empty diagonal");
    if (offdiag_.size() + 1 != diag_.size())
        throw std::invalid_argument("tridiag: offdiagonal length must be n-1");
    scale_ = 0.0;
    for (double v : diag_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("tridiag: non-finite diagonal entry");
        scale_ = std::max(scale_, std::fabs(v));
    }
    for (double v : offdiag_) {
        if (!std::isfinite(v) || v <= 0.0)
            throw std::invalid_argument("tridiag: offdiagonal entries must be positive");
        scale_ = std::max(scale_, v);
    }
}

int sturm_count(const TridiagMatrix& m, double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("sturm_count: x must be finite");
    const auto& d = m.diag();
    const auto& e = m.offdiag();
    const double floor_val = pivot_floor(m);

    int count = 0;
    double piv = guard_pivot(d[0] - x, floor_val);
    if (piv < 0.0) ++count;
    for (std::size_t k = 1; k < d.size(); ++k) {
        piv = guard_pivot((d[k] - x) - e[k - 1] * e[k - 1] / piv, floor_val);
        if (piv < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> gershgorin_interval(const TridiagMatrix& m) {
    const auto& d = m.diag();
    const auto& e = m.offdiag();
    const std::size_t n = d.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < n; ++k) {
        double r = 0.0;
        if (k > 0) r += e[k - 1];
        if (k + 1 < n) r += e[k];
        lo = std::min(lo, d[k] - r);
        hi = std::max(hi, d[k] + r);
    }
    return {lo, hi};
}

std::pair<ScaledValue, ScaledValue> char_poly(const TridiagMatrix& m, double x) {
    const auto& d = m.diag();
    const auto& e = m.offdiag();
    const std::size_t n = d.size();

    // chi_0 = 1, chi_1 = d_1 - x, then the three-term determinant recurrence;
    // derivative carried alongside.  All four running values share one
    // power-of-two exponent so the Newton ratio chi/chi' is scale-free.
    double pm1 = 1.0, dpm1 = 0.0;
    double p = d[0] - x, dp = -1.0;
    int expo = 0;

    for (std::size_t k = 1; k < n; ++k) {
        const double a = d[k] - x;
        const double b2 = e[k - 1] * e[k - 1];
        const double pn = a * p - b2 * pm1;
        const double dpn = -p + a * dp - b2 * dpm1;
        pm1 = p;
        dpm1 = dp;
        p = pn;
        dp = dpn;

        const double mag = std::max(std::max(std::fabs(p), std::fabs(pm1)),
                                    std::max(std::fabs(dp), std::fabs(dpm1)));
        if (mag > 0x1p500) {
            p *= 0x1p-500;
            pm1 *= 0x1p-500;
            dp *= 0x1p-500;
            dpm1 *= 0x1p-500;
            expo += 500;
        } else if (mag > 0.0 && mag < 0x1p-500) {
            p *= 0x1p500;
            pm1 *= 0x1p500;
            dp *= 0x1p500;
            dpm1 *= 0x1p500;
            expo -= 500;
        }
    }
    return {ScaledValue{p, expo}, ScaledValue{dp, expo}};
}

std::vector<double> eigenvalues(const TridiagMatrix& m, double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("eigenvalues: tolerance must be positive");
    const std::size_t n = m.size();
    auto [glo, ghi] = gershgorin_interval(m);
    const double margin = std::max(tol, 1e-10 * (1.0 + m.scale()));
    glo -= margin;
    ghi += margin;

    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = glo, hi = ghi;
        // Invariant: count(lo) <= j < count(hi).
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;  // tol below spacing of doubles
            if (sturm_count(m, mid) <= static_cast<int>(j))
                lo = mid;
            else
                hi = mid;
        }
        double root = 0.5 * (lo + hi);

        // One Newton polish on the characteristic polynomial, kept only if it
        // stays inside the bisection bracket.
        auto [chi, dchi] = char_poly(m, root);
        if (dchi.value != 0.0 && std::isfinite(chi.value / dchi.value)) {
            const double polished = root - chi.value / dchi.value;
            if (polished >= lo && polished <= hi) root = polished;
        }
        out[j] = root;
    }
    return out;
}

std::vector<double> eigvec_by_recurrence(const TridiagMatrix& m, double x,
                                         double residual_tol) {
    if (!std::isfinite(x))
        throw std::invalid_argument("eigvec_by_recurrence: x must be finite");
    const auto& d = m.diag();
    const auto& e = m.offdiag();
    const std::size_t n = d.size();

    std::vector<double> v(n);
    v[0] = 1.0;
    if (n > 1) v[1] = (x - d[0]) / e[0];
    for (std::size_t k = 2; k < n; ++k)
        v[k] = ((x - d[k - 1]) * v[k - 1] - e[k - 2] * v[k - 2]) / e[k - 1];

    // Every interior row is satisfied by construction; the residual is
    // dominated by the last row, but assemble the whole thing anyway.
    double rr = 0.0, vv = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double row = (d[k] - x) * v[k];
        if (k > 0) row += e[k - 1] * v[k - 1];
        if (k + 1 < n) row += e[k] * v[k + 1];
        rr += row * row;
        vv += v[k] * v[k];
    }
    const double resid = std::sqrt(rr);
    const double scale = std::max(m.scale(), 1.0);
    if (!(resid <= residual_tol * scale * std::sqrt(vv)))
        throw std::invalid_argument(
            "eigvec_by_recurrence: residual check failed, x is not an eigenvalue");
    return v;
}

}  // namespace rksamp
