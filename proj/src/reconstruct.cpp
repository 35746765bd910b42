#include "rksamp/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rksamp {

namespace {

void check_signal(const SampledSignal& signal) {
    validate(signal.set);
    if (signal.values.size() != signal.set.size())
        throw std::invalid_argument("sampled signal: value count does not match points");
}

// Exact pass-through: a real grid point that coincides bitwise with a
// sampling point returns the stored sample.
const Complex* stored_sample(const SampledSignal& signal, Complex z) {
    if (z.imag() != 0.0) return nullptr;
    const auto& pts = signal.set.points;
    const auto it = std::lower_bound(pts.begin(), pts.end(), z.real());
    if (it != pts.end() && *it == z.real())
        return &signal.values[static_cast<std::size_t>(it - pts.begin())];
    return nullptr;
}

}  // namespace

SampledSignal sample_transform(const Model& model, const StateVector& phi,
                               const SamplingSet& set) {
    validate(set);
    SampledSignal signal;
    signal.set = set;
    signal.values.reserve(set.size());
    for (double x : set.points)
        signal.values.push_back(model.transform(phi, Complex(x, 0.0)));
    return signal;
}

std::vector<std::size_t> series_order(const SamplingSet& set) {
    std::vector<std::size_t> idx(set.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        const double ai = std::fabs(set.points[i]), aj = std::fabs(set.points[j]);
        if (ai != aj) return ai < aj;
        return set.points[i] < set.points[j];
    });
    return idx;
}

Complex kernel_series(const Model& model, const SampledSignal& signal,
                      Complex z, std::size_t terms) {
    check_signal(signal);
    if (terms > signal.set.size())
        throw std::invalid_argument("kernel_series: term count exceeds samples");
    if (const Complex* s = stored_sample(signal, z)) return *s;

    const std::vector<std::size_t> order = series_order(signal.set);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < terms; ++i) {
        const std::size_t n = order[i];
        acc += model.kernel(z, Complex(signal.set.points[n], 0.0)) *
               signal.set.weights[n] * signal.values[n];
    }
    return acc;
}

LagrangeGenerator make_lagrange_generator(const Model& model, SamplingSet set,
                                          std::size_t anchor) {
    validate(set);
    if (anchor >= set.size())
        throw std::invalid_argument("lagrange generator: anchor index out of range");
    return LagrangeGenerator{&model, std::move(set), anchor};
}

Complex lagrange_G(const LagrangeGenerator& gen, Complex z) {
    const double xa = gen.set.points[gen.anchor];
    return (z - xa) * gen.model->kernel(z, Complex(xa, 0.0)) /
           gen.set.kernel_norms[gen.anchor];
}

Complex lagrange_series(const LagrangeGenerator& gen,
                        const SampledSignal& signal, Complex z,
                        std::size_t terms) {
    check_signal(signal);
    if (terms > signal.set.size())
        throw std::invalid_argument("lagrange_series: term count exceeds samples");
    if (const Complex* s = stored_sample(signal, z)) return *s;

    const std::vector<std::size_t> order = series_order(signal.set);
    const Complex gz = lagrange_G(gen, z);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < terms; ++i) {
        const std::size_t n = order[i];
        const double xn = signal.set.points[n];
        // Fourth-order central differences for G'(x_n), assembled as a
        // Richardson pair of secants. The probe points round when added to
        // x_n, so each secant is divided by its exact span (the subtractions
        // below are exact for nearby doubles); trusting the nominal step
        // instead would cap the derivative near 1e-10 relative accuracy. The
        // generator vanishes at every sampling point, so the quotient in the
        // accumulation line is the cardinal function.
        const double h = 1e-6 * (1.0 + std::fabs(xn));
        const double z1p = xn + h, z1m = xn - h;
        const double z2p = xn + 2.0 * h, z2m = xn - 2.0 * h;
        const Complex d1 =
            (lagrange_G(gen, Complex(z1p, 0.0)) - lagrange_G(gen, Complex(z1m, 0.0))) /
            ((z1p - xn) + (xn - z1m));
        const Complex d2 =
            (lagrange_G(gen, Complex(z2p, 0.0)) - lagrange_G(gen, Complex(z2m, 0.0))) /
            ((z2p - xn) + (xn - z2m));
        const double r = ((z2p - xn) + (xn - z2m)) / ((z1p - xn) + (xn - z1m));
        const Complex dg = (r * r * d1 - d2) / (r * r - 1.0);
        if (std::abs(dg) < 1e-12)
            throw std::runtime_error("lagrange_series: generator derivative vanished");
        acc += gz / ((z - xn) * dg) * signal.values[n];
    }
    return acc;
}

ReconstructionReport reconstruction_report(const Model& model,
                                           const StateVector& phi,
                                           double ext_param, std::size_t window,
                                           const std::vector<Complex>& grid,
                                           const std::vector<std::size_t>& schedule) {
    const SamplingSet set = model.extension_spectrum(ext_param, window);
    const SampledSignal signal = sample_transform(model, phi, set);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] == 0 || schedule[i] > set.size())
            throw std::invalid_argument("reconstruction_report: schedule entry out of range");
        if (i > 0 && schedule[i] < schedule[i - 1])
            throw std::invalid_argument("reconstruction_report: schedule must be ascending");
    }

    const std::vector<std::size_t> order = series_order(set);
    const LagrangeGenerator gen = make_lagrange_generator(model, set, order[0]);

    ReconstructionReport report;
    report.rows.reserve(schedule.size() * grid.size());
    for (std::size_t terms : schedule) {
        for (const Complex& z : grid) {
            const Complex truth = model.transform(phi, z);
            ReportRow row;
            row.z = z;
            row.terms = terms;
            row.err_kernel = std::abs(kernel_series(model, signal, z, terms) - truth);
            row.err_lagrange = std::abs(lagrange_series(gen, signal, z, terms) - truth);
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace rksamp
