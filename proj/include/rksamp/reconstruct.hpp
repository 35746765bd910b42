#pragma once

// Reconstruction from samples: the weighted kernel series and the equivalent
// Lagrange-type interpolation series built from a generating function.

#include <cstddef>
#include <vector>

#include "rksamp/kernel_core.hpp"

namespace rksamp {

// Samples of a transform over a sampling set, values in point order.
struct SampledSignal {
    SamplingSet set;
    std::vector<Complex> values;
};

SampledSignal sample_transform(const Model& model, const StateVector& phi,
                               const SamplingSet& set);

// Index permutation putting the points in series order: ascending |x|, ties
// broken toward the smaller point.
std::vector<std::size_t> series_order(const SamplingSet& set);

// Partial kernel series sum over the first `terms` points in series order:
// f(z) ~= sum kernel(z, x_n) * w_n * f(x_n).  When z coincides exactly with a
// sampling point the stored sample is returned unchanged.
Complex kernel_series(const Model& model, const SampledSignal& signal,
                      Complex z, std::size_t terms);

// Generating function anchored at one sampling point:
// G(z) = (z - x_a) * kernel(z, x_a) / k(x_a, x_a).  G vanishes at every
// sampling point and G'(x_a) = 1.
struct LagrangeGenerator {
    const Model* model = nullptr;
    SamplingSet set;
    std::size_t anchor = 0;
};

LagrangeGenerator make_lagrange_generator(const Model& model, SamplingSet set,
                                          std::size_t anchor);

Complex lagrange_G(const LagrangeGenerator& gen, Complex z);

// Lagrange series over the first `terms` points in series order, with G'
// taken by central differences.  Exact pass-through at sampling points.
Complex lagrange_series(const LagrangeGenerator& gen,
                        const SampledSignal& signal, Complex z,
                        std::size_t terms);

struct ReportRow {
    Complex z;
    std::size_t terms = 0;
    double err_kernel = 0.0;    // |kernel series - transform|
    double err_lagrange = 0.0;  // |lagrange series - transform|
};

struct ReconstructionReport {
    std::vector<ReportRow> rows;  // schedule-major, grid-minor
};

// Samples phi's transform over the extension spectrum and tabulates both
// series' absolute errors on the grid for each term count in the schedule.
ReconstructionReport reconstruction_report(const Model& model,
                                           const StateVector& phi,
                                           double ext_param, std::size_t window,
                                           const std::vector<Complex>& grid,
                                           const std::vector<std::size_t>& schedule);

}  // namespace rksamp
