#pragma once

// Structure functions built from the reproducing kernel at one non-real
// anchor, their real/imaginary splits, the associated zero families, and the
// space-axiom spot checks.

#include <cstddef>
#include <vector>

#include "rksamp/kernel_core.hpp"

namespace rksamp {

// e(z) = i * sqrt(pi / (k(w0, conj(w0)) * Im w0)) * (conj(w0) - z) * k(z, conj(w0)),
// with k the model's structure kernel (Model::debranges_kernel).  The anchor
// must lie in the open upper half-plane.
struct StructureFunction {
    const Model* model = nullptr;
    Complex w0;
};

StructureFunction make_structure_function(const Model& model, Complex w0);

Complex structure_function_eval(const StructureFunction& sf, Complex z);

// e = a + i*b with a, b real on the real axis: a = (e + e*)/2,
// b = (e - e*)/(2i), where e*(z) = conj(e(conj(z))).
struct ABPair {
    Complex a;
    Complex b;
};

ABPair ab_split(const StructureFunction& sf, Complex z);

// s_t = -sin(t) * a + cos(t) * b for t in [0, pi).
Complex st_eval(const StructureFunction& sf, double t, Complex z);

// Real zeros of s_t in [lo, hi]: sign-change scan at one eighth of the
// model's expected sample gap, refined by bisection to width 1e-10.  Zeros of
// even multiplicity produce no sign change and are not detected; the shipped
// models only have simple zeros.  An interval with no zeros returns empty.
std::vector<double> st_zeros(const StructureFunction& sf, double t, double lo,
                             double hi);

// For f = (X - w) h and g = (X - conj(w)) h with X the model's truncated
// multiplication operator and h of compliant degree, reports ||g|| / ||f||.
// The ratio is 1 for every self-adjoint truncation.
struct BlaschkeReport {
    double norm_ratio = 0.0;
    StateVector f;
    StateVector g;
};

BlaschkeReport axiom_blaschke_check(const Model& model, const StateVector& h,
                                    Complex w);

// Max deviation over the grid of transform(phi*, z) from
// conj(transform(phi, conj(z))), where phi* has conjugated coefficients.
// Also requires ||phi*|| == ||phi|| exactly.  Models without a real basis on
// the real axis are rejected.
double axiom_star_check(const Model& model, const StateVector& phi,
                        const std::vector<Complex>& grid);

struct EvalBoundReport {
    double lhs = 0.0;  // |transform(phi, w)|
    double rhs = 0.0;  // sqrt(k(w, conj(w))) * ||phi||
    bool holds = false;
};

// Point-evaluation bound |phi_hat(w)| <= sqrt(k(w, conj(w))) * ||phi||, with a
// 1e-10 slack; equality is attained by phi = xi_state(w) / ||xi_state(w)||.
EvalBoundReport evaluation_bound_check(const Model& model,
                                       const StateVector& phi, Complex w);

}  // namespace rksamp
