#pragma once

// Symmetric tridiagonal eigen engine: Sturm counts, bisection with a single
// Newton polish, and eigenvectors by the three-term recurrence.  This is the
// numeric core under the Jacobi sampling sets; it deliberately avoids dense
// eigensolvers.

#include <cstddef>
#include <utility>
#include <vector>

namespace rksamp {

// Symmetric tridiagonal matrix with diagonal d_1..d_n and positive
// off-diagonal e_1..e_{n-1}.
class TridiagMatrix {
  public:
    TridiagMatrix(std::vector<double> diag, std::vector<double> offdiag);

    std::size_t size() const { return diag_.size(); }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& offdiag() const { return offdiag_; }

    // Largest absolute entry; the natural scale for pivot guards and
    // tolerances.
    double scale() const { return scale_; }

  private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
    double scale_;
};

// Number of eigenvalues strictly less than x, from the signs of the LDL^T
// pivots.  A pivot that lands exactly on zero is nudged in the positive
// direction, which keeps the count consistent with the strict inequality
// (an eigenvalue exactly at x is not counted).
int sturm_count(const TridiagMatrix& m, double x);

// Interval [lo, hi] guaranteed to contain the spectrum.
std::pair<double, double> gershgorin_interval(const TridiagMatrix& m);

// All eigenvalues in ascending order.  Each one is bracketed by Sturm-count
// bisection to width tol, then polished with one Newton step on the
// characteristic polynomial (rejected if it leaves the bracket).
std::vector<double> eigenvalues(const TridiagMatrix& m, double tol);

// Characteristic polynomial and its derivative at x, as value * 2^exponent
// to dodge overflow for large n.
struct ScaledValue {
    double value;
    int exponent;
};
std::pair<ScaledValue, ScaledValue> char_poly(const TridiagMatrix& m, double x);

// Eigenvector for eigenvalue x by the forward recurrence with first component
// fixed to 1.  Throws std::invalid_argument when the residual
// ||(M - x)v|| > residual_tol * scale * ||v|| says x is not an eigenvalue.
std::vector<double> eigvec_by_recurrence(const TridiagMatrix& m, double x,
                                         double residual_tol = 1e-8);

}  // namespace rksamp
