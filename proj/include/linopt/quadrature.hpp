#pragma once

#include "linopt/grid.hpp"

#include <functional>
#include <vector>

namespace linopt::quad {

struct Result {
    cplx value{};
    double abs_error = 0.0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b] to the requested tolerances.
Result integrate(const std::function<cplx(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-11,
                 int max_depth = 60);

/// Same, with interior breakpoints the integrand is known to be non-smooth
/// at (each sub-interval is integrated adaptively on its own).
Result integrate_split(const std::function<cplx(double)>& f,
                       const std::vector<double>& points,
                       double abs_tol = 1e-12, double rel_tol = 1e-11,
                       int max_depth = 60);

/// Gauss-Legendre nodes and weights on [-1,1].
struct NodeSet {
    std::vector<double> nodes;
    std::vector<double> weights;
};
NodeSet gauss_legendre(int n);

} // namespace linopt::quad
