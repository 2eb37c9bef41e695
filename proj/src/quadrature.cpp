#include "linopt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace linopt::quad {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// positive half; node 0 and even indices belong to both rules.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    cplx value;
    double error;
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const cplx fc = f(c);
    cplx kronrod = kWgk[7] * fc;
    cplx gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const cplx fsum = f(c - dx) + f(c + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::abs(kronrod - gauss)};
}

void adapt(const std::function<cplx(double)>& f, double a, double b, double tol,
           int depth, cplx& value, double& error) {
    const Panel p = gk15(f, a, b);
    if (p.error <= tol || depth <= 0) {
        value += p.value;
        error += p.error;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, tol * 0.5, depth - 1, value, error);
    adapt(f, c, b, tol * 0.5, depth - 1, value, error);
}

} // namespace

Result integrate(const std::function<cplx(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_depth) {
    const Panel first = gk15(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(first.value));
    Result r;
    adapt(f, a, b, tol, max_depth, r.value, r.abs_error);
    r.converged = r.abs_error <= 16 * std::max(tol, abs_tol);
    return r;
}

Result integrate_split(const std::function<cplx(double)>& f,
                       const std::vector<double>& points, double abs_tol,
                       double rel_tol, int max_depth) {
    if (points.size() < 2) throw std::invalid_argument("integrate_split: need at least 2 points");
    std::vector<double> p = points;
    std::sort(p.begin(), p.end());
    Result total;
    total.converged = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Result r = integrate(f, p[i], p[i + 1], abs_tol, rel_tol, max_depth);
        total.value += r.value;
        total.abs_error += r.abs_error;
        total.converged = total.converged && r.converged;
    }
    return total;
}

NodeSet gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    NodeSet out;
    out.nodes.resize(static_cast<std::size_t>(n));
    out.weights.resize(static_cast<std::size_t>(n));
    // Newton iteration on P_n with the Chebyshev-angle initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        out.nodes[static_cast<std::size_t>(i)] = -x;
        out.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        out.weights[static_cast<std::size_t>(i)] = w;
        out.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) out.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return out;
}

} // namespace linopt::quad
