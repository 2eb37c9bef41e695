#pragma once

#include "linopt/grid.hpp"

#include <cstddef>

namespace linopt::kernels {

// Serial reference implementations. These are the ground truth the OpenMP
// kernels are tested against; keep them as plain loops.
namespace serial {

double sum(const double* w, std::size_t n);
double norm2(const cplx* psi, std::size_t n);
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);

/// Weighted moment: sum_k w_k * (x_k - center)^order with x_k = x0 + k*dx.
double moment(const double* w, std::size_t n, double x0, double dx, int order,
              double center);

/// Phase-modulated sum: sum_k w_k * exp(-i * x_k * tau), x_k = x0 + k*dx.
/// Evaluates sin/cos per element.
cplx phase_sum(const double* w, std::size_t n, double x0, double dx, double tau);

} // namespace serial

// OpenMP kernels. Threads reduce into per-block partials that are combined
// in block order, so results are bitwise reproducible for a fixed thread
// count.
double sum(const double* w, std::size_t n);
double norm2(const cplx* psi, std::size_t n);
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);
double moment(const double* w, std::size_t n, double x0, double dx, int order,
              double center);

/// Blocked phase-rotation variant of serial::phase_sum: one sincos per block
/// of 2048 samples, complex rotation in between.
cplx phase_sum(const double* w, std::size_t n, double x0, double dx, double tau);

} // namespace linopt::kernels
