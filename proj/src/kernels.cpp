#include "linopt/kernels.hpp"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linopt::kernels {

namespace serial {

double sum(const double* w, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += w[k];
    return acc;
}

double norm2(const cplx* psi, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += std::norm(psi[k]);
    return acc;
}

cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

double moment(const double* w, std::size_t n, double x0, double dx, int order,
              double center) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = x0 + dx * static_cast<double>(k) - center;
        acc += w[k] * (order == 1 ? x : x * x);
    }
    return acc;
}

cplx phase_sum(const double* w, std::size_t n, double x0, double dx, double tau) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = x0 + dx * static_cast<double>(k);
        acc += w[k] * std::polar(1.0, -x * tau);
    }
    return acc;
}

} // namespace serial

namespace {

constexpr std::size_t kPhaseBlock = 2048;

// Splits [0,n) into contiguous blocks and combines per-block partials in
// block order, independent of thread scheduling.
template <typename T, typename Body>
T block_reduce(std::size_t n, Body&& body) {
    if (n == 0) return T{};
#ifdef _OPENMP
    const std::size_t threads = static_cast<std::size_t>(omp_get_max_threads());
#else
    const std::size_t threads = 1;
#endif
    const std::size_t blocks = std::min<std::size_t>(std::max<std::size_t>(threads * 4, 1),
                                                     (n + kPhaseBlock - 1) / kPhaseBlock);
    if (blocks <= 1) return body(std::size_t{0}, n);
    const std::size_t chunk = (n + blocks - 1) / blocks;
    std::vector<T> partial(blocks, T{});
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * chunk;
        const std::size_t hi = std::min(lo + chunk, n);
        if (lo < hi) partial[static_cast<std::size_t>(b)] = body(lo, hi);
    }
    T acc{};
    for (const T& p : partial) acc += p;
    return acc;
}

} // namespace

double sum(const double* w, std::size_t n) {
    return block_reduce<double>(n, [&](std::size_t lo, std::size_t hi) {
        return serial::sum(w + lo, hi - lo);
    });
}

double norm2(const cplx* psi, std::size_t n) {
    return block_reduce<double>(n, [&](std::size_t lo, std::size_t hi) {
        return serial::norm2(psi + lo, hi - lo);
    });
}

cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    return block_reduce<cplx>(n, [&](std::size_t lo, std::size_t hi) {
        return serial::dot_conj(a + lo, b + lo, hi - lo);
    });
}

double moment(const double* w, std::size_t n, double x0, double dx, int order,
              double center) {
    return block_reduce<double>(n, [&](std::size_t lo, std::size_t hi) {
        return serial::moment(w + lo, hi - lo, x0 + dx * static_cast<double>(lo), dx,
                              order, center);
    });
}

cplx phase_sum(const double* w, std::size_t n, double x0, double dx, double tau) {
    return block_reduce<cplx>(n, [&](std::size_t lo, std::size_t hi) {
        // Rotation recurrence, re-anchored with an exact sincos every block
        // so phase drift stays at the machine-epsilon level.
        cplx acc = 0.0;
        const cplx rot = std::polar(1.0, -dx * tau);
        std::size_t k = lo;
        while (k < hi) {
            const std::size_t stop = std::min(hi, k + kPhaseBlock);
            cplx phase = std::polar(1.0, -(x0 + dx * static_cast<double>(k)) * tau);
            for (; k < stop; ++k) {
                acc += w[k] * phase;
                phase *= rot;
            }
        }
        return acc;
    });
}

} // namespace linopt::kernels
