#pragma once

#include <complex>
#include <cstddef>

namespace linopt {

using cplx = std::complex<double>;

/// Uniform sample grid x_k = start + k*step, k = 0..count-1.
struct Grid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    double coord(std::size_t k) const { return start + step * static_cast<double>(k); }
    double span() const { return step * static_cast<double>(count - 1); }
    double center() const { return start + 0.5 * span(); }

    bool operator==(const Grid&) const = default;
};

} // namespace linopt
