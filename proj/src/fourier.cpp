#include "linopt/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace linopt {

namespace detail {

namespace {
// FFTW plan creation is not thread-safe; execution of a fresh plan is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

void fft(std::vector<cplx>& data, bool inverse) {
    const auto n = static_cast<int>(data.size());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(data.data()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
}

std::vector<cplx> rfft(const std::vector<double>& data) {
    const auto n = static_cast<int>(data.size());
    std::vector<cplx> out(static_cast<std::size_t>(n / 2 + 1));
    std::vector<double> in = data; // FFTW_ESTIMATE keeps the input intact, copy anyway
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace detail

namespace {

Domain flipped(Domain d) {
    return d == Domain::native_x ? Domain::frequency_omega : Domain::native_x;
}

Wavepacket transform(const Wavepacket& w, bool inverse) {
    const Grid& g = w.grid();
    const std::size_t n = g.count;
    const double dp = 2.0 * std::numbers::pi / (g.step * static_cast<double>(n));
    const double p0 = -(static_cast<double>(n) / 2.0) * dp;
    const double sign = inverse ? 1.0 : -1.0;

    // exp(sign*i p_j x_k) = exp(sign*i p0 x0) (-1)^k exp(sign*i j dp x0) W^(sign*jk)
    std::vector<cplx> data = w.samples();
    for (std::size_t k = 1; k < n; k += 2) data[k] = -data[k];
    detail::fft(data, inverse);
    const double amp = g.step / std::sqrt(2.0 * std::numbers::pi);
    const cplx base = std::polar(amp, sign * p0 * g.start);
    for (std::size_t j = 0; j < n; ++j)
        data[j] *= base * std::polar(1.0, sign * static_cast<double>(j) * dp * g.start);
    return Wavepacket({p0, dp, n}, std::move(data), flipped(w.domain()));
}

} // namespace

Wavepacket fourier(const Wavepacket& w) { return transform(w, false); }

Wavepacket fourier_inverse(const Wavepacket& w) { return transform(w, true); }

} // namespace linopt
