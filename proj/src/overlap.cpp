#include "linopt/overlap.hpp"

#include "linopt/fourier.hpp"
#include "linopt/kernels.hpp"
#include "overlap_caches.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace linopt {

namespace detail {

namespace {
constexpr std::size_t kMinTable = std::size_t{1} << 18;

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}
} // namespace

bool AutocorrTable::covers(double tau) const { return std::abs(tau) <= tau_max; }

cplx AutocorrTable::eval(double tau) const {
    const double t = std::abs(tau);
    const double u = t / dtau;
    const std::size_t m = vals.size();
    std::size_t i1 = static_cast<std::size_t>(u);
    if (i1 + 2 >= m) i1 = m - 3;
    const std::size_t i0 = i1 > 0 ? i1 - 1 : 0;
    // cubic Lagrange through nodes i0..i0+3
    const double d = u - static_cast<double>(i0);
    const double c0 = -(d - 1) * (d - 2) * (d - 3) / 6.0;
    const double c1 = d * (d - 2) * (d - 3) / 2.0;
    const double c2 = -d * (d - 1) * (d - 3) / 2.0;
    const double c3 = d * (d - 1) * (d - 2) / 6.0;
    const cplx s = c0 * vals[i0] + c1 * vals[i0 + 1] + c2 * vals[i0 + 2] + c3 * vals[i0 + 3];
    const cplx o = s * std::polar(1.0, -t * mean);
    return tau >= 0.0 ? o : std::conj(o);
}

AutocorrTable build_autocorr_table(const std::vector<double>& density, double x0, double dx) {
    const std::size_t n = density.size();
    const std::size_t npad = next_pow2(std::max(n, kMinTable));
    std::vector<double> padded(npad, 0.0);
    std::copy(density.begin(), density.end(), padded.begin());
    std::vector<cplx> freq = detail::rfft(padded);

    AutocorrTable t;
    t.dtau = 2.0 * std::numbers::pi / (dx * static_cast<double>(npad));
    t.tau_max = std::numbers::pi / dx;
    const double total = kernels::sum(density.data(), n);
    t.mean = total > 0.0 ? kernels::moment(density.data(), n, x0, dx, 1, 0.0) / total : 0.0;
    t.vals.resize(freq.size());
    // O(tau_m) = exp(-i tau_m x0) * F_m; store with the mean phase removed.
    for (std::size_t mm = 0; mm < freq.size(); ++mm) {
        const double tau_m = t.dtau * static_cast<double>(mm);
        t.vals[mm] = freq[mm] * std::polar(1.0, -tau_m * (x0 - t.mean));
    }
    return t;
}

} // namespace detail

namespace {

std::vector<double> native_density(const Wavepacket& w) {
    const auto& s = w.samples();
    std::vector<double> d(s.size());
    const double dx = w.grid().step;
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(s.size()); ++k)
        d[static_cast<std::size_t>(k)] = std::norm(s[static_cast<std::size_t>(k)]) * dx;
    return d;
}

const detail::AutocorrTable& table_for(const Wavepacket& w, Convention conv) {
    auto& caches = w.caches();
    const int idx = conv == Convention::native_shift ? 0 : 1;
    std::call_once(caches.once[idx], [&] {
        if (conv == Convention::conjugate_phase) {
            caches.table[idx] = detail::build_autocorr_table(native_density(w), w.grid().start,
                                                             w.grid().step);
        } else {
            const Wavepacket hat = fourier(w);
            caches.table[idx] = detail::build_autocorr_table(native_density(hat),
                                                             hat.grid().start, hat.grid().step);
        }
    });
    return *caches.table[idx];
}

} // namespace

cplx displaced_overlap(const Wavepacket& w, double tau, Convention conv) {
    if (conv == Convention::native_shift && !(std::abs(tau) < 0.5 * w.grid().span()))
        throw std::invalid_argument("displaced_overlap: shift pushes support off-grid");
    const detail::AutocorrTable& t = table_for(w, conv);
    if (t.covers(tau)) return t.eval(tau);
    // Conjugate-phase displacements beyond the table range fall back to the
    // direct sum; they are rare and not performance sensitive.
    return ref::displaced_overlap_direct(w, tau, conv);
}

namespace {

struct WindowedVariance {
    double full = 0.0;
    double central = 0.0; // same variance over the central half-span window
};

// Centered second moments of a density, over the whole grid and over the
// central half-span window. A tail-dominated (divergent) second moment shows
// up as strong growth from the window to the full grid.
WindowedVariance windowed_variance(const std::vector<double>& d, double x0, double dx) {
    const std::size_t n = d.size();
    const double total = kernels::sum(d.data(), n);
    const double mean = kernels::moment(d.data(), n, x0, dx, 1, 0.0) / total;
    WindowedVariance out;
    out.full = kernels::moment(d.data(), n, x0, dx, 2, mean) / total;
    const double lo = mean - 0.25 * dx * static_cast<double>(n);
    const double hi = mean + 0.25 * dx * static_cast<double>(n);
    std::size_t k_lo = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - x0) / dx)));
    std::size_t k_hi = static_cast<std::size_t>(
        std::min(static_cast<double>(n - 1), std::floor((hi - x0) / dx)));
    if (k_lo >= k_hi) { // degenerate; treat window as full grid
        out.central = out.full;
        return out;
    }
    const double wtotal = kernels::sum(d.data() + k_lo, k_hi - k_lo + 1);
    const double wmean =
        kernels::moment(d.data() + k_lo, k_hi - k_lo + 1,
                        x0 + dx * static_cast<double>(k_lo), dx, 1, 0.0) /
        wtotal;
    out.central = kernels::moment(d.data() + k_lo, k_hi - k_lo + 1,
                                  x0 + dx * static_cast<double>(k_lo), dx, 2, wmean) /
                  wtotal;
    return out;
}

} // namespace

CurvatureResult curvature(const Wavepacket& w, Convention conv) {
    WindowedVariance v;
    if (conv == Convention::conjugate_phase) {
        v = windowed_variance(native_density(w), w.grid().start, w.grid().step);
    } else {
        const Wavepacket hat = fourier(w);
        v = windowed_variance(native_density(hat), hat.grid().start, hat.grid().step);
    }
    CurvatureResult r;
    r.value = v.full;
    r.diverged = v.full > 1.10 * v.central;
    return r;
}

namespace ref {

cplx displaced_overlap_direct(const Wavepacket& w, double tau, Convention conv) {
    if (conv == Convention::conjugate_phase) {
        const auto d = native_density(w);
        return kernels::serial::phase_sum(d.data(), d.size(), w.grid().start, w.grid().step,
                                          tau);
    }
    // Band-limited shift: apply the linear phase in the conjugate domain.
    // Contracting there is algebraically identical to transforming back and
    // integrating against the original samples, for any grid offset.
    const Wavepacket hat = fourier(w);
    std::vector<cplx> shifted = hat.samples();
    const Grid& pg = hat.grid();
    for (std::size_t j = 0; j < shifted.size(); ++j)
        shifted[j] *= std::polar(1.0, -pg.coord(j) * tau);
    return kernels::serial::dot_conj(hat.samples().data(), shifted.data(), hat.size()) *
           pg.step;
}

} // namespace ref

} // namespace linopt
