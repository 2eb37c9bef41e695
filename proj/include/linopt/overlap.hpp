#pragma once

#include "linopt/wavepacket.hpp"

namespace linopt {

/// How a displacement tau acts on a packet:
///  - native_shift:    psi(x) -> psi(x - tau)
///  - conjugate_phase: psi(x) -> psi(x) * exp(-i x tau)  (a shift in the
///    conjugate variable, e.g. a time delay applied to a spectral packet)
enum class Convention { native_shift, conjugate_phase };

/// Overlap of a packet with its displaced copy:
///  - native_shift:    integral psi*(x) psi(x - tau) dx
///  - conjugate_phase: integral |psi(x)|^2 exp(-i x tau) dx
/// Magnitude <= 1, equal to 1 at tau = 0 for normalized packets.
/// Backed by a cached FFT autocorrelation table; the first call per packet
/// and convention pays one FFT.
cplx displaced_overlap(const Wavepacket& w, double tau, Convention conv);

struct CurvatureResult {
    double value = 0.0;
    bool diverged = false;
};

/// Variance of the displacement-conjugate variable: the curvature of
/// |displaced_overlap|^2 / 2 at tau = 0 (negated). For native_shift this is
/// the centered second moment of the conjugate-domain density, for
/// conjugate_phase the centered second moment of the native density.
/// Divergence (tail-dominated second moment) is flagged, not thrown.
CurvatureResult curvature(const Wavepacket& w, Convention conv);

namespace ref {

/// Serial reference for displaced_overlap. conjugate_phase is a plain
/// sincos sum; native_shift applies the linear spectral phase in the
/// conjugate domain, transforms back and integrates.
cplx displaced_overlap_direct(const Wavepacket& w, double tau, Convention conv);

} // namespace ref

} // namespace linopt
