#pragma once

#include "linopt/wavepacket.hpp"

namespace linopt {

/// Unitary discrete Fourier transform onto the centered conjugate grid
/// (step 2*pi/(N*dx)), forward kernel exp(-i p x) / sqrt(2 pi). Flips the
/// domain label. Parseval holds to rounding; fourier_inverse undoes it.
Wavepacket fourier(const Wavepacket& w);
Wavepacket fourier_inverse(const Wavepacket& w);

namespace detail {

/// In-place complex FFT (FFTW, ESTIMATE plans, internally serialized
/// planning). `inverse` applies the unnormalized backward transform.
void fft(std::vector<cplx>& data, bool inverse);

/// Real-to-complex FFT of `data`, returning the n/2+1 nonnegative-frequency
/// coefficients.
std::vector<cplx> rfft(const std::vector<double>& data);

} // namespace detail

} // namespace linopt
