#pragma once

#include "linopt/grid.hpp"

#include <mutex>
#include <optional>
#include <vector>

namespace linopt::detail {

/// Autocorrelation values O(tau_m) on a fine uniform tau grid, computed by
/// one (zero-padded) FFT of a real density. The density mean is factored
/// out as a linear phase so the stored table is smooth enough for cubic
/// interpolation at ~1e-12 accuracy.
struct AutocorrTable {
    double dtau = 0.0;
    double tau_max = 0.0;
    double mean = 0.0;
    std::vector<cplx> vals; // S(tau_m) = O(tau_m) * exp(+i tau_m * mean), tau_m = m*dtau

    bool covers(double tau) const;
    cplx eval(double tau) const;
};

/// Build from a real density on a uniform grid (density already includes
/// the grid measure, i.e. sums to the total mass).
AutocorrTable build_autocorr_table(const std::vector<double>& density, double x0,
                                   double dx);

struct OverlapCaches {
    std::once_flag once[2];
    std::optional<AutocorrTable> table[2]; // indexed by Convention
};

} // namespace linopt::detail
