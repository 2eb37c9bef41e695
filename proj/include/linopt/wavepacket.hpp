#pragma once

#include "linopt/grid.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace linopt {

namespace detail {
struct OverlapCaches; // lazily built autocorrelation tables, see overlap.cpp
}

/// Which physical variable the grid represents. Metadata only; all
/// operations act on whatever the native variable is.
enum class Domain { native_x, frequency_omega };

/// Immutable sampled wave-function on a uniform grid. Copies share the
/// sample storage; every "mutation" builds a new value.
class Wavepacket {
  public:
    Wavepacket(Grid grid, std::vector<cplx> samples, Domain domain);

    const Grid& grid() const { return grid_; }
    Domain domain() const { return domain_; }
    const std::vector<cplx>& samples() const { return *samples_; }
    std::size_t size() const { return samples_->size(); }

    /// Integral of |psi|^2 under the grid measure.
    double norm2() const;
    bool is_normalized(double tol = 1e-12) const;

    /// max |psi| over the outermost 2 samples each side, relative to max |psi|.
    double edge_ratio() const;

    bool shares_samples(const Wavepacket& other) const {
        return samples_ == other.samples_;
    }

    detail::OverlapCaches& caches() const { return *caches_; }

  private:
    Grid grid_;
    Domain domain_;
    std::shared_ptr<const std::vector<cplx>> samples_;
    std::shared_ptr<detail::OverlapCaches> caches_;
};

/// Rescale to unit L2 norm. Throws on (near-)zero input.
Wavepacket normalize(const Wavepacket& w);

/// Integral of x^order |psi(x)|^2 dx; the centered variant subtracts the
/// mean before raising to `order`. Expects a normalized packet.
double moment(const Wavepacket& w, int order, bool centered);

/// Exact coordinate dilation x -> s*x (grid relabeling, no resampling).
Wavepacket scaled(const Wavepacket& w, double s);

/// Exact grid relabeling that moves the density mean to x = 0.
Wavepacket recentered(const Wavepacket& w);

/// Center the packet and dilate so the centered variance equals `variance`.
Wavepacket project_to_variance(const Wavepacket& w, double variance);

/// The grid must contain the packet: edge amplitudes below 1e-6 of the peak.
void require_edge_containment(const Wavepacket& w, const std::string& what);

// CSV: header "x,re,im", one row per grid point. The grid is inferred from
// the x column on load and must be uniform to 1e-9 relative.
void save_csv(const Wavepacket& w, std::ostream& out);
void save_csv(const Wavepacket& w, const std::string& path);
Wavepacket load_csv(std::istream& in, Domain domain = Domain::native_x);
Wavepacket load_csv_file(const std::string& path, Domain domain = Domain::native_x);

} // namespace linopt
