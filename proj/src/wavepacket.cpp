#include "linopt/wavepacket.hpp"

#include "linopt/kernels.hpp"
#include "overlap_caches.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linopt {

namespace {

std::vector<double> density_with_measure(const Wavepacket& w) {
    const auto& s = w.samples();
    std::vector<double> d(s.size());
    const double dx = w.grid().step;
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(s.size()); ++k)
        d[static_cast<std::size_t>(k)] = std::norm(s[static_cast<std::size_t>(k)]) * dx;
    return d;
}

} // namespace

Wavepacket::Wavepacket(Grid grid, std::vector<cplx> samples, Domain domain)
    : grid_(grid), domain_(domain),
      samples_(std::make_shared<const std::vector<cplx>>(std::move(samples))),
      caches_(std::make_shared<detail::OverlapCaches>()) {
    if (!(grid_.step > 0.0)) throw std::invalid_argument("Wavepacket: grid step must be positive");
    if (samples_->size() < 16) throw std::invalid_argument("Wavepacket: need at least 16 samples");
    if (grid_.count != samples_->size())
        throw std::invalid_argument("Wavepacket: grid count does not match sample count");
    for (const cplx& v : *samples_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("Wavepacket: non-finite sample");
}

double Wavepacket::norm2() const {
    return kernels::norm2(samples_->data(), samples_->size()) * grid_.step;
}

bool Wavepacket::is_normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

double Wavepacket::edge_ratio() const {
    const auto& s = *samples_;
    double peak = 0.0;
    for (const cplx& v : s) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    const std::size_t n = s.size();
    double edge = 0.0;
    for (std::size_t k : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
        edge = std::max(edge, std::abs(s[k]));
    return edge / peak;
}

Wavepacket normalize(const Wavepacket& w) {
    const double n2 = w.norm2();
    if (!(n2 > 1e-300)) throw std::invalid_argument("normalize: zero-norm packet");
    const double inv = 1.0 / std::sqrt(n2);
    std::vector<cplx> s = w.samples();
    for (cplx& v : s) v *= inv;
    return Wavepacket(w.grid(), std::move(s), w.domain());
}

double moment(const Wavepacket& w, int order, bool centered) {
    if (order != 1 && order != 2) throw std::invalid_argument("moment: order must be 1 or 2");
    const auto d = density_with_measure(w);
    const Grid& g = w.grid();
    double center = 0.0;
    if (centered) center = kernels::moment(d.data(), d.size(), g.start, g.step, 1, 0.0);
    return kernels::moment(d.data(), d.size(), g.start, g.step, order, center);
}

Wavepacket scaled(const Wavepacket& w, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
    std::vector<cplx> v = w.samples();
    const double inv = 1.0 / std::sqrt(s);
    for (cplx& a : v) a *= inv;
    return Wavepacket({w.grid().start * s, w.grid().step * s, w.grid().count}, std::move(v),
                      w.domain());
}

Wavepacket recentered(const Wavepacket& w) {
    const double mean = moment(w, 1, false) / w.norm2();
    return Wavepacket({w.grid().start - mean, w.grid().step, w.grid().count}, w.samples(),
                      w.domain());
}

Wavepacket project_to_variance(const Wavepacket& w, double variance) {
    if (!(variance > 0.0)) throw std::invalid_argument("project_to_variance: variance must be positive");
    const Wavepacket c = recentered(normalize(w));
    const double v = moment(c, 2, true);
    if (!(v > 0.0)) throw std::runtime_error("project_to_variance: degenerate packet");
    return scaled(c, std::sqrt(variance / v));
}

void require_edge_containment(const Wavepacket& w, const std::string& what) {
    const double r = w.edge_ratio();
    if (!(r < 1e-6))
        throw std::invalid_argument(what + ": grid too narrow, edge amplitude ratio " +
                                    std::to_string(r));
}

void save_csv(const Wavepacket& w, std::ostream& out) {
    out << "x,re,im\n";
    char buf[128];
    const auto& s = w.samples();
    for (std::size_t k = 0; k < s.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", w.grid().coord(k), s[k].real(),
                      s[k].imag());
        out << buf;
    }
}

void save_csv(const Wavepacket& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_csv: cannot open " + path);
    save_csv(w, out);
}

Wavepacket load_csv(std::istream& in, Domain domain) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("load_csv: empty input");
    if (line == "x,re,im\r") line.pop_back();
    if (line != "x,re,im") throw std::invalid_argument("load_csv: expected header 'x,re,im'");
    std::vector<double> xs;
    std::vector<cplx> vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x = 0, re = 0, im = 0;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &x, &re, &im) != 3)
            throw std::invalid_argument("load_csv: malformed row '" + line + "'");
        xs.push_back(x);
        vs.emplace_back(re, im);
    }
    if (xs.size() < 16) throw std::invalid_argument("load_csv: need at least 16 rows");
    const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    if (!(step > 0.0)) throw std::invalid_argument("load_csv: x column not increasing");
    const double span = xs.back() - xs.front();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double expect = xs.front() + step * static_cast<double>(k);
        if (std::abs(xs[k] - expect) > 1e-9 * span)
            throw std::invalid_argument("load_csv: x grid not uniform to 1e-9 relative");
    }
    return Wavepacket({xs.front(), step, xs.size()}, std::move(vs), domain);
}

Wavepacket load_csv_file(const std::string& path, Domain domain) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_csv: cannot open " + path);
    return load_csv(in, domain);
}

} // namespace linopt
