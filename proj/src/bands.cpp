#include "bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "hamiltonian.hpp"
#include "parallel.hpp"

namespace qspin {

std::vector<Band> identify_bands(const std::vector<double>& eigenvalues, double gap_threshold) {
    if (eigenvalues.empty()) throw_invalid("identify_bands: empty spectrum");
    if (!(gap_threshold > 0.0)) throw_invalid("identify_bands: gap threshold must be positive");
    if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end()))
        throw_invalid("identify_bands: eigenvalues must be ascending");
    std::vector<Band> bands;
    int lo = 0;
    const int n = static_cast<int>(eigenvalues.size());
    for (int i = 1; i <= n; ++i) {
        if (i == n || eigenvalues[i] - eigenvalues[i - 1] > gap_threshold) {
            bands.push_back({lo, i - 1, eigenvalues[lo], eigenvalues[i - 1]});
            lo = i;
        }
    }
    return bands;
}

std::vector<Band> identify_bands(const Spectrum& s, const ModelParams& p) {
    return identify_bands(s.eigenvalues, 0.5 * p.omega);
}

Band central_band(const std::vector<Band>& bands, const std::vector<double>& eigenvalues) {
    if (bands.empty()) throw_invalid("central_band: no bands");
    if (eigenvalues.empty()) throw_invalid("central_band: empty spectrum");
    const double midpoint = 0.5 * (eigenvalues.front() + eigenvalues.back());
    std::size_t best = 0;
    double best_dist = std::abs(bands[0].center() - midpoint);
    for (std::size_t i = 1; i < bands.size(); ++i) {
        const double d = std::abs(bands[i].center() - midpoint);
        if (d < best_dist) {
            best = i;
            best_dist = d;
        }
    }
    return bands[best];
}

std::vector<double> normalized_spacings(const std::vector<double>& eigenvalues, const Band& band) {
    if (band.lo < 0 || band.hi >= static_cast<int>(eigenvalues.size()) || band.lo > band.hi)
        throw_invalid("normalized_spacings: band out of range");
    if (band.population() < 2)
        throw_invalid("normalized_spacings: band has fewer than two levels");
    std::vector<double> s;
    s.reserve(band.population() - 1);
    double mean = 0.0;
    for (int i = band.lo + 1; i <= band.hi; ++i) {
        const double d = eigenvalues[i] - eigenvalues[i - 1];
        s.push_back(d);
        mean += d;
    }
    mean /= static_cast<double>(s.size());
    if (mean <= 0.0)
        throw_numeric("normalized_spacings: zero mean spacing (fully degenerate band)");
    for (double& v : s) v /= mean;
    return s;
}

SpacingHistogram histogram_from_spacings(const std::vector<double>& samples, int bins,
                                         double s_max) {
    if (bins < 1) throw_invalid("histogram: bins must be positive");
    if (!(s_max > 0.0)) throw_invalid("histogram: s_max must be positive");
    if (samples.empty()) throw_invalid("histogram: no spacings");
    SpacingHistogram h;
    h.bin_edges.resize(bins + 1);
    const double bw = s_max / bins;
    for (int b = 0; b <= bins; ++b) h.bin_edges[b] = bw * b;
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    double mean = 0.0;
    for (double s : samples) {
        if (s < 0.0) throw_invalid("histogram: negative spacing");
        mean += s;
        int b = static_cast<int>(s / bw);
        if (b >= bins) {
            b = bins - 1;
            ++h.overflow;
        }
        ++counts[b];
    }
    h.mean_spacing = mean / static_cast<double>(samples.size());
    h.sample_count = samples.size();
    h.densities.resize(bins);
    const double norm = 1.0 / (static_cast<double>(samples.size()) * bw);
    for (int b = 0; b < bins; ++b) h.densities[b] = static_cast<double>(counts[b]) * norm;
    return h;
}

SpacingHistogram spacing_distribution(const Spectrum& spec, const Band& band, int bins,
                                      double s_max) {
    const auto raw_mean = [&] {
        double mean = 0.0;
        for (int i = band.lo + 1; i <= band.hi; ++i)
            mean += spec.eigenvalues[i] - spec.eigenvalues[i - 1];
        return mean / std::max(1, band.population() - 1);
    };
    auto h = histogram_from_spacings(normalized_spacings(spec.eigenvalues, band), bins, s_max);
    h.mean_spacing = raw_mean();
    return h;
}

double reference_density(ReferenceKind kind, double s) {
    if (s < 0.0) return 0.0;
    switch (kind) {
        case ReferenceKind::Poisson:
            return std::exp(-s);
        case ReferenceKind::WignerDyson:
            return 0.5 * std::numbers::pi * s * std::exp(-0.25 * std::numbers::pi * s * s);
    }
    return 0.0;
}

DistanceReport distribution_distance(const SpacingHistogram& h, ReferenceKind kind) {
    DistanceReport r;
    const int bins = static_cast<int>(h.densities.size());
    for (int b = 0; b < bins; ++b) {
        const double lo = h.bin_edges[b], hi = h.bin_edges[b + 1];
        const double bw = hi - lo;
        r.l1 += std::abs(h.densities[b] - reference_density(kind, 0.5 * (lo + hi))) * bw;
        if (hi <= 0.1)
            r.small_s_mass += h.densities[b] * bw;
        else if (lo < 0.1)
            r.small_s_mass += h.densities[b] * (0.1 - lo);
    }
    return r;
}

const char* to_string(Axis a) {
    switch (a) {
        case Axis::J: return "J";
        case Axis::Omega: return "omega";
        case Axis::L: return "L";
        case Axis::Delta: return "delta";
    }
    return "?";
}

std::optional<Axis> axis_from_string(const std::string& s) {
    if (s == "J" || s == "j") return Axis::J;
    if (s == "omega") return Axis::Omega;
    if (s == "L" || s == "l") return Axis::L;
    if (s == "delta") return Axis::Delta;
    return std::nullopt;
}

ModelParams with_axis(const ModelParams& base, Axis axis, double value) {
    ModelParams p = base;
    switch (axis) {
        case Axis::J:
            p.coupling.j = value;
            break;
        case Axis::Omega:
            p.omega = value;
            break;
        case Axis::L: {
            const double rounded = std::nearbyint(value);
            if (!(std::abs(value - rounded) < 1e-9))
                throw_invalid("axis L requires integer values");
            if (p.coupling.kind == CouplingKind::Custom)
                throw_invalid("axis L conflicts with a custom coupling matrix");
            p.L = static_cast<int>(rounded);
            break;
        }
        case Axis::Delta:
            if (p.profile != FieldProfile::Homogeneous)
                throw_invalid("axis delta requires the homogeneous profile");
            p.spread = value;
            break;
    }
    return make_params(std::move(p));
}

std::vector<WidthScanRow> central_band_width_scan(const ModelParams& base, Axis axis,
                                                  const std::vector<double>& values,
                                                  int workers) {
    if (values.empty()) throw_invalid("width scan: empty value list");
    std::vector<WidthScanRow> rows(values.size());
    parallel_for(values.size(), workers, [&](std::size_t i) {
        WidthScanRow row;
        row.axis_value = values[i];
        try {
            const ModelParams p = with_axis(base, axis, values[i]);
            const auto spec = eigh(build_z_hamiltonian(p), {.vectors = false});
            const auto bands = identify_bands(spec, p);
            row.central = central_band(bands, spec.eigenvalues);
            for (std::size_t b = 0; b < bands.size(); ++b) {
                if (bands[b].lo != row.central.lo) continue;
                if (b > 0) row.below = bands[b - 1];
                if (b + 1 < bands.size()) row.above = bands[b + 1];
                break;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace qspin
