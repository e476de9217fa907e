#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigensolve.hpp"
#include "model.hpp"

namespace qspin {

struct Band {
    int lo = 0, hi = 0;  // inclusive eigenvalue index range
    double e_min = 0.0, e_max = 0.0;

    double width() const { return e_max - e_min; }
    double center() const { return 0.5 * (e_min + e_max); }
    int population() const { return hi - lo + 1; }
};

// Clusters an ascending spectrum: a new band starts wherever the gap between
// consecutive levels exceeds gap_threshold. The model convention is
// gap_threshold = Omega/2, well below the inter-band distance Omega and well
// above intra-band spacings while bands are separated.
std::vector<Band> identify_bands(const std::vector<double>& eigenvalues, double gap_threshold);
std::vector<Band> identify_bands(const Spectrum& s, const ModelParams& p);

// The band whose center lies closest to the midpoint of the whole spectrum.
Band central_band(const std::vector<Band>& bands, const std::vector<double>& eigenvalues);

struct SpacingHistogram {
    std::vector<double> bin_edges;  // bins + 1 uniform edges on [0, s_max]
    std::vector<double> densities;  // integrates to 1 over [0, s_max]
    double mean_spacing = 0.0;      // raw mean used for unfolding (1 for pooled input)
    std::size_t sample_count = 0;
    std::size_t overflow = 0;       // spacings >= s_max, clipped into the last bin
};

// Consecutive in-band spacings divided by their arithmetic mean (constant
// mean-spacing unfolding). Degenerate input with zero mean spacing has no
// normalized distribution and raises Error(2).
std::vector<double> normalized_spacings(const std::vector<double>& eigenvalues, const Band& band);

// Histogram of already-normalized spacings.
SpacingHistogram histogram_from_spacings(const std::vector<double>& samples, int bins,
                                         double s_max);

SpacingHistogram spacing_distribution(const Spectrum& spec, const Band& band, int bins = 40,
                                      double s_max = 4.0);

enum class ReferenceKind { Poisson, WignerDyson };

// Poisson exp(-s); Wigner-Dyson surmise (pi s / 2) exp(-pi s^2 / 4).
double reference_density(ReferenceKind kind, double s);

struct DistanceReport {
    double l1 = 0.0;            // sum_b |density_b - ref(mid_b)| * bin_width
    double small_s_mass = 0.0;  // histogram mass below s = 0.1
};
DistanceReport distribution_distance(const SpacingHistogram& h, ReferenceKind kind);

enum class Axis { J, Omega, L, Delta };

const char* to_string(Axis a);
std::optional<Axis> axis_from_string(const std::string& s);

// Copy of base with the axis value applied and detunings re-materialized.
ModelParams with_axis(const ModelParams& base, Axis axis, double value);

struct WidthScanRow {
    double axis_value = 0.0;
    Band central;
    std::optional<Band> below, above;  // adjacent bands when separated
    std::string error;                 // non-empty when the point failed
};

// Central-band width and band-edge curves along one axis. Solver failures are
// recorded per point and do not abort the scan.
std::vector<WidthScanRow> central_band_width_scan(const ModelParams& base, Axis axis,
                                                  const std::vector<double>& values,
                                                  int workers = 0);

}  // namespace qspin
