#include "metrics.hpp"

#include <bit>
#include <cmath>

#include "error.hpp"

namespace qspin {

double ipr(std::span<const std::complex<double>> state) {
    if (state.empty()) throw_invalid("ipr: empty state");
    double norm2 = 0.0, p4 = 0.0;
    for (const auto& z : state) {
        const double w = std::norm(z);
        norm2 += w;
        p4 += w * w;
    }
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw_invalid("ipr: state norm deviates from 1 by more than 1e-9");
    return 1.0 / p4;
}

double state_width(std::span<const std::complex<double>> state) {
    if (state.empty()) throw_invalid("state_width: empty state");
    double norm2 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t n = 0; n < state.size(); ++n) {
        const double w = std::norm(state[n]);
        norm2 += w;
        m1 += static_cast<double>(n) * w;
        m2 += static_cast<double>(n) * static_cast<double>(n) * w;
    }
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw_invalid("state_width: state norm deviates from 1 by more than 1e-9");
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

BandMetricsReport band_metrics(const Spectrum& spec, const Band& band, Representation rep) {
    if (!spec.has_vectors()) throw_invalid("band_metrics: spectrum has no eigenvectors");
    if (band.lo < 0 || band.hi >= spec.dim() || band.lo > band.hi)
        throw_invalid("band_metrics: band out of range");
    const int n = spec.dim();
    BandMetricsReport r;
    r.representation = rep;
    r.states.reserve(band.population());
    std::vector<std::complex<double>> col(static_cast<std::size_t>(n));
    for (int j = band.lo; j <= band.hi; ++j) {
        for (int i = 0; i < n; ++i) col[i] = spec.eigenvectors.at(i, j);
        StateMetrics m;
        m.energy = spec.eigenvalues[j];
        m.npc = ipr(col);
        m.sigma = state_width(col);
        r.mean_npc += m.npc;
        r.mean_sigma += m.sigma;
        r.states.push_back(m);
    }
    r.mean_npc /= static_cast<double>(r.states.size());
    r.mean_sigma /= static_cast<double>(r.states.size());
    return r;
}

ComplexMatrix to_mean_field_vectors(const MeanFieldData& mf, const ComplexMatrix& vectors) {
    ComplexMatrix out = vectors;
    rotate_rows_adjoint(mf, out);
    return out;
}

std::vector<double> npc_profile(const Spectrum& spec) {
    if (!spec.has_vectors()) throw_invalid("npc_profile: spectrum has no eigenvectors");
    const int n = spec.dim();
    std::vector<double> out(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> col(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[i] = spec.eigenvectors.at(i, j);
        out[j] = ipr(col);
    }
    return out;
}

CensusReport census_from_matrix(const ComplexMatrix& h_mf, const std::vector<double>& d0,
                                int L, double threshold) {
    if (L % 2 != 0) throw_invalid("coupling census: central block requires even L");
    if (!(threshold >= 0.0)) throw_invalid("coupling census: negative threshold");
    const int N = 1 << L;
    if (h_mf.dim() != N || d0.size() != static_cast<std::size_t>(N))
        throw_invalid("coupling census: dimension mismatch");
    const int half = L / 2;

    CensusReport r;
    double max_gap = 0.0;
    std::size_t total_partners = 0;
    for (int s = 0; s < N; ++s) {
        if (std::popcount(static_cast<unsigned>(s)) != half) continue;
        ++r.band_rows;
        for (int t = 0; t < N; ++t) {
            if (t == s || std::popcount(static_cast<unsigned>(t)) != half) continue;
            if (std::abs(h_mf.at(t, s)) > threshold) {
                ++total_partners;
                max_gap = std::max(max_gap, std::abs(d0[t] - d0[s]));
            }
        }
    }
    if (r.band_rows == 0) throw_invalid("coupling census: empty central block");
    r.m_f_mean = static_cast<double>(total_partners) / static_cast<double>(r.band_rows);
    r.delta_e_f = max_gap;
    r.d_f = r.m_f_mean > 0.0 ? r.delta_e_f / r.m_f_mean : 0.0;
    return r;
}

CensusReport coupling_census(const ModelParams& p, double threshold) {
    return census_from_matrix(build_mean_field_hamiltonian(p),
                              unperturbed_diagonal(mean_field(p)), p.L, threshold);
}

}  // namespace qspin
