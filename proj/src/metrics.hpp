#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bands.hpp"
#include "eigensolve.hpp"
#include "hamiltonian.hpp"
#include "model.hpp"

namespace qspin {

// Number of principal components [sum_n |psi_n|^4]^{-1}. 1 for a basis
// state, N for a flat superposition. Input must be normalized within 1e-9.
double ipr(std::span<const std::complex<double>> state);

// Index-space width sigma = sqrt(<n^2> - <n>^2) with 0-based component
// index n weighted by |psi_n|^2.
double state_width(std::span<const std::complex<double>> state);

// Basis the eigenvector components refer to. Metrics are basis-dependent;
// reports carry the tag so downstream rows stay unambiguous.
enum class Representation { Z, MeanField };

struct StateMetrics {
    double energy = 0.0;
    double npc = 0.0;
    double sigma = 0.0;
};

struct BandMetricsReport {
    std::vector<StateMetrics> states;  // band states in energy order
    double mean_npc = 0.0;
    double mean_sigma = 0.0;
    Representation representation = Representation::MeanField;
};

// Per-state metrics over one band. The spectrum's eigenvectors must already
// be expressed in the representation named by rep: diagonalize
// build_z_hamiltonian for Z, build_mean_field_hamiltonian for MeanField, or
// rotate z-vectors with to_mean_field_vectors.
BandMetricsReport band_metrics(const Spectrum& spec, const Band& band, Representation rep);

// U^dag * vectors, one qubit at a time.
ComplexMatrix to_mean_field_vectors(const MeanFieldData& mf, const ComplexMatrix& vectors);

// N_pc for every eigenstate in energy order.
std::vector<double> npc_profile(const Spectrum& spec);

struct CensusReport {
    double m_f_mean = 0.0;   // coupled in-band states per central-band row
    double delta_e_f = 0.0;  // max |D0_i - D0_j| over counted pairs
    double d_f = 0.0;        // delta_e_f / m_f_mean
    std::size_t band_rows = 0;
};

// Census of a rotated Hamiltonian's off-diagonal inside the central block:
// rows s with popcount(s) = L/2, partners t in the same block with
// |H_{t,s}| > threshold, energies from the unperturbed diagonal d0. Even L
// only.
CensusReport census_from_matrix(const ComplexMatrix& h_mf, const std::vector<double>& d0,
                                int L, double threshold);

// Convenience wrapper building the mean-field Hamiltonian internally.
CensusReport coupling_census(const ModelParams& p, double threshold = 1e-6);

}  // namespace qspin
