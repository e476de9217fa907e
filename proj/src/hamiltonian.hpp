#pragma once

#include <array>
#include <complex>
#include <vector>

#include "matrix.hpp"
#include "model.hpp"

namespace qspin {

// Quasi-particle picture of the non-interacting chain. Each qubit sees the
// 2x2 Hamiltonian h_k = -delta_k I^z + Omega I^y with eigenvalues
// -+ epsilon_k, epsilon_k = sqrt(delta_k^2 + Omega^2)/2. The per-qubit
// rotation U_k diagonalizes h_k and turns I^z into -b_k I^z + a_k I^y.
struct MeanFieldData {
    std::vector<double> epsilons;
    std::vector<double> a_coeffs;  //  Omega / sqrt(delta_k^2 + Omega^2)
    std::vector<double> b_coeffs;  // -delta_k / sqrt(delta_k^2 + Omega^2)
    // Row-major 2x2 blocks {u00, u01, u10, u11}; column 0 pairs with
    // -epsilon_k. Phase fixing: the largest-magnitude component of each
    // column is made real positive, ties resolved toward the column's own
    // index.
    std::vector<std::array<std::complex<double>, 4>> blocks;

    int qubits() const { return static_cast<int>(epsilons.size()); }
    // Dense rotation U = U_{L-1} (x) ... (x) U_0, bit k of the basis index
    // addressing qubit k.
    ComplexMatrix rotation() const;
};

// Full Hamiltonian in the z-representation (basis states = L-bit integers,
// bit value 0 meaning I^z = +1/2):
//   H = sum_k (-delta_k I^z_k + Omega I^y_k) - 2 sum_{k<n} J_{k,n} I^z_k I^z_n
ComplexMatrix build_z_hamiltonian(const ModelParams& p);

MeanFieldData mean_field(const ModelParams& p);

// D0[s] = sum_k (bit_k(s) ? +epsilon_k : -epsilon_k); diagonal of the
// rotated Hamiltonian at J = 0.
std::vector<double> unperturbed_diagonal(const MeanFieldData& mf);

// The rotated Ising interaction split by how many quasi-particles a matrix
// element flips: v_diag none, v_band two, v_off one. For every bond,
//   U^dag (-2 J_{k,n} I^z_k I^z_n) U =
//     -2 J_{k,n} b_k b_n I^z I^z - 2 J_{k,n} a_k a_n I^y I^y
//     + 2 J_{k,n} (a_k b_n I^y_k I^z_n + b_k a_n I^z_k I^y_n)
struct InteractionTerms {
    ComplexMatrix v_diag, v_band, v_off;
};
InteractionTerms build_interaction_terms(const ModelParams& p);

// D0 + v_diag + v_band + v_off assembled directly in the rotated basis, equal
// to U^dag H U up to rounding but cheaper and exact at J = 0.
ComplexMatrix build_mean_field_hamiltonian(const ModelParams& p);

// Quasi-integrable reduction keeping only the band-changing interaction:
//   H_a = sum_k gamma_k I^z_k - sum_k 2 J_{k,k+1} I^y_k I^y_{k+1},
// gamma_k = sqrt(delta_k^2 + Omega^2). Requires nearest-neighbour coupling.
ComplexMatrix build_quasi_integrable(const ModelParams& p);

// In-place one-qubit-at-a-time basis rotations (no dense U).
void rotate_columns(const MeanFieldData& mf, ComplexMatrix& m);       // M <- M U
void rotate_rows_adjoint(const MeanFieldData& mf, ComplexMatrix& m);  // M <- U^dag M
ComplexMatrix to_mean_field_basis(const MeanFieldData& mf, const ComplexMatrix& h);

}  // namespace qspin
