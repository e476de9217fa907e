#pragma once

#include <cstdint>

#include "model.hpp"

namespace qspin {

// Closed-form borders and widths for overlaying on numerical scans. Pure
// functions; order-unity prefactors are used exactly as printed in the
// derivations they come from, with no finite-size refitting.

// Central-band population C(L, L/2). Even L only.
std::uint64_t n_central(int L);

// Unperturbed central-band width L^2 (L-1) a^2 / (8 Omega).
double width_unperturbed(int L, double a, double omega);

// Interaction-dominated width (L-2) J a, valid for Omega >> J.
double width_interacting(int L, double a, double j);

// J where the interaction-dominated width takes over: L^2 a / (8 Omega).
// Equating the two widths exactly gives J* = L^2 (L-1) a / (8 Omega (L-2));
// the printed form drops the (L-1)/(L-2) factor.
double crossover_j0(int L, double a, double omega);

struct OverlapReport {
    double j_b = 0.0;            // band-overlap border Omega / (a L)
    double j_lower_bound = 0.0;  // companion compatibility bound sqrt(L/8),
                                 // dimensionless as printed (a = 1 implied)
    double any_j_length = 0.0;   // chains with L >= 2 (Omega/a)^(2/3) overlap at any J
    bool overlaps_at_any_j = false;
};
OverlapReport overlap_jb(int L, double a, double omega);

struct DelocBorder {
    double delta_e_f = 0.0;  // energy span of directly coupled central-band states
    double m_f = 0.0;        // coupled states per row
    double d_f = 0.0;        // mean coupled-level spacing 2 a^2 / Omega
    double j_cr = 0.0;       // delocalization border 4 a^2 / Omega, kind-independent
};
// N:  delta_e_f = (a^2/Omega)(L - 3/2),  m_f = L/2
// A:  delta_e_f = a^2 L^2 / (2 Omega),   m_f = L^2/4
// NN: delta_e_f = 2 a^2 (L - 2)/Omega,   m_f = L   (distance-1 and -2 flips)
DelocBorder deloc_border(CouplingKind kind, int L, double a, double omega);

// Chaos border for overlapped bands: (16/L) sqrt(a^2 L^2 + Omega^2).
double chaos_border(int L, double a, double omega);

// Homogeneous random field: J_cr = Delta^2 / (4 Omega L); zero border at
// Delta = 0 (any interaction delocalizes the degenerate band).
double deloc_border_homogeneous(int L, double omega, double spread);

struct GradientScalingReport {
    bool defined = false;          // false at b = 0 (homogeneous limit)
    double delta_e_f_scale = 0.0;  // proportionality b^2 L^3 / Omega, no prefactor
    int jcr_exponent = 0;          // J_cr ~ L^2 for N, ~ L for A
};
GradientScalingReport quadratic_gradient_scaling(CouplingKind kind, int L, double b,
                                                 double omega);

struct BorderEstimates {
    double n_cb = 0.0;
    double width_j0 = 0.0;    // unperturbed width
    double width_jdom = 0.0;  // interaction-dominated width at the params' J
    double j0_crossover = 0.0;
    double jb_overlap = 0.0;
    double delta_e_f = 0.0;
    double m_f = 0.0;
    double d_f = 0.0;
    double j_cr_deloc = 0.0;
    double j_chaos = 0.0;
    double j_cr_homogeneous = 0.0;  // zero unless profile is Homogeneous
};
// Everything above evaluated for one parameter set. The gradient scale a is
// taken from the profile (1 implied for non-gradient profiles). Odd L
// reports n_cb = 0.
BorderEstimates borders(const ModelParams& p);

}  // namespace qspin
