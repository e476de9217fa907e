#include "theory.hpp"

#include <cmath>

#include "error.hpp"

namespace qspin {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw_invalid(std::string("theory: ") + name + " must be positive");
}

}  // namespace

std::uint64_t n_central(int L) {
    if (L < 2) throw_invalid("n_central: L must be at least 2");
    if (L % 2 != 0) throw_invalid("n_central: central band requires even L");
    if (L > 60) throw_invalid("n_central: L too large for exact evaluation");
    // C(L, L/2) by the multiplicative rule; exact in 64 bits for L <= 60.
    std::uint64_t c = 1;
    for (int i = 1; i <= L / 2; ++i) c = c * static_cast<std::uint64_t>(L - L / 2 + i) / i;
    return c;
}

double width_unperturbed(int L, double a, double omega) {
    require_positive(omega, "omega");
    return static_cast<double>(L) * L * (L - 1) * a * a / (8.0 * omega);
}

double width_interacting(int L, double a, double j) {
    if (L < 3) throw_invalid("width_interacting: L must be at least 3");
    return (L - 2) * j * a;
}

double crossover_j0(int L, double a, double omega) {
    require_positive(omega, "omega");
    return static_cast<double>(L) * L * a / (8.0 * omega);
}

OverlapReport overlap_jb(int L, double a, double omega) {
    require_positive(omega, "omega");
    require_positive(a, "a");
    if (L < 2) throw_invalid("overlap_jb: L must be at least 2");
    OverlapReport r;
    r.j_b = omega / (a * L);
    r.j_lower_bound = std::sqrt(L / 8.0);
    r.any_j_length = 2.0 * std::pow(omega / a, 2.0 / 3.0);
    r.overlaps_at_any_j = static_cast<double>(L) >= r.any_j_length;
    return r;
}

DelocBorder deloc_border(CouplingKind kind, int L, double a, double omega) {
    require_positive(omega, "omega");
    if (L < 2) throw_invalid("deloc_border: L must be at least 2");
    DelocBorder r;
    const double a2w = a * a / omega;
    switch (kind) {
        case CouplingKind::N:
            r.delta_e_f = a2w * (L - 1.5);
            r.m_f = 0.5 * L;
            break;
        case CouplingKind::A:
            r.delta_e_f = 0.5 * a2w * L * L;
            r.m_f = 0.25 * static_cast<double>(L) * L;
            break;
        case CouplingKind::NN:
            r.delta_e_f = 2.0 * a2w * (L - 2);
            r.m_f = L;
            break;
        case CouplingKind::Custom:
            throw_invalid("deloc_border: no closed form for custom coupling");
    }
    // The mean coupled spacing and the border itself are L-independent and
    // shared by every kind.
    r.d_f = 2.0 * a2w;
    r.j_cr = 4.0 * a2w;
    return r;
}

double chaos_border(int L, double a, double omega) {
    require_positive(omega, "omega");
    if (L < 2) throw_invalid("chaos_border: L must be at least 2");
    return 16.0 / L * std::sqrt(a * a * L * L + omega * omega);
}

double deloc_border_homogeneous(int L, double omega, double spread) {
    require_positive(omega, "omega");
    if (L < 2) throw_invalid("deloc_border_homogeneous: L must be at least 2");
    if (spread < 0.0) throw_invalid("deloc_border_homogeneous: negative spread");
    return spread * spread / (4.0 * omega * L);
}

GradientScalingReport quadratic_gradient_scaling(CouplingKind kind, int L, double b,
                                                 double omega) {
    require_positive(omega, "omega");
    if (L < 2) throw_invalid("quadratic_gradient_scaling: L must be at least 2");
    if (kind != CouplingKind::N && kind != CouplingKind::A)
        throw_invalid("quadratic_gradient_scaling: defined for N and A kinds");
    GradientScalingReport r;
    if (b == 0.0) return r;  // homogeneous limit, no scaling statement
    r.defined = true;
    r.delta_e_f_scale = b * b * static_cast<double>(L) * L * L / omega;
    r.jcr_exponent = kind == CouplingKind::N ? 2 : 1;
    return r;
}

BorderEstimates borders(const ModelParams& p) {
    const double a = p.profile == FieldProfile::ConstantGradient ? p.gradient_a : 1.0;
    BorderEstimates b;
    b.n_cb = p.L % 2 == 0 ? static_cast<double>(n_central(p.L)) : 0.0;
    b.width_j0 = width_unperturbed(p.L, a, p.omega);
    b.width_jdom = p.L >= 3 ? width_interacting(p.L, a, p.coupling.j) : 0.0;
    b.j0_crossover = crossover_j0(p.L, a, p.omega);
    b.jb_overlap = overlap_jb(p.L, a, p.omega).j_b;
    const CouplingKind kind =
        p.coupling.kind == CouplingKind::Custom ? CouplingKind::N : p.coupling.kind;
    const DelocBorder d = deloc_border(kind, p.L, a, p.omega);
    b.delta_e_f = d.delta_e_f;
    b.m_f = d.m_f;
    b.d_f = d.d_f;
    b.j_cr_deloc = d.j_cr;
    b.j_chaos = chaos_border(p.L, a, p.omega);
    b.j_cr_homogeneous = p.profile == FieldProfile::Homogeneous
                             ? deloc_border_homogeneous(p.L, p.omega, p.spread)
                             : 0.0;
    return b;
}

}  // namespace qspin
