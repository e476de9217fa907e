#include <cmath>

#include "doctest.h"

#include "theory.hpp"
#include "test_util.hpp"

using namespace qspin;
using test_util::code_of;
using test_util::gradient_params;

TEST_SUITE_BEGIN("theory");

TEST_CASE("central multiplet sizes are binomial coefficients") {
    CHECK(n_central(2) == 2.0);
    CHECK(n_central(8) == 70.0);
    CHECK(n_central(10) == 252.0);
    CHECK(n_central(12) == 924.0);
    CHECK(code_of([] { n_central(7); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { n_central(62); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("width laws plug in") {
    // L^2 (L-1) a^2 / (8 Omega)
    CHECK(width_unperturbed(8, 1.0, 100.0) == doctest::Approx(0.56).epsilon(1e-12));
    CHECK(width_unperturbed(10, 1.0, 100.0) == doctest::Approx(1.125).epsilon(1e-12));
    // (L-2) J a
    CHECK(width_interacting(8, 1.0, 2.0) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(code_of([] { width_interacting(2, 1.0, 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("width crossover J0 is consistent with both width laws") {
    for (int L : {6, 8, 10, 12}) {
        const double a = 1.0, omega = 100.0;
        // Equating the two widths exactly gives J* with an (L-1)/(L-2) factor
        // that the quoted L^2 a / (8 Omega) form drops.
        const double j_star = L * L * (L - 1) * a / (8.0 * omega * (L - 2));
        CHECK(width_interacting(L, a, j_star) ==
              doctest::Approx(width_unperturbed(L, a, omega)).epsilon(1e-12));
        CHECK(crossover_j0(L, a, omega) ==
              doctest::Approx(j_star * (L - 2) / (L - 1)).epsilon(1e-12));
    }
    CHECK(crossover_j0(8, 1.0, 100.0) == doctest::Approx(0.08).epsilon(1e-12));
}

TEST_CASE("band overlap border") {
    const OverlapReport r = overlap_jb(8, 1.0, 100.0);
    CHECK(r.j_b == doctest::Approx(12.5).epsilon(1e-12));
    CHECK(r.j_lower_bound == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.any_j_length == doctest::Approx(2.0 * std::pow(100.0, 2.0 / 3.0)).epsilon(1e-12));
    CHECK(!r.overlaps_at_any_j);

    // Short gradients relative to Omega/a keep bands separated; a chain at
    // least 2 (Omega/a)^(2/3) long overlaps at any interaction strength.
    const OverlapReport tight = overlap_jb(4, 1.0, 1.0);
    CHECK(tight.any_j_length == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(tight.overlaps_at_any_j);
}

TEST_CASE("delocalization borders per coupling kind") {
    const double a = 1.0, omega = 100.0;
    const DelocBorder n = deloc_border(CouplingKind::N, 8, a, omega);
    CHECK(n.delta_e_f == doctest::Approx(0.065).epsilon(1e-12));
    CHECK(n.m_f == doctest::Approx(4.0).epsilon(1e-12));

    const DelocBorder all = deloc_border(CouplingKind::A, 8, a, omega);
    CHECK(all.delta_e_f == doctest::Approx(0.32).epsilon(1e-12));
    CHECK(all.m_f == doctest::Approx(16.0).epsilon(1e-12));

    const DelocBorder nn = deloc_border(CouplingKind::NN, 8, a, omega);
    CHECK(nn.delta_e_f == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(nn.m_f == doctest::Approx(8.0).epsilon(1e-12));

    // d_f and J_cr do not depend on the coupling kind.
    for (const DelocBorder* b : {&n, &all, &nn}) {
        CHECK(b->d_f == doctest::Approx(0.02).epsilon(1e-12));
        CHECK(b->j_cr == doctest::Approx(0.04).epsilon(1e-12));
    }

    // The quoted spans and counts reproduce d_f asymptotically.
    for (int L : {16, 32, 64}) {
        for (auto kind : {CouplingKind::N, CouplingKind::A, CouplingKind::NN}) {
            const DelocBorder b = deloc_border(kind, L, a, omega);
            CHECK(b.delta_e_f / b.m_f ==
                  doctest::Approx(b.d_f).epsilon(4.0 / static_cast<double>(L)));
        }
    }

    CHECK(code_of([] { deloc_border(CouplingKind::Custom, 8, 1.0, 100.0); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("chaos border numbers") {
    CHECK(chaos_border(8, 1.0, 100.0) ==
          doctest::Approx(2.0 * std::sqrt(64.0 + 10000.0)).epsilon(1e-12));
    CHECK(chaos_border(12, 1.0, 100.0) == doctest::Approx(134.28996).epsilon(1e-6));
}

TEST_CASE("homogeneous-field delocalization border") {
    CHECK(deloc_border_homogeneous(10, 100.0, 1.0) == doctest::Approx(2.5e-4).epsilon(1e-12));
    CHECK(deloc_border_homogeneous(8, 100.0, 1.0) ==
          doctest::Approx(3.125e-4).epsilon(1e-12));
}

TEST_CASE("quadratic gradient scaling exponents") {
    const GradientScalingReport n = quadratic_gradient_scaling(CouplingKind::N, 8, 0.5, 100.0);
    CHECK(n.defined);
    CHECK(n.jcr_exponent == 2.0);
    CHECK(n.delta_e_f_scale == doctest::Approx(0.25 * 512.0 / 100.0).epsilon(1e-12));

    const GradientScalingReport a = quadratic_gradient_scaling(CouplingKind::A, 8, 0.5, 100.0);
    CHECK(a.jcr_exponent == 1.0);

    const GradientScalingReport flat =
        quadratic_gradient_scaling(CouplingKind::N, 8, 0.0, 100.0);
    CHECK(!flat.defined);
}

TEST_CASE("border table assembles per-parameter estimates") {
    const BorderEstimates b = borders(gradient_params(10, 100.0, 1.0, 0.5));
    CHECK(b.n_cb == 252.0);
    CHECK(b.width_j0 == doctest::Approx(1.125).epsilon(1e-12));
    CHECK(b.width_jdom == doctest::Approx(4.0).epsilon(1e-12));  // (L-2) J a at J=0.5
    CHECK(b.j0_crossover == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(b.jb_overlap == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(b.d_f == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(b.j_cr_deloc == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(b.j_chaos == doctest::Approx(1.6 * std::sqrt(10100.0)).epsilon(1e-12));
    CHECK(b.j_cr_homogeneous == 0.0);

    const BorderEstimates odd = borders(gradient_params(9, 100.0, 1.0, 0.0));
    CHECK(odd.n_cb == 0.0);

    ModelParams hp;
    hp.L = 10;
    hp.profile = FieldProfile::Homogeneous;
    hp.spread = 1.0;
    const BorderEstimates hom = borders(make_params(std::move(hp)));
    CHECK(hom.j_cr_homogeneous == doctest::Approx(2.5e-4).epsilon(1e-12));
}

TEST_SUITE_END();
