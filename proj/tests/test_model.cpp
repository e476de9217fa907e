#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "doctest.h"

#include "model.hpp"
#include "test_util.hpp"

using namespace qspin;
using test_util::code_of;

TEST_SUITE_BEGIN("model");

TEST_CASE("defaults materialize to the resonant gradient chain") {
    const ModelParams p = make_params(ModelParams{});
    CHECK(p.L == 10);
    CHECK(p.omega == 100.0);
    CHECK(p.nu == 100.0);
    CHECK(p.dim() == 1024);
    REQUIRE(p.detunings.size() == 10);
    // omega_k = omega0 + a k with qubit 0 at the rotating-frame frequency.
    CHECK(p.detunings[0] == doctest::Approx(0.0));
    CHECK(p.detunings[1] == doctest::Approx(1.0));
    CHECK(p.detunings[9] == doctest::Approx(9.0));
}

TEST_CASE("parameter validation rejects out-of-range input") {
    ModelParams p;
    SUBCASE("chain too short") { p.L = 1; }
    SUBCASE("chain absurdly long") { p.L = 31; }
    SUBCASE("non-positive Rabi frequency") { p.omega = 0.0; }
    SUBCASE("negative spread") { p.spread = -1.0; }
    SUBCASE("non-finite frequency") { p.omega0 = std::nan(""); }
    CHECK(code_of([&] { make_params(p); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("constant gradient detunings are zero-based in the qubit index") {
    ModelParams p;
    p.L = 4;
    p.omega0 = 50.0;
    p.nu = 30.0;
    p.gradient_a = 2.0;
    const ModelParams m = make_params(std::move(p));
    const std::vector<double> expect{20.0, 22.0, 24.0, 26.0};
    for (int k = 0; k < 4; ++k) CHECK(m.detunings[k] == doctest::Approx(expect[k]));
}

TEST_CASE("quadratic profile uses b k^2") {
    ModelParams p;
    p.L = 4;
    p.profile = FieldProfile::QuadraticGradient;
    p.gradient_b = 0.5;
    const ModelParams m = make_params(std::move(p));
    CHECK(m.detunings[0] == doctest::Approx(0.0));
    CHECK(m.detunings[1] == doctest::Approx(0.5));
    CHECK(m.detunings[2] == doctest::Approx(2.0));
    CHECK(m.detunings[3] == doctest::Approx(4.5));
}

TEST_CASE("homogeneous profile draws detunings inside the window, reproducibly") {
    ModelParams p;
    p.L = 8;
    p.profile = FieldProfile::Homogeneous;
    p.spread = 4.0;
    p.field_seed = 11;
    const ModelParams a = make_params(p);
    const ModelParams b = make_params(p);
    CHECK(a.detunings == b.detunings);
    for (double d : a.detunings) {
        CHECK(d >= -2.0);
        CHECK(d < 2.0);
    }
    p.field_seed = 12;
    const ModelParams c = make_params(p);
    CHECK(a.detunings != c.detunings);
}

TEST_CASE("coupling patterns populate the advertised bonds") {
    CouplingSpec spec;
    spec.j = 2.0;
    const auto at = [](const std::vector<double>& m, int L, int k, int n) {
        return m[static_cast<std::size_t>(k) * L + n];
    };

    SUBCASE("nearest neighbour") {
        spec.kind = CouplingKind::N;
        const auto m = coupling_matrix(spec, 4);
        CHECK(at(m, 4, 0, 1) == 2.0);
        CHECK(at(m, 4, 1, 0) == 2.0);
        CHECK(at(m, 4, 0, 2) == 0.0);
        CHECK(at(m, 4, 0, 0) == 0.0);
    }
    SUBCASE("nearest and next-nearest") {
        spec.kind = CouplingKind::NN;
        const auto m = coupling_matrix(spec, 4);
        CHECK(at(m, 4, 0, 1) == 2.0);
        CHECK(at(m, 4, 0, 2) == 2.0);
        CHECK(at(m, 4, 0, 3) == 0.0);
    }
    SUBCASE("all-to-all") {
        spec.kind = CouplingKind::A;
        const auto m = coupling_matrix(spec, 4);
        for (int k = 0; k < 4; ++k)
            for (int n = 0; n < 4; ++n) CHECK(at(m, 4, k, n) == (k == n ? 0.0 : 2.0));
    }
    SUBCASE("custom pattern scaled by J") {
        spec.kind = CouplingKind::Custom;
        spec.custom = std::vector<double>{0, 1, 0, 1, 0, 3, 0, 3, 0};
        const auto m = coupling_matrix(spec, 3);
        CHECK(at(m, 3, 0, 1) == 2.0);
        CHECK(at(m, 3, 1, 2) == 6.0);
        CHECK(at(m, 3, 0, 2) == 0.0);
    }
}

TEST_CASE("custom coupling shape errors") {
    ModelParams p;
    p.L = 3;
    p.coupling.kind = CouplingKind::Custom;
    SUBCASE("missing matrix") {}
    SUBCASE("wrong size") { p.coupling.custom = std::vector<double>{0, 1, 1, 0}; }
    SUBCASE("asymmetric") {
        p.coupling.custom = std::vector<double>{0, 1, 0, 2, 0, 0, 0, 0, 0};
    }
    SUBCASE("nonzero diagonal") {
        p.coupling.custom = std::vector<double>{1, 0, 0, 0, 0, 0, 0, 0, 0};
    }
    CHECK(code_of([&] { make_params(p); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("a custom matrix without the custom kind is rejected") {
    ModelParams p;
    p.L = 3;
    p.coupling.kind = CouplingKind::N;
    p.coupling.custom = std::vector<double>(9, 0.0);
    CHECK(code_of([&] { make_params(p); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random bonds are bounded, seeded, and bond-resolved") {
    CouplingSpec spec;
    spec.kind = CouplingKind::A;
    spec.j = 3.0;
    spec.random = true;
    spec.seed = 99;
    const auto m1 = coupling_matrix(spec, 4);
    const auto m2 = coupling_matrix(spec, 4);
    CHECK(m1 == m2);
    for (double v : m1) {
        CHECK(v >= -3.0);
        CHECK(v < 3.0);
    }
    spec.seed = 100;
    const auto m3 = coupling_matrix(spec, 4);
    CHECK(m1 != m3);

    // Different bonds get independent factors.
    const auto at = [&](int k, int n) { return m1[static_cast<std::size_t>(k) * 4 + n]; };
    CHECK(at(0, 1) != at(0, 2));
    CHECK(at(0, 1) == at(1, 0));
}

TEST_CASE("string round trips for profiles, couplings, axis keys") {
    for (auto p : {FieldProfile::ConstantGradient, FieldProfile::Homogeneous,
                   FieldProfile::QuadraticGradient})
        CHECK(profile_from_string(to_string(p)) == p);
    for (auto k :
         {CouplingKind::N, CouplingKind::NN, CouplingKind::A, CouplingKind::Custom})
        CHECK(coupling_from_string(to_string(k)) == k);
    CHECK(!profile_from_string("sawtooth").has_value());
    CHECK(!coupling_from_string("NNN").has_value());
}

TEST_CASE("textual assignment covers every model key and names bad values") {
    ModelParams p;
    std::optional<double> nu;
    CHECK(apply_model_key(p, nu, "L", "6"));
    CHECK(apply_model_key(p, nu, "omega", "250"));
    CHECK(apply_model_key(p, nu, "profile", "homogeneous"));
    CHECK(apply_model_key(p, nu, "delta", "2.5"));
    CHECK(apply_model_key(p, nu, "coupling", "A"));
    CHECK(apply_model_key(p, nu, "J", "0.25"));
    CHECK(apply_model_key(p, nu, "random", "true"));
    CHECK(apply_model_key(p, nu, "seed", "7"));
    CHECK(apply_model_key(p, nu, "nu", "99"));
    CHECK(p.L == 6);
    CHECK(p.omega == 250.0);
    CHECK(p.profile == FieldProfile::Homogeneous);
    CHECK(p.spread == 2.5);
    CHECK(p.coupling.kind == CouplingKind::A);
    CHECK(p.coupling.j == 0.25);
    CHECK(p.coupling.random);
    CHECK(p.coupling.seed == 7);
    CHECK(nu == 99.0);

    CHECK(!apply_model_key(p, nu, "bins", "40"));

    try {
        apply_model_key(p, nu, "L", "ten");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("'L'") != std::string::npos);
    }
}

TEST_SUITE_END();
