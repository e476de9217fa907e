#include "model.hpp"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"
#include "text.hpp"

namespace qspin {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw_invalid(std::string("parameter '") + name + "' must be finite");
}

}  // namespace

ModelParams make_params(ModelParams raw) {
    if (raw.L < 2) throw_invalid("L must be at least 2");
    if (raw.L > 30) throw_invalid("L too large for dense representation");
    require_finite(raw.omega, "omega");
    require_finite(raw.omega0, "omega0");
    require_finite(raw.nu, "nu");
    require_finite(raw.gradient_a, "a");
    require_finite(raw.spread, "delta");
    require_finite(raw.gradient_b, "b");
    require_finite(raw.coupling.j, "J");
    if (raw.omega <= 0.0) throw_invalid("omega must be positive");
    if (raw.spread < 0.0) throw_invalid("delta must be non-negative");

    if (raw.coupling.kind == CouplingKind::Custom) {
        if (!raw.coupling.custom)
            throw_invalid("coupling kind 'custom' requires a custom matrix");
        const auto& m = *raw.coupling.custom;
        const std::size_t n = static_cast<std::size_t>(raw.L);
        if (m.size() != n * n)
            throw_invalid("custom coupling matrix must have L*L entries");
        double scale = 0.0;
        for (double v : m) {
            require_finite(v, "custom_matrix");
            scale = std::max(scale, std::abs(v));
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (m[k * n + k] != 0.0)
                throw_invalid("custom coupling matrix must have zero diagonal");
            for (std::size_t l = k + 1; l < n; ++l)
                if (std::abs(m[k * n + l] - m[l * n + k]) > 1e-12 * std::max(scale, 1.0))
                    throw_invalid("custom coupling matrix must be symmetric");
        }
    } else if (raw.coupling.custom) {
        throw_invalid("custom matrix given but coupling kind is not 'custom'");
    }

    raw.detunings.assign(static_cast<std::size_t>(raw.L), 0.0);
    switch (raw.profile) {
        case FieldProfile::ConstantGradient:
            for (int k = 0; k < raw.L; ++k)
                raw.detunings[k] = raw.omega0 + raw.gradient_a * k - raw.nu;
            break;
        case FieldProfile::Homogeneous: {
            SplitMix64 g(raw.field_seed);
            for (int k = 0; k < raw.L; ++k)
                raw.detunings[k] = 0.5 * raw.spread * g.uniform_sym();
            break;
        }
        case FieldProfile::QuadraticGradient:
            for (int k = 0; k < raw.L; ++k)
                raw.detunings[k] = raw.omega0 + raw.gradient_b * k * k - raw.nu;
            break;
    }
    return raw;
}

std::vector<double> coupling_matrix(const CouplingSpec& spec, int L) {
    if (L < 2) throw_invalid("coupling_matrix: L must be at least 2");
    const std::size_t n = static_cast<std::size_t>(L);
    std::vector<double> out(n * n, 0.0);
    SplitMix64 g(spec.seed);

    auto bond_pattern = [&](int k, int l) -> double {
        switch (spec.kind) {
            case CouplingKind::N:
                return l - k == 1 ? 1.0 : 0.0;
            case CouplingKind::NN:
                return l - k <= 2 ? 1.0 : 0.0;
            case CouplingKind::A:
                return 1.0;
            case CouplingKind::Custom:
                return (*spec.custom)[static_cast<std::size_t>(k) * n + l];
        }
        return 0.0;
    };

    for (int k = 0; k < L; ++k) {
        for (int l = k + 1; l < L; ++l) {
            const double pattern = bond_pattern(k, l);
            if (pattern == 0.0) continue;
            double v = spec.j * pattern;
            if (spec.random) v *= g.uniform_sym();
            out[static_cast<std::size_t>(k) * n + l] = v;
            out[static_cast<std::size_t>(l) * n + k] = v;
        }
    }
    return out;
}

const char* to_string(FieldProfile p) {
    switch (p) {
        case FieldProfile::ConstantGradient: return "gradient";
        case FieldProfile::Homogeneous: return "homogeneous";
        case FieldProfile::QuadraticGradient: return "quadratic";
    }
    return "?";
}

const char* to_string(CouplingKind k) {
    switch (k) {
        case CouplingKind::N: return "N";
        case CouplingKind::NN: return "NN";
        case CouplingKind::A: return "A";
        case CouplingKind::Custom: return "custom";
    }
    return "?";
}

std::optional<FieldProfile> profile_from_string(const std::string& s) {
    if (s == "gradient") return FieldProfile::ConstantGradient;
    if (s == "homogeneous") return FieldProfile::Homogeneous;
    if (s == "quadratic") return FieldProfile::QuadraticGradient;
    return std::nullopt;
}

std::optional<CouplingKind> coupling_from_string(const std::string& s) {
    if (s == "N" || s == "n") return CouplingKind::N;
    if (s == "NN" || s == "nn") return CouplingKind::NN;
    if (s == "A" || s == "a") return CouplingKind::A;
    if (s == "custom") return CouplingKind::Custom;
    return std::nullopt;
}

bool apply_model_key(ModelParams& p, std::optional<double>& nu, const std::string& key,
                     const std::string& value) {
    using namespace text;
    if (key == "L") {
        p.L = static_cast<int>(parse_long(key, value));
    } else if (key == "omega") {
        p.omega = parse_double(key, value);
    } else if (key == "omega0") {
        p.omega0 = parse_double(key, value);
    } else if (key == "nu") {
        nu = parse_double(key, value);
    } else if (key == "profile") {
        const auto pr = profile_from_string(value);
        if (!pr) throw_invalid("key 'profile': unknown profile '" + value + "'");
        p.profile = *pr;
    } else if (key == "a") {
        p.gradient_a = parse_double(key, value);
    } else if (key == "delta") {
        p.spread = parse_double(key, value);
    } else if (key == "b") {
        p.gradient_b = parse_double(key, value);
    } else if (key == "field_seed") {
        p.field_seed = parse_u64(key, value);
    } else if (key == "coupling") {
        const auto k = coupling_from_string(value);
        if (!k) throw_invalid("key 'coupling': unknown kind '" + value + "'");
        p.coupling.kind = *k;
    } else if (key == "J") {
        p.coupling.j = parse_double(key, value);
    } else if (key == "random") {
        p.coupling.random = parse_bool(key, value);
    } else if (key == "seed") {
        p.coupling.seed = parse_u64(key, value);
    } else if (key == "allow_large") {
        p.allow_large = parse_bool(key, value);
    } else {
        return false;
    }
    return true;
}

}  // namespace qspin
