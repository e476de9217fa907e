#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qspin {

// Field profile along the chain; fixes the Larmor frequency omega_k of qubit
// k and hence the detuning delta_k = omega_k - nu in the rotating frame.
enum class FieldProfile {
    ConstantGradient,   // omega_k = omega0 + a k
    Homogeneous,        // omega_k uniform in (nu - spread/2, nu + spread/2)
    QuadraticGradient,  // omega_k = omega0 + b k^2
};

enum class CouplingKind {
    N,       // nearest neighbour bonds (k, k+1)
    NN,      // bonds (k, k+1) and (k, k+2)
    A,       // all-to-all bonds
    Custom,  // caller-supplied bond pattern
};

// Ising bond specification. The realized bond matrix is symmetric with zero
// diagonal; with `random` set, every populated bond is scaled by an
// independent uniform factor in [-1,1).
struct CouplingSpec {
    CouplingKind kind = CouplingKind::N;
    double j = 0.0;
    bool random = false;
    std::uint64_t seed = 0;
    // Row-major LxL pattern, multiplied by j; required iff kind == Custom.
    std::optional<std::vector<double>> custom;
};

struct ModelParams {
    int L = 10;
    double omega = 100.0;   // Rabi frequency of the resonant driving
    double omega0 = 100.0;  // Larmor frequency of qubit 0
    double nu = 100.0;      // rotating-frame frequency
    FieldProfile profile = FieldProfile::ConstantGradient;
    double gradient_a = 1.0;   // ConstantGradient slope
    double spread = 0.0;       // Homogeneous window width (Delta)
    double gradient_b = 0.0;   // QuadraticGradient curvature
    std::uint64_t field_seed = 0;
    CouplingSpec coupling;
    bool allow_large = false;  // lifts the L <= 14 build guard

    // delta_k = omega_k - nu, materialized by make_params. For the
    // Homogeneous profile this freezes one disorder realization.
    std::vector<double> detunings;

    int dim() const { return 1 << L; }
};

// Validates and completes a raw parameter record: range checks, custom
// coupling shape checks, detuning materialization. Throws Error(1) on bad
// input.
ModelParams make_params(ModelParams raw);

// Symmetric LxL bond matrix (row-major) realized from spec. Random bonds are
// drawn in lexicographic (k, n) order, k < n, so a fixed seed fixes the
// matrix.
std::vector<double> coupling_matrix(const CouplingSpec& spec, int L);

const char* to_string(FieldProfile p);
const char* to_string(CouplingKind k);
std::optional<FieldProfile> profile_from_string(const std::string& s);
std::optional<CouplingKind> coupling_from_string(const std::string& s);

// Applies one textual assignment to a raw parameter record; shared by the
// config parser and the C API. Returns false when the key is not a model
// key, throws Error(1) on a malformed value. An explicit `nu` is recorded in
// the out-parameter so the caller can default it to the final omega0.
bool apply_model_key(ModelParams& p, std::optional<double>& nu, const std::string& key,
                     const std::string& value);

}  // namespace qspin
