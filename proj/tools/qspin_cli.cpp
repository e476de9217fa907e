// Command-line front end for the spin-chain library. Every verb goes through
// the C API in qspin.h; exit codes mirror qspin_status (0 ok, 1 usage,
// 2 numeric, 3 I/O).
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qspin.h"

namespace {

int fail(qspin_status rc) {
    std::cerr << "error: " << qspin_last_error() << "\n";
    return static_cast<int>(rc);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using Assignments = std::vector<std::pair<std::string, std::string>>;

// Model flags shared by every single-point verb; values are forwarded to
// qspin_params_set verbatim, in command-line order.
struct ModelFlags {
    Assignments kv;
    std::string custom_matrix_file;

    void add_options(CLI::App* cmd) {
        const auto capture = [this](const std::string& key) {
            return [this, key](const std::string& value) { kv.emplace_back(key, value); };
        };
        cmd->add_option_function<std::string>("-L,--length", capture("L"),
                                              "number of qubits");
        cmd->add_option_function<std::string>("--omega", capture("omega"),
                                              "Rabi frequency Omega");
        cmd->add_option_function<std::string>("--omega0", capture("omega0"),
                                              "Larmor frequency of qubit 0");
        cmd->add_option_function<std::string>("--nu", capture("nu"),
                                              "rotating-frame frequency (default omega0)");
        cmd->add_option_function<std::string>(
            "--profile", capture("profile"), "field profile: gradient|homogeneous|quadratic");
        cmd->add_option_function<std::string>("-a,--gradient", capture("a"),
                                              "constant-gradient slope");
        cmd->add_option_function<std::string>("--delta", capture("delta"),
                                              "homogeneous frequency spread");
        cmd->add_option_function<std::string>("-b,--curvature", capture("b"),
                                              "quadratic-gradient curvature");
        cmd->add_option_function<std::string>("--field-seed", capture("field_seed"),
                                              "homogeneous profile seed");
        cmd->add_option_function<std::string>("--coupling", capture("coupling"),
                                              "coupling kind: N|NN|A|custom");
        cmd->add_option_function<std::string>("-J,--interaction", capture("J"),
                                              "interaction strength");
        cmd->add_option_function<std::string>("--random", capture("random"),
                                              "scale bonds by uniform [-1,1) factors");
        cmd->add_option_function<std::string>("--seed", capture("seed"), "bond seed");
        cmd->add_option("--custom-matrix", custom_matrix_file,
                        "file with L*L whitespace-separated bond pattern entries");
        cmd->add_option_function<std::string>("--allow-large", capture("allow_large"),
                                              "lift the L <= 14 build guard");
    }
};

struct ParamsDeleter {
    void operator()(qspin_params* p) const { qspin_params_destroy(p); }
};
struct MatrixDeleter {
    void operator()(qspin_matrix* m) const { qspin_matrix_destroy(m); }
};
struct SpectrumDeleter {
    void operator()(qspin_spectrum* s) const { qspin_spectrum_destroy(s); }
};
using ParamsPtr = std::unique_ptr<qspin_params, ParamsDeleter>;
using MatrixPtr = std::unique_ptr<qspin_matrix, MatrixDeleter>;
using SpectrumPtr = std::unique_ptr<qspin_spectrum, SpectrumDeleter>;

// 0 on success, otherwise the exit code to return.
int make_params(const ModelFlags& flags, ParamsPtr& out) {
    qspin_params* raw = nullptr;
    if (qspin_status rc = qspin_params_create(&raw); rc != QSPIN_OK) return fail(rc);
    out.reset(raw);
    for (const auto& [key, value] : flags.kv)
        if (qspin_status rc = qspin_params_set(raw, key.c_str(), value.c_str());
            rc != QSPIN_OK)
            return fail(rc);
    if (!flags.custom_matrix_file.empty()) {
        std::ifstream f(flags.custom_matrix_file);
        if (!f) {
            std::cerr << "error: cannot read " << flags.custom_matrix_file << "\n";
            return static_cast<int>(QSPIN_ERR_IO);
        }
        std::vector<double> vals;
        double v;
        while (f >> v) vals.push_back(v);
        if (!f.eof()) {
            std::cerr << "error: non-numeric content in " << flags.custom_matrix_file << "\n";
            return static_cast<int>(QSPIN_ERR_ARGUMENT);
        }
        if (qspin_status rc =
                qspin_params_set_custom_matrix(raw, vals.data(), vals.size());
            rc != QSPIN_OK)
            return fail(rc);
    }
    if (qspin_status rc = qspin_params_finalize(raw); rc != QSPIN_OK) return fail(rc);
    return 0;
}

std::optional<qspin_build> build_kind(const std::string& s) {
    if (s == "z") return QSPIN_BUILD_Z;
    if (s == "mf") return QSPIN_BUILD_MEAN_FIELD;
    if (s == "quasi") return QSPIN_BUILD_QUASI_INTEGRABLE;
    if (s == "vdiag") return QSPIN_BUILD_V_DIAG;
    if (s == "vband") return QSPIN_BUILD_V_BAND;
    if (s == "voff") return QSPIN_BUILD_V_OFF;
    return std::nullopt;
}

// Text sink honoring "-" (stdout), QSPIN_OUTPUT_DIR for relative paths, and
// the refuse-existing-unless-overwrite convention.
class Output {
  public:
    int open(const std::string& path, bool overwrite) {
        if (path == "-" || path.empty()) return 0;
        namespace fs = std::filesystem;
        fs::path p(path);
        const char* dir = std::getenv("QSPIN_OUTPUT_DIR");
        if (dir && *dir && p.is_relative()) p = fs::path(dir) / p;
        if (fs::exists(p) && !overwrite) {
            std::cerr << "error: refusing to overwrite " << p.string()
                      << " (use --overwrite)\n";
            return static_cast<int>(QSPIN_ERR_IO);
        }
        file_.open(p, std::ios::binary | std::ios::trunc);
        if (!file_) {
            std::cerr << "error: cannot open " << p.string() << " for writing\n";
            return static_cast<int>(QSPIN_ERR_IO);
        }
        return 0;
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    int close() {
        stream().flush();
        if (!stream().good()) {
            std::cerr << "error: write failed\n";
            return static_cast<int>(QSPIN_ERR_IO);
        }
        if (file_.is_open()) file_.close();
        return 0;
    }

  private:
    std::ofstream file_;
};

int solve(const ParamsPtr& params, const std::string& kind, bool vectors, bool full_check,
          MatrixPtr& matrix, SpectrumPtr& spectrum) {
    const auto k = build_kind(kind);
    if (!k) {
        std::cerr << "error: unknown matrix kind '" << kind << "'\n";
        return static_cast<int>(QSPIN_ERR_ARGUMENT);
    }
    qspin_matrix* m = nullptr;
    if (qspin_status rc = qspin_matrix_build(params.get(), *k, &m); rc != QSPIN_OK)
        return fail(rc);
    matrix.reset(m);
    qspin_spectrum* s = nullptr;
    if (qspin_status rc = qspin_eigh(m, vectors ? 1 : 0, full_check ? 1 : 0, &s);
        rc != QSPIN_OK)
        return fail(rc);
    spectrum.reset(s);
    return 0;
}

int fetch_bands(const SpectrumPtr& spec, const ParamsPtr& params, double gap,
                std::vector<qspin_band>& out) {
    size_t count = 0;
    if (qspin_status rc = qspin_bands(spec.get(), params.get(), gap, nullptr, 0, &count);
        rc != QSPIN_OK)
        return fail(rc);
    out.resize(count);
    if (qspin_status rc =
            qspin_bands(spec.get(), params.get(), gap, out.data(), out.size(), &count);
        rc != QSPIN_OK)
        return fail(rc);
    return 0;
}

std::string joined_values(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + g17(v[i]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"driven spin-chain diagonalization toolkit"};
    app.require_subcommand(1);

    std::string output = "-";
    bool overwrite = false;

    // --- matrix ---------------------------------------------------------
    auto* c_matrix = app.add_subcommand("matrix", "sparse dump of a Hamiltonian");
    ModelFlags f_matrix;
    f_matrix.add_options(c_matrix);
    std::string matrix_kind = "z";
    double matrix_threshold = 0.0;
    c_matrix->add_option("--kind", matrix_kind, "z|mf|quasi|vdiag|vband|voff");
    c_matrix->add_option("--threshold", matrix_threshold, "dump |entries| above this");
    c_matrix->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_matrix->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- spectrum ---------------------------------------------------------
    auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues, one per line");
    ModelFlags f_spectrum;
    f_spectrum.add_options(c_spectrum);
    std::string spectrum_kind = "z";
    bool full_check = false;
    c_spectrum->add_option("--kind", spectrum_kind, "z|mf|quasi|vdiag|vband|voff");
    c_spectrum->add_flag("--full-check", full_check,
                         "verify the solver contract on every eigenvector column");
    c_spectrum->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_spectrum->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- bands ------------------------------------------------------------
    auto* c_bands = app.add_subcommand("bands", "band decomposition of the spectrum");
    ModelFlags f_bands;
    f_bands.add_options(c_bands);
    std::string bands_kind = "z";
    double gap = 0.0;
    c_bands->add_option("--kind", bands_kind, "z|mf|quasi");
    c_bands->add_option("--gap", gap, "band gap threshold (default omega/2)");
    c_bands->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_bands->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- spacing ------------------------------------------------------------
    auto* c_spacing =
        app.add_subcommand("spacing", "central-band level-spacing distribution");
    ModelFlags f_spacing;
    f_spacing.add_options(c_spacing);
    std::string spacing_kind = "z";
    int bins = 40;
    double s_max = 4.0;
    double spacing_gap = 0.0;
    c_spacing->add_option("--kind", spacing_kind, "z|mf|quasi");
    c_spacing->add_option("--bins", bins, "histogram bins");
    c_spacing->add_option("--s-max", s_max, "histogram range [0, s_max]");
    c_spacing->add_option("--gap", spacing_gap, "band gap threshold (default omega/2)");
    c_spacing->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_spacing->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- states -------------------------------------------------------------
    auto* c_states =
        app.add_subcommand("states", "participation number and width per eigenstate");
    ModelFlags f_states;
    f_states.add_options(c_states);
    std::string states_kind = "mf";
    std::string band_sel = "central";
    double states_gap = 0.0;
    c_states->add_option("--kind", states_kind,
                         "z|mf (basis the amplitudes are read in)");
    c_states->add_option("--band", band_sel, "central|all");
    c_states->add_option("--gap", states_gap, "band gap threshold (default omega/2)");
    c_states->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_states->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- census -------------------------------------------------------------
    auto* c_census =
        app.add_subcommand("census", "direct couplings inside the central multiplet");
    ModelFlags f_census;
    f_census.add_options(c_census);
    double census_threshold = 1e-6;
    c_census->add_option("--threshold", census_threshold, "matrix-element cutoff");
    c_census->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_census->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- theory -------------------------------------------------------------
    auto* c_theory = app.add_subcommand("theory", "closed-form border estimates");
    ModelFlags f_theory;
    f_theory.add_options(c_theory);
    c_theory->add_option("-o,--output", output, "output path ('-' = stdout)");
    c_theory->add_flag("--overwrite", overwrite, "replace an existing output file");

    // --- sweep ------------------------------------------------------------
    auto* c_sweep = app.add_subcommand("sweep", "grid x ensemble scan driven by a config");
    std::string config_file;
    std::vector<std::string> overrides;
    std::string axis_flag, values_flag, observables_flag, format_flag;
    std::string logspace_flag, linspace_flag;
    int ensemble_flag = -1, workers_flag = -1;
    bool timing = false, sweep_overwrite = false, check_only = false;
    c_sweep->add_option("-c,--config", config_file, "key = value configuration file");
    c_sweep->add_option("set", overrides, "KEY=VALUE overrides applied after the file");
    c_sweep->add_option("--axis", axis_flag, "swept axis: J|omega|L|delta");
    c_sweep->add_option("--values", values_flag, "comma-separated axis values");
    c_sweep->add_option("--logspace", logspace_flag, "LO:HI:N log-spaced axis values");
    c_sweep->add_option("--linspace", linspace_flag, "LO:HI:N linearly spaced axis values");
    c_sweep->add_option("--ensemble", ensemble_flag, "random realizations per grid point");
    c_sweep->add_option("--observables", observables_flag,
                        "comma-separated: bands,spacing,npc,states,census,theory");
    c_sweep->add_option("--format", format_flag, "csv|jsonl");
    c_sweep->add_option("--workers", workers_flag, "worker threads (0 = all cores)");
    c_sweep->add_flag("--timing", timing, "add a wall_ms column");
    c_sweep->add_flag("--overwrite", sweep_overwrite, "replace an existing output file");
    c_sweep->add_flag("--check", check_only, "validate and echo the config, do not run");
    c_sweep->add_option("-o,--output", output, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(QSPIN_ERR_ARGUMENT);
    }

    // ---- matrix (file handling delegated to the C API) ---------------------
    if (c_matrix->parsed()) {
        ParamsPtr params;
        if (int rc = make_params(f_matrix, params); rc != 0) return rc;
        const auto k = build_kind(matrix_kind);
        if (!k) {
            std::cerr << "error: unknown matrix kind '" << matrix_kind << "'\n";
            return static_cast<int>(QSPIN_ERR_ARGUMENT);
        }
        qspin_matrix* m = nullptr;
        if (qspin_status s = qspin_matrix_build(params.get(), *k, &m); s != QSPIN_OK)
            return fail(s);
        MatrixPtr mp(m);
        if (qspin_status s =
                qspin_matrix_write_triplets(m, matrix_threshold, output.c_str(),
                                            overwrite ? 1 : 0);
            s != QSPIN_OK)
            return fail(s);
        return 0;
    }

    // ---- other single-point verbs ------------------------------------------
    const auto run_point_verb = [&](CLI::App* cmd, const ModelFlags& flags,
                                    auto&& body) -> int {
        if (!cmd->parsed()) return -1;
        ParamsPtr params;
        if (int rc = make_params(flags, params); rc != 0) return rc;
        Output out;
        if (int rc = out.open(output, overwrite); rc != 0) return rc;
        if (int rc = body(params, out.stream()); rc != 0) return rc;
        return out.close();
    };

    if (int rc = run_point_verb(
            c_spectrum, f_spectrum,
            [&](ParamsPtr& params, std::ostream& os) -> int {
                MatrixPtr m;
                SpectrumPtr s;
                if (int rc2 = solve(params, spectrum_kind, full_check, full_check, m, s);
                    rc2 != 0)
                    return rc2;
                size_t n = 0;
                if (qspin_status st = qspin_spectrum_eigenvalues(s.get(), nullptr, 0, &n);
                    st != QSPIN_OK)
                    return fail(st);
                std::vector<double> ev(n);
                if (qspin_status st = qspin_spectrum_eigenvalues(s.get(), ev.data(), n, &n);
                    st != QSPIN_OK)
                    return fail(st);
                for (double v : ev) os << g17(v) << "\n";
                return 0;
            });
        rc >= 0)
        return rc;

    if (int rc = run_point_verb(
            c_bands, f_bands,
            [&](ParamsPtr& params, std::ostream& os) -> int {
                MatrixPtr m;
                SpectrumPtr s;
                if (int rc2 = solve(params, bands_kind, false, false, m, s); rc2 != 0)
                    return rc2;
                std::vector<qspin_band> bands;
                if (int rc2 = fetch_bands(s, params, gap, bands); rc2 != 0) return rc2;
                os << "# band lo hi population e_min e_max width\n";
                for (std::size_t i = 0; i < bands.size(); ++i) {
                    const auto& b = bands[i];
                    os << i << ' ' << b.lo << ' ' << b.hi << ' ' << (b.hi - b.lo + 1) << ' '
                       << g17(b.e_min) << ' ' << g17(b.e_max) << ' '
                       << g17(b.e_max - b.e_min) << "\n";
                }
                return 0;
            });
        rc >= 0)
        return rc;

    if (int rc = run_point_verb(
            c_spacing, f_spacing,
            [&](ParamsPtr& params, std::ostream& os) -> int {
                MatrixPtr m;
                SpectrumPtr s;
                if (int rc2 = solve(params, spacing_kind, false, false, m, s); rc2 != 0)
                    return rc2;
                qspin_band central{};
                if (qspin_status st =
                        qspin_central_band(s.get(), params.get(), spacing_gap, &central);
                    st != QSPIN_OK)
                    return fail(st);
                std::vector<double> densities(static_cast<std::size_t>(bins));
                std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
                double mean = 0;
                size_t samples = 0;
                if (qspin_status st = qspin_spacing_histogram(s.get(), &central, bins, s_max,
                                                              densities.data(), edges.data(),
                                                              &mean, &samples);
                    st != QSPIN_OK)
                    return fail(st);
                double lp = 0, lw = 0, mass = 0;
                if (qspin_status st =
                        qspin_spacing_distance(densities.data(), bins, s_max,
                                               QSPIN_REF_POISSON, &lp, &mass);
                    st != QSPIN_OK)
                    return fail(st);
                if (qspin_status st =
                        qspin_spacing_distance(densities.data(), bins, s_max,
                                               QSPIN_REF_WIGNER_DYSON, &lw, nullptr);
                    st != QSPIN_OK)
                    return fail(st);
                os << "# band " << central.lo << ' ' << central.hi << ' '
                   << g17(central.e_min) << ' ' << g17(central.e_max) << "\n";
                os << "# samples " << samples << " mean_spacing " << g17(mean) << "\n";
                os << "# poisson_l1 " << g17(lp) << " wd_l1 " << g17(lw) << " small_s_mass "
                   << g17(mass) << "\n";
                os << "# bin_lo bin_hi density\n";
                for (int i = 0; i < bins; ++i)
                    os << g17(edges[i]) << ' ' << g17(edges[i + 1]) << ' '
                       << g17(densities[i]) << "\n";
                return 0;
            });
        rc >= 0)
        return rc;

    if (int rc = run_point_verb(
            c_states, f_states,
            [&](ParamsPtr& params, std::ostream& os) -> int {
                if (band_sel != "central" && band_sel != "all") {
                    std::cerr << "error: --band must be central or all\n";
                    return static_cast<int>(QSPIN_ERR_ARGUMENT);
                }
                MatrixPtr m;
                SpectrumPtr s;
                if (int rc2 = solve(params, states_kind, true, false, m, s); rc2 != 0)
                    return rc2;
                qspin_band band{};
                if (band_sel == "central") {
                    if (qspin_status st =
                            qspin_central_band(s.get(), params.get(), states_gap, &band);
                        st != QSPIN_OK)
                        return fail(st);
                } else {
                    int dim = 0;
                    if (qspin_status st = qspin_spectrum_dim(s.get(), &dim); st != QSPIN_OK)
                        return fail(st);
                    size_t n = 0;
                    std::vector<double> ev(static_cast<std::size_t>(dim));
                    if (qspin_status st =
                            qspin_spectrum_eigenvalues(s.get(), ev.data(), ev.size(), &n);
                        st != QSPIN_OK)
                        return fail(st);
                    band = qspin_band{0, dim - 1, ev.front(), ev.back()};
                }
                size_t count = 0;
                if (qspin_status st = qspin_band_metrics(s.get(), &band, nullptr, 0, &count,
                                                         nullptr, nullptr);
                    st != QSPIN_OK)
                    return fail(st);
                std::vector<double> flat(count);
                double mean_npc = 0, mean_sigma = 0;
                if (qspin_status st = qspin_band_metrics(s.get(), &band, flat.data(), count,
                                                         &count, &mean_npc, &mean_sigma);
                    st != QSPIN_OK)
                    return fail(st);
                os << "# band " << band.lo << ' ' << band.hi << " mean_npc " << g17(mean_npc)
                   << " mean_sigma " << g17(mean_sigma) << "\n";
                os << "# state energy npc sigma\n";
                for (std::size_t i = 0; i * 3 + 2 < count; ++i)
                    os << (band.lo + static_cast<long>(i)) << ' ' << g17(flat[3 * i]) << ' '
                       << g17(flat[3 * i + 1]) << ' ' << g17(flat[3 * i + 2]) << "\n";
                return 0;
            });
        rc >= 0)
        return rc;

    if (int rc = run_point_verb(c_census, f_census,
                                [&](ParamsPtr& params, std::ostream& os) -> int {
                                    double mf = 0, de = 0, df = 0;
                                    if (qspin_status st = qspin_census(
                                            params.get(), census_threshold, &mf, &de, &df);
                                        st != QSPIN_OK)
                                        return fail(st);
                                    os << "m_f " << g17(mf) << "\n";
                                    os << "delta_e_f " << g17(de) << "\n";
                                    os << "d_f " << g17(df) << "\n";
                                    return 0;
                                });
        rc >= 0)
        return rc;

    if (int rc = run_point_verb(
            c_theory, f_theory,
            [&](ParamsPtr& params, std::ostream& os) -> int {
                qspin_borders b{};
                if (qspin_status st = qspin_theory_borders(params.get(), &b);
                    st != QSPIN_OK)
                    return fail(st);
                os << "n_cb " << g17(b.n_cb) << "\n";
                os << "width_j0 " << g17(b.width_j0) << "\n";
                os << "width_jdom " << g17(b.width_jdom) << "\n";
                os << "j0_crossover " << g17(b.j0_crossover) << "\n";
                os << "jb_overlap " << g17(b.jb_overlap) << "\n";
                os << "delta_e_f " << g17(b.delta_e_f) << "\n";
                os << "m_f " << g17(b.m_f) << "\n";
                os << "d_f " << g17(b.d_f) << "\n";
                os << "j_cr_deloc " << g17(b.j_cr_deloc) << "\n";
                os << "j_chaos " << g17(b.j_chaos) << "\n";
                os << "j_cr_homogeneous " << g17(b.j_cr_homogeneous) << "\n";
                return 0;
            });
        rc >= 0)
        return rc;

    // ---- sweep -------------------------------------------------------------
    if (c_sweep->parsed()) {
        std::ostringstream cfg;
        if (!config_file.empty()) {
            std::ifstream f(config_file);
            if (!f) {
                std::cerr << "error: cannot read config " << config_file << "\n";
                return static_cast<int>(QSPIN_ERR_IO);
            }
            cfg << f.rdbuf() << "\n";
        }
        for (const auto& kv : overrides) {
            if (kv.find('=') == std::string::npos) {
                std::cerr << "error: override '" << kv << "' is not KEY=VALUE\n";
                return static_cast<int>(QSPIN_ERR_ARGUMENT);
            }
            cfg << kv << "\n";
        }
        const auto spaced = [&](const std::string& spec, bool log) -> int {
            double lo = 0, hi = 0;
            int n = 0;
            if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2) {
                std::cerr << "error: expected LO:HI:N, got '" << spec << "'\n";
                return static_cast<int>(QSPIN_ERR_ARGUMENT);
            }
            if (log && (lo <= 0 || hi <= 0)) {
                std::cerr << "error: log spacing needs positive endpoints\n";
                return static_cast<int>(QSPIN_ERR_ARGUMENT);
            }
            std::vector<double> v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / (n - 1);
                v[static_cast<std::size_t>(i)] =
                    log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
            }
            cfg << "values = " << joined_values(v) << "\n";
            return 0;
        };
        if (!values_flag.empty()) cfg << "values = " << values_flag << "\n";
        if (!logspace_flag.empty())
            if (int rc = spaced(logspace_flag, true); rc != 0) return rc;
        if (!linspace_flag.empty())
            if (int rc = spaced(linspace_flag, false); rc != 0) return rc;
        if (!axis_flag.empty()) cfg << "axis = " << axis_flag << "\n";
        if (ensemble_flag >= 0) cfg << "ensemble = " << ensemble_flag << "\n";
        if (!observables_flag.empty()) cfg << "observables = " << observables_flag << "\n";
        if (!format_flag.empty()) cfg << "format = " << format_flag << "\n";
        if (workers_flag >= 0) cfg << "workers = " << workers_flag << "\n";
        if (timing) cfg << "timing = true\n";
        if (sweep_overwrite) cfg << "overwrite = true\n";
        if (output != "-") cfg << "output = " << output << "\n";

        if (check_only) {
            size_t len = 0;
            if (qspin_status st = qspin_sweep_echo(cfg.str().c_str(), nullptr, 0, &len);
                st != QSPIN_OK)
                return fail(st);
            std::string echo(len + 1, '\0');
            if (qspin_status st =
                    qspin_sweep_echo(cfg.str().c_str(), echo.data(), echo.size(), &len);
                st != QSPIN_OK)
                return fail(st);
            echo.resize(len);
            std::cout << echo << "\n";
            return 0;
        }
        if (qspin_status st = qspin_sweep_run(cfg.str().c_str()); st != QSPIN_OK)
            return fail(st);
        return 0;
    }

    return 0;
}
