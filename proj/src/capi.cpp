#include "qspin.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bands.hpp"
#include "eigensolve.hpp"
#include "error.hpp"
#include "hamiltonian.hpp"
#include "matrix.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "sweep.hpp"
#include "theory.hpp"

struct qspin_params {
    qspin::ModelParams raw;
    std::optional<double> nu_override;
    bool finalized = false;
    qspin::ModelParams ready;
};

struct qspin_matrix {
    qspin::ComplexMatrix m;
};

struct qspin_spectrum {
    qspin::Spectrum s;
};

namespace {

thread_local std::string t_error;

qspin_status fail(qspin_status code, std::string message) {
    t_error = std::move(message);
    return code;
}

template <typename F>
qspin_status guarded(F&& f) noexcept {
    try {
        f();
        t_error.clear();
        return QSPIN_OK;
    } catch (const qspin::Error& e) {
        t_error = e.what();
        switch (e.code()) {
            case qspin::ErrorCode::Numeric:
                return QSPIN_ERR_NUMERIC;
            case qspin::ErrorCode::Io:
                return QSPIN_ERR_IO;
            case qspin::ErrorCode::InvalidArgument:
                break;
        }
        return QSPIN_ERR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        t_error = "out of memory";
        return QSPIN_ERR_NUMERIC;
    } catch (const std::exception& e) {
        t_error = e.what();
        return QSPIN_ERR_ARGUMENT;
    }
}

const qspin::ModelParams& ready_params(const qspin_params* p) {
    if (!p) qspin::throw_invalid("null params handle");
    if (!p->finalized)
        qspin::throw_invalid("params not finalized (call qspin_params_finalize first)");
    return p->ready;
}

qspin_status copy_doubles(const std::vector<double>& src, double* out, size_t cap,
                          size_t* count) noexcept {
    if (!count) return fail(QSPIN_ERR_ARGUMENT, "null count pointer");
    *count = src.size();
    if (!out) {
        t_error.clear();
        return QSPIN_OK;
    }
    if (cap < src.size())
        return fail(QSPIN_ERR_ARGUMENT, "buffer holds " + std::to_string(cap) +
                                            " entries, need " + std::to_string(src.size()));
    std::copy(src.begin(), src.end(), out);
    t_error.clear();
    return QSPIN_OK;
}

std::vector<qspin::Band> bands_of(const qspin_spectrum* s, const qspin_params* p,
                                  double gap_threshold) {
    if (!s) qspin::throw_invalid("null spectrum handle");
    if (gap_threshold > 0.0) return qspin::identify_bands(s->s.eigenvalues, gap_threshold);
    return qspin::identify_bands(s->s, ready_params(p));
}

}  // namespace

extern "C" {

const char* qspin_version(void) { return "0.1.0"; }

const char* qspin_last_error(void) { return t_error.c_str(); }

qspin_status qspin_params_create(qspin_params** out) {
    if (!out) return fail(QSPIN_ERR_ARGUMENT, "null out pointer");
    return guarded([&] { *out = new qspin_params(); });
}

void qspin_params_destroy(qspin_params* p) { delete p; }

qspin_status qspin_params_set(qspin_params* p, const char* key, const char* value) {
    return guarded([&] {
        if (!p) qspin::throw_invalid("null params handle");
        if (!key || !value) qspin::throw_invalid("null key or value");
        p->finalized = false;
        if (!qspin::apply_model_key(p->raw, p->nu_override, key, value))
            qspin::throw_invalid(std::string("unknown parameter key '") + key + "'");
    });
}

qspin_status qspin_params_set_custom_matrix(qspin_params* p, const double* pattern,
                                            size_t len) {
    return guarded([&] {
        if (!p) qspin::throw_invalid("null params handle");
        if (!pattern && len > 0) qspin::throw_invalid("null pattern with nonzero length");
        p->finalized = false;
        p->raw.coupling.custom.emplace(pattern, pattern + len);
    });
}

qspin_status qspin_params_finalize(qspin_params* p) {
    return guarded([&] {
        if (!p) qspin::throw_invalid("null params handle");
        qspin::ModelParams r = p->raw;
        r.nu = p->nu_override.value_or(r.omega0);
        p->ready = qspin::make_params(std::move(r));
        p->finalized = true;
    });
}

qspin_status qspin_params_dim(const qspin_params* p, int64_t* out) {
    return guarded([&] {
        if (!out) qspin::throw_invalid("null out pointer");
        *out = static_cast<int64_t>(ready_params(p).dim());
    });
}

qspin_status qspin_params_detunings(const qspin_params* p, double* out, size_t cap,
                                    size_t* count) {
    try {
        return copy_doubles(ready_params(p).detunings, out, cap, count);
    } catch (const std::exception& e) {
        return fail(QSPIN_ERR_ARGUMENT, e.what());
    }
}

qspin_status qspin_params_coupling_matrix(const qspin_params* p, double* out, size_t cap,
                                          size_t* count) {
    try {
        const qspin::ModelParams& r = ready_params(p);
        return copy_doubles(qspin::coupling_matrix(r.coupling, r.L), out, cap, count);
    } catch (const std::exception& e) {
        return fail(QSPIN_ERR_ARGUMENT, e.what());
    }
}

qspin_status qspin_params_epsilons(const qspin_params* p, double* out, size_t cap,
                                   size_t* count) {
    try {
        return copy_doubles(qspin::mean_field(ready_params(p)).epsilons, out, cap, count);
    } catch (const std::exception& e) {
        return fail(QSPIN_ERR_ARGUMENT, e.what());
    }
}

qspin_status qspin_matrix_build(const qspin_params* p, qspin_build kind, qspin_matrix** out) {
    return guarded([&] {
        if (!out) qspin::throw_invalid("null out pointer");
        const qspin::ModelParams& r = ready_params(p);
        auto m = std::make_unique<qspin_matrix>();
        switch (kind) {
            case QSPIN_BUILD_Z:
                m->m = qspin::build_z_hamiltonian(r);
                break;
            case QSPIN_BUILD_MEAN_FIELD:
                m->m = qspin::build_mean_field_hamiltonian(r);
                break;
            case QSPIN_BUILD_QUASI_INTEGRABLE:
                m->m = qspin::build_quasi_integrable(r);
                break;
            case QSPIN_BUILD_V_DIAG:
                m->m = std::move(qspin::build_interaction_terms(r).v_diag);
                break;
            case QSPIN_BUILD_V_BAND:
                m->m = std::move(qspin::build_interaction_terms(r).v_band);
                break;
            case QSPIN_BUILD_V_OFF:
                m->m = std::move(qspin::build_interaction_terms(r).v_off);
                break;
            default:
                qspin::throw_invalid("unknown build kind " + std::to_string(int(kind)));
        }
        *out = m.release();
    });
}

void qspin_matrix_destroy(qspin_matrix* m) { delete m; }

qspin_status qspin_matrix_dim(const qspin_matrix* m, int* out) {
    return guarded([&] {
        if (!m || !out) qspin::throw_invalid("null argument");
        *out = m->m.dim();
    });
}

qspin_status qspin_matrix_get(const qspin_matrix* m, int row, int col, double* re, double* im) {
    return guarded([&] {
        if (!m) qspin::throw_invalid("null matrix handle");
        if (row < 0 || col < 0 || row >= m->m.dim() || col >= m->m.dim())
            qspin::throw_invalid("matrix index out of range");
        const std::complex<double> v = m->m.at(row, col);
        if (re) *re = v.real();
        if (im) *im = v.imag();
    });
}

qspin_status qspin_matrix_max_abs(const qspin_matrix* m, double* out) {
    return guarded([&] {
        if (!m || !out) qspin::throw_invalid("null argument");
        *out = m->m.max_abs();
    });
}

qspin_status qspin_matrix_offdiagonal_count(const qspin_matrix* m, double threshold,
                                            int64_t* out) {
    return guarded([&] {
        if (!m || !out) qspin::throw_invalid("null argument");
        *out = qspin::count_offdiagonal(m->m, threshold);
    });
}

qspin_status qspin_matrix_write_triplets(const qspin_matrix* m, double threshold,
                                         const char* path, int overwrite) {
    return guarded([&] {
        if (!m || !path) qspin::throw_invalid("null argument");
        const std::string resolved = qspin::resolve_output_path(path);
        if (resolved == "-" || resolved.empty()) {
            qspin::write_triplets(m->m, threshold, std::cout);
            std::cout.flush();
            return;
        }
        namespace fs = std::filesystem;
        const fs::path target(resolved);
        if (fs::exists(target) && !overwrite)
            qspin::throw_io("refusing to overwrite existing output: " + resolved);
        fs::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) qspin::throw_io("cannot open for writing: " + tmp.string());
            qspin::write_triplets(m->m, threshold, f);
            f.flush();
            if (!f.good()) qspin::throw_io("write failed: " + tmp.string());
        }
        std::error_code ec;
        fs::rename(tmp, target, ec);
        if (ec)
            qspin::throw_io("cannot move output into place: " + target.string() + ": " +
                            ec.message());
    });
}

qspin_status qspin_eigh(const qspin_matrix* m, int want_vectors, int full_check,
                        qspin_spectrum** out) {
    return guarded([&] {
        if (!m || !out) qspin::throw_invalid("null argument");
        auto s = std::make_unique<qspin_spectrum>();
        s->s = qspin::eigh(m->m,
                           {.vectors = want_vectors != 0, .full_check = full_check != 0});
        *out = s.release();
    });
}

void qspin_spectrum_destroy(qspin_spectrum* s) { delete s; }

qspin_status qspin_spectrum_dim(const qspin_spectrum* s, int* out) {
    return guarded([&] {
        if (!s || !out) qspin::throw_invalid("null argument");
        *out = s->s.dim();
    });
}

qspin_status qspin_spectrum_eigenvalues(const qspin_spectrum* s, double* out, size_t cap,
                                        size_t* count) {
    if (!s) return fail(QSPIN_ERR_ARGUMENT, "null spectrum handle");
    return copy_doubles(s->s.eigenvalues, out, cap, count);
}

qspin_status qspin_spectrum_residual_bound(const qspin_spectrum* s, double* out) {
    return guarded([&] {
        if (!s || !out) qspin::throw_invalid("null argument");
        *out = s->s.residual_bound;
    });
}

qspin_status qspin_bands(const qspin_spectrum* s, const qspin_params* p, double gap_threshold,
                         qspin_band* out, size_t cap, size_t* count) {
    return guarded([&] {
        if (!count) qspin::throw_invalid("null count pointer");
        const auto bands = bands_of(s, p, gap_threshold);
        *count = bands.size();
        if (!out) return;
        if (cap < bands.size())
            qspin::throw_invalid("buffer holds " + std::to_string(cap) + " bands, need " +
                                 std::to_string(bands.size()));
        for (std::size_t i = 0; i < bands.size(); ++i)
            out[i] = qspin_band{bands[i].lo, bands[i].hi, bands[i].e_min, bands[i].e_max};
    });
}

qspin_status qspin_central_band(const qspin_spectrum* s, const qspin_params* p,
                                double gap_threshold, qspin_band* out) {
    return guarded([&] {
        if (!out) qspin::throw_invalid("null out pointer");
        const auto bands = bands_of(s, p, gap_threshold);
        const qspin::Band c = qspin::central_band(bands, s->s.eigenvalues);
        *out = qspin_band{c.lo, c.hi, c.e_min, c.e_max};
    });
}

qspin_status qspin_spacing_histogram(const qspin_spectrum* s, const qspin_band* band, int bins,
                                     double s_max, double* densities, double* edges,
                                     double* mean_spacing, size_t* samples) {
    return guarded([&] {
        if (!s || !band || !densities || !edges) qspin::throw_invalid("null argument");
        const qspin::Band b{band->lo, band->hi, band->e_min, band->e_max};
        const auto h = qspin::spacing_distribution(s->s, b, bins, s_max);
        std::copy(h.densities.begin(), h.densities.end(), densities);
        std::copy(h.bin_edges.begin(), h.bin_edges.end(), edges);
        if (mean_spacing) *mean_spacing = h.mean_spacing;
        if (samples) *samples = h.sample_count;
    });
}

qspin_status qspin_spacing_distance(const double* densities, int bins, double s_max,
                                    qspin_reference ref, double* l1, double* small_s_mass) {
    return guarded([&] {
        if (!densities) qspin::throw_invalid("null densities");
        if (bins < 1) qspin::throw_invalid("bins must be at least 1");
        if (!(s_max > 0.0)) qspin::throw_invalid("s_max must be positive");
        qspin::SpacingHistogram h;
        h.densities.assign(densities, densities + bins);
        h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
        for (int i = 0; i <= bins; ++i) h.bin_edges[i] = s_max * i / bins;
        const auto kind = ref == QSPIN_REF_POISSON ? qspin::ReferenceKind::Poisson
                                                   : qspin::ReferenceKind::WignerDyson;
        const auto d = qspin::distribution_distance(h, kind);
        if (l1) *l1 = d.l1;
        if (small_s_mass) *small_s_mass = d.small_s_mass;
    });
}

qspin_status qspin_band_metrics(const qspin_spectrum* s, const qspin_band* band, double* out,
                                size_t cap, size_t* count, double* mean_npc,
                                double* mean_sigma) {
    return guarded([&] {
        if (!s || !band || !count) qspin::throw_invalid("null argument");
        const qspin::Band b{band->lo, band->hi, band->e_min, band->e_max};
        const auto r = qspin::band_metrics(s->s, b, qspin::Representation::Z);
        *count = 3 * r.states.size();
        if (out) {
            if (cap < *count)
                qspin::throw_invalid("buffer holds " + std::to_string(cap) +
                                     " doubles, need " + std::to_string(*count));
            for (std::size_t i = 0; i < r.states.size(); ++i) {
                out[3 * i] = r.states[i].energy;
                out[3 * i + 1] = r.states[i].npc;
                out[3 * i + 2] = r.states[i].sigma;
            }
        }
        if (mean_npc) *mean_npc = r.mean_npc;
        if (mean_sigma) *mean_sigma = r.mean_sigma;
    });
}

qspin_status qspin_census(const qspin_params* p, double threshold, double* m_f,
                          double* delta_e_f, double* d_f) {
    return guarded([&] {
        const auto c = qspin::coupling_census(ready_params(p), threshold);
        if (m_f) *m_f = c.m_f_mean;
        if (delta_e_f) *delta_e_f = c.delta_e_f;
        if (d_f) *d_f = c.d_f;
    });
}

qspin_status qspin_theory_borders(const qspin_params* p, qspin_borders* out) {
    return guarded([&] {
        if (!out) qspin::throw_invalid("null out pointer");
        const auto b = qspin::borders(ready_params(p));
        *out = qspin_borders{b.n_cb,      b.width_j0, b.width_jdom,       b.j0_crossover,
                             b.jb_overlap, b.delta_e_f, b.m_f,            b.d_f,
                             b.j_cr_deloc, b.j_chaos,  b.j_cr_homogeneous};
    });
}

qspin_status qspin_sweep_echo(const char* config_text, char* buf, size_t cap, size_t* len) {
    return guarded([&] {
        if (!config_text || !len) qspin::throw_invalid("null argument");
        const std::string echo = qspin::config_echo(qspin::parse_config(config_text));
        *len = echo.size();
        if (!buf) return;
        if (cap < echo.size() + 1)
            qspin::throw_invalid("buffer holds " + std::to_string(cap) + " bytes, need " +
                                 std::to_string(echo.size() + 1));
        std::memcpy(buf, echo.c_str(), echo.size() + 1);
    });
}

qspin_status qspin_sweep_run(const char* config_text) {
    return guarded([&] {
        if (!config_text) qspin::throw_invalid("null config text");
        const qspin::SweepConfig cfg = qspin::parse_config(config_text);
        qspin::write_output(qspin::run_sweep(cfg), cfg);
    });
}

}  // extern "C"
