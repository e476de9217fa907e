/* C interface to the driven spin-chain diagonalization library.
 *
 * All functions return qspin_status; on any failure qspin_last_error()
 * carries a thread-local description of what went wrong. Objects returned
 * through out-parameters are owned by the caller and released with the
 * matching _destroy function. Array getters always report the full element
 * count through *count and copy only when the provided capacity suffices.
 */
#ifndef QSPIN_H
#define QSPIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QSPIN_API
#else
#define QSPIN_API __attribute__((visibility("default")))
#endif

typedef enum qspin_status {
    QSPIN_OK = 0,
    QSPIN_ERR_ARGUMENT = 1, /* invalid parameter or configuration */
    QSPIN_ERR_NUMERIC = 2,  /* solver or contract-check failure */
    QSPIN_ERR_IO = 3        /* file system failure */
} qspin_status;

typedef struct qspin_params qspin_params;
typedef struct qspin_matrix qspin_matrix;
typedef struct qspin_spectrum qspin_spectrum;

QSPIN_API const char* qspin_version(void);

/* Message from the most recent failing call on this thread ("" after a
 * success). The pointer stays valid until the next call on the thread. */
QSPIN_API const char* qspin_last_error(void);

/* ---- parameters ------------------------------------------------------- */

/* Fresh record with the library defaults (L=10, omega=100, omega0=100,
 * constant gradient a=1, nearest-neighbour coupling J=0). */
QSPIN_API qspin_status qspin_params_create(qspin_params** out);
QSPIN_API void qspin_params_destroy(qspin_params* p);

/* Textual assignment using the configuration-file keys: L, omega, omega0,
 * nu, profile (gradient|homogeneous|quadratic), a, delta, b, field_seed,
 * coupling (N|NN|A|custom), J, random, seed, allow_large. */
QSPIN_API qspin_status qspin_params_set(qspin_params* p, const char* key, const char* value);

/* Row-major L*L bond pattern for coupling=custom; multiplied by J. */
QSPIN_API qspin_status qspin_params_set_custom_matrix(qspin_params* p, const double* pattern,
                                                      size_t len);

/* Validates the record and freezes detunings (for the homogeneous profile
 * this draws one disorder realization from field_seed). Builders and getters
 * below require a finalized record; any later _set invalidates it. */
QSPIN_API qspin_status qspin_params_finalize(qspin_params* p);

QSPIN_API qspin_status qspin_params_dim(const qspin_params* p, int64_t* out);
QSPIN_API qspin_status qspin_params_detunings(const qspin_params* p, double* out, size_t cap,
                                              size_t* count);
QSPIN_API qspin_status qspin_params_coupling_matrix(const qspin_params* p, double* out,
                                                    size_t cap, size_t* count);
/* Quasi-particle energies epsilon_k = sqrt(delta_k^2 + omega^2) / 2. */
QSPIN_API qspin_status qspin_params_epsilons(const qspin_params* p, double* out, size_t cap,
                                             size_t* count);

/* ---- Hamiltonians ------------------------------------------------------ */

typedef enum qspin_build {
    QSPIN_BUILD_Z = 0,                /* rotating-frame H in the z basis */
    QSPIN_BUILD_MEAN_FIELD = 1,       /* D0 + V in the quasi-particle basis */
    QSPIN_BUILD_QUASI_INTEGRABLE = 2, /* solvable nearest-neighbour companion */
    QSPIN_BUILD_V_DIAG = 3,           /* interaction part conserving the basis state */
    QSPIN_BUILD_V_BAND = 4,           /* interaction part changing n_qp by 0 or +-2 */
    QSPIN_BUILD_V_OFF = 5             /* interaction part changing n_qp by +-1 */
} qspin_build;

QSPIN_API qspin_status qspin_matrix_build(const qspin_params* p, qspin_build kind,
                                          qspin_matrix** out);
QSPIN_API void qspin_matrix_destroy(qspin_matrix* m);
QSPIN_API qspin_status qspin_matrix_dim(const qspin_matrix* m, int* out);
QSPIN_API qspin_status qspin_matrix_get(const qspin_matrix* m, int row, int col, double* re,
                                        double* im);
QSPIN_API qspin_status qspin_matrix_max_abs(const qspin_matrix* m, double* out);
/* Strict upper-triangle entries with |value| > threshold. */
QSPIN_API qspin_status qspin_matrix_offdiagonal_count(const qspin_matrix* m, double threshold,
                                                      int64_t* out);
/* Sparse dump, one "row col re im" line per entry with |value| > threshold.
 * path "-" writes to stdout; otherwise refuses existing files unless
 * overwrite is nonzero. Relative paths resolve under QSPIN_OUTPUT_DIR. */
QSPIN_API qspin_status qspin_matrix_write_triplets(const qspin_matrix* m, double threshold,
                                                   const char* path, int overwrite);

/* ---- diagonalization --------------------------------------------------- */

/* Dense Hermitian eigensolve (ascending eigenvalues). want_vectors=0 solves
 * for eigenvalues only. full_check=1 verifies the residual and
 * orthonormality contract on every column instead of a 16-column sample. */
QSPIN_API qspin_status qspin_eigh(const qspin_matrix* m, int want_vectors, int full_check,
                                  qspin_spectrum** out);
QSPIN_API void qspin_spectrum_destroy(qspin_spectrum* s);
QSPIN_API qspin_status qspin_spectrum_dim(const qspin_spectrum* s, int* out);
QSPIN_API qspin_status qspin_spectrum_eigenvalues(const qspin_spectrum* s, double* out,
                                                  size_t cap, size_t* count);
/* Largest verified column residual, scaled by the Frobenius norm. */
QSPIN_API qspin_status qspin_spectrum_residual_bound(const qspin_spectrum* s, double* out);

/* ---- bands and spacing statistics -------------------------------------- */

typedef struct qspin_band {
    int lo, hi;          /* inclusive eigenvalue index range */
    double e_min, e_max; /* band edges */
} qspin_band;

/* Gap clustering of the spectrum; gap_threshold <= 0 selects omega/2. */
QSPIN_API qspin_status qspin_bands(const qspin_spectrum* s, const qspin_params* p,
                                   double gap_threshold, qspin_band* out, size_t cap,
                                   size_t* count);
QSPIN_API qspin_status qspin_central_band(const qspin_spectrum* s, const qspin_params* p,
                                          double gap_threshold, qspin_band* out);

/* In-band nearest-neighbour spacing histogram after constant mean-spacing
 * unfolding. densities has bins entries, edges bins+1. */
QSPIN_API qspin_status qspin_spacing_histogram(const qspin_spectrum* s, const qspin_band* band,
                                               int bins, double s_max, double* densities,
                                               double* edges, double* mean_spacing,
                                               size_t* samples);

typedef enum qspin_reference {
    QSPIN_REF_POISSON = 0,
    QSPIN_REF_WIGNER_DYSON = 1 /* GOE surmise (pi s / 2) exp(-pi s^2 / 4) */
} qspin_reference;

/* L1 distance between a normalized spacing histogram and a reference
 * density, plus the histogram mass below s = 0.1. */
QSPIN_API qspin_status qspin_spacing_distance(const double* densities, int bins, double s_max,
                                              qspin_reference ref, double* l1,
                                              double* small_s_mass);

/* ---- eigenstate metrics ------------------------------------------------ */

/* Per-state (energy, participation number, basis-index width) triplets for
 * the band, flattened row-major with stride 3; requires eigenvectors. The
 * amplitudes are read in the basis the matrix was built in. */
QSPIN_API qspin_status qspin_band_metrics(const qspin_spectrum* s, const qspin_band* band,
                                          double* out, size_t cap, size_t* count,
                                          double* mean_npc, double* mean_sigma);

/* Direct interaction census over the central unperturbed multiplet:
 * mean number of coupled states per row (m_f), their unperturbed energy
 * span (delta_e_f), and the implied coupled-level spacing d_f. */
QSPIN_API qspin_status qspin_census(const qspin_params* p, double threshold, double* m_f,
                                    double* delta_e_f, double* d_f);

/* ---- closed-form border estimates -------------------------------------- */

typedef struct qspin_borders {
    double n_cb;             /* central multiplet size C(L, L/2); 0 for odd L */
    double width_j0;         /* detuning-dominated central-band width */
    double width_jdom;       /* interaction-dominated width at the record's J */
    double j0_crossover;     /* J where the interaction takes over */
    double jb_overlap;       /* J where adjacent bands merge */
    double delta_e_f;        /* directly-coupled energy span */
    double m_f;              /* directly-coupled states per row */
    double d_f;              /* coupled-level spacing 2 a^2 / omega */
    double j_cr_deloc;       /* delocalization border 4 a^2 / omega */
    double j_chaos;          /* quantum chaos border */
    double j_cr_homogeneous; /* homogeneous-profile border; 0 otherwise */
} qspin_borders;

QSPIN_API qspin_status qspin_theory_borders(const qspin_params* p, qspin_borders* out);

/* ---- sweeps ------------------------------------------------------------ */

/* Validates configuration text (key = value lines, # comments) and writes
 * its canonical single-line echo. With buf NULL only *len is set. */
QSPIN_API qspin_status qspin_sweep_echo(const char* config_text, char* buf, size_t cap,
                                        size_t* len);

/* Parses configuration text, runs the grid x ensemble sweep, and writes the
 * result rows to the configured output (CSV or JSON lines). */
QSPIN_API qspin_status qspin_sweep_run(const char* config_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSPIN_H */
