#include "eigensolve.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "error.hpp"

extern "C" void openblas_set_num_threads(int);

namespace qspin {

namespace {

using cd = std::complex<double>;

void force_single_thread() {
    static std::once_flag once;
    std::call_once(once, [] { openblas_set_num_threads(1); });
}

std::vector<int> sample_columns(int n, bool full) {
    std::vector<int> cols;
    if (full || n <= 16) {
        cols.resize(n);
        for (int j = 0; j < n; ++j) cols[j] = j;
        return cols;
    }
    for (int i = 0; i < 16; ++i)
        cols.push_back(static_cast<int>((static_cast<long>(i) * (n - 1)) / 15));
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

}  // namespace

Spectrum eigh(const ComplexMatrix& h, const EighOptions& opt) {
    const int n = h.dim();
    if (n < 1) throw_invalid("eigh: empty matrix");
    const double scale = h.max_abs();
    if (h.hermiticity_defect() > 1e-12 * std::max(scale, 1.0))
        throw_invalid("eigh: input is not Hermitian within tolerance");

    force_single_thread();

    Spectrum out;
    out.eigenvalues.resize(n);
    ComplexMatrix work = h;
    const char jobz = opt.vectors ? 'V' : 'N';
    const int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, jobz, 'L', n,
                                    work.data(), n, out.eigenvalues.data());
    if (info != 0)
        throw_numeric("eigh: zheevd failed (info=" + std::to_string(info) +
                      ", dim=" + std::to_string(n) + ")");
    if (!opt.vectors) return out;

    // Phase convention: largest-magnitude component real positive (first
    // index on ties).
    for (int j = 0; j < n; ++j) {
        int m = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double v = std::norm(work.at(i, j));
            if (v > best) {
                best = v;
                m = i;
            }
        }
        const cd pivot = work.at(m, j);
        const double mag = std::abs(pivot);
        if (mag > 0.0) {
            const cd phase = std::conj(pivot) / mag;
            for (int i = 0; i < n; ++i) work.at(i, j) *= phase;
        }
    }

    // Contract checks on a column sample (or every column with full_check):
    // gather V_s, form H V_s and V_s^dag V_s with gemm, compare.
    const auto cols = sample_columns(n, opt.full_check);
    const int k = static_cast<int>(cols.size());
    std::vector<cd> vs(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j)
            vs[static_cast<std::size_t>(i) * k + j] = work.at(i, cols[j]);

    const cd one(1.0, 0.0), zero(0.0, 0.0);
    std::vector<cd> hv(static_cast<std::size_t>(n) * k);
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, n, k, n,
                &one, h.data(), n, vs.data(), k, &zero, hv.data(), k);
    const double residual_cap = 1e-9 * std::max(h.frobenius_norm(), 1e-300);
    double worst = 0.0;
    for (int j = 0; j < k; ++j) {
        const double lambda = out.eigenvalues[cols[j]];
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const std::size_t ix = static_cast<std::size_t>(i) * k + j;
            r2 += std::norm(hv[ix] - lambda * vs[ix]);
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    if (worst > residual_cap)
        throw_numeric("eigh: residual " + std::to_string(worst) +
                      " exceeds 1e-9 * ||H||_F = " + std::to_string(residual_cap));

    std::vector<cd> gram(static_cast<std::size_t>(k) * k);
    cblas_zgemm(CblasRowMajor, CblasConjTrans, CblasNoTrans, k, k, n,
                &one, vs.data(), k, vs.data(), k, &zero, gram.data(), k);
    double gram_defect = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            const cd target = a == b ? one : zero;
            gram_defect = std::max(gram_defect,
                                   std::abs(gram[static_cast<std::size_t>(a) * k + b] - target));
        }
    if (gram_defect > 1e-9)
        throw_numeric("eigh: eigenvector orthonormality defect " +
                      std::to_string(gram_defect) + " exceeds 1e-9");

    out.eigenvectors = std::move(work);
    out.residual_bound = worst;
    return out;
}

}  // namespace qspin
