#include "matrix.hpp"

#include <cblas.h>

#include <cmath>
#include <cstdio>
#include <ostream>

#include "error.hpp"

namespace qspin {

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
    return d;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

std::complex<double> ComplexMatrix::trace() const {
    std::complex<double> t = 0.0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b, bool adjoint_a) {
    if (a.dim() != b.dim()) throw_invalid("multiply: dimension mismatch");
    const int n = a.dim();
    ComplexMatrix c(n);
    const std::complex<double> one(1.0, 0.0), zero(0.0, 0.0);
    cblas_zgemm(CblasRowMajor, adjoint_a ? CblasConjTrans : CblasNoTrans, CblasNoTrans,
                n, n, n, &one, a.data(), n, b.data(), n, &zero, c.data(), n);
    return c;
}

void write_triplets(const ComplexMatrix& m, double threshold, std::ostream& out) {
    char buf[128];
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            const std::complex<double> z = m.at(i, j);
            if (std::abs(z) > threshold) {
                std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", i, j, z.real(), z.imag());
                out << buf;
            }
        }
    }
}

long count_offdiagonal(const ComplexMatrix& m, double threshold) {
    long count = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            if (std::abs(m.at(i, j)) > threshold) ++count;
    return count;
}

}  // namespace qspin
