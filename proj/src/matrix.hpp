#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace qspin {

// Dense complex matrix, row-major. Hamiltonian builders only ever produce
// Hermitian instances; hermiticity_defect() lets callers assert that.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim)
        : dim_(dim), data_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

    int dim() const { return dim_; }
    bool empty() const { return data_.empty(); }

    std::complex<double>& at(int i, int j) { return data_[idx(i, j)]; }
    const std::complex<double>& at(int i, int j) const { return data_[idx(i, j)]; }

    std::complex<double>* data() { return data_.data(); }
    const std::complex<double>* data() const { return data_.data(); }

    double max_abs() const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    double frobenius_norm() const;
    std::complex<double> trace() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(j);
    }

    int dim_ = 0;
    std::vector<std::complex<double>> data_;
};

// C = op(A) * B with op = conjugate transpose when adjoint_a (BLAS zgemm).
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b, bool adjoint_a = false);

// Entries with |a_ij| > threshold as "row col re im" lines, row-major order,
// 17 significant digits.
void write_triplets(const ComplexMatrix& m, double threshold, std::ostream& out);

// Off-diagonal entries above threshold in the strict upper triangle.
long count_offdiagonal(const ComplexMatrix& m, double threshold);

}  // namespace qspin
