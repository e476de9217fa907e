#pragma once

#include <vector>

#include "matrix.hpp"

namespace qspin {

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    // Column j pairs with eigenvalues[j]; empty when vectors were not
    // requested. Phases follow the model convention (largest-magnitude
    // component real positive).
    ComplexMatrix eigenvectors;
    // max sampled ||H v_j - lambda_j v_j||_2; -1 when vectors were skipped.
    double residual_bound = -1.0;

    bool has_vectors() const { return !eigenvectors.empty(); }
    int dim() const { return static_cast<int>(eigenvalues.size()); }
};

struct EighOptions {
    bool vectors = true;
    // Check the residual and orthonormality contract on every column instead
    // of an evenly spaced 16-column sample. O(N^3), meant for tests.
    bool full_check = false;
};

// Dense Hermitian eigendecomposition (LAPACK zheevd, divide and conquer),
// single-threaded per solve. Contract, checked on sampled (or all) columns:
//   ||H v_j - lambda_j v_j||_2 <= 1e-9 ||H||_F
//   ||V^dag V - I||_max        <= 1e-9
// Violations and convergence failures raise Error(2); input with hermiticity
// defect > 1e-12 max|H| raises Error(1).
Spectrum eigh(const ComplexMatrix& h, const EighOptions& opt = {});

}  // namespace qspin
