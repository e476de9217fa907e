#include "hamiltonian.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace qspin {

namespace {

using cd = std::complex<double>;
using Block = std::array<cd, 4>;  // row-major 2x2

// Spin-1/2 operators in the {0 = up (+1/2), 1 = down (-1/2)} basis.
const Block kIz = {cd(0.5, 0.0), cd(0.0, 0.0), cd(0.0, 0.0), cd(-0.5, 0.0)};
const Block kIy = {cd(0.0, 0.0), cd(0.0, -0.5), cd(0.0, 0.5), cd(0.0, 0.0)};

void check_build_size(const ModelParams& p) {
    const int cap = p.allow_large ? 26 : 14;
    if (p.L > cap)
        throw_invalid("L=" + std::to_string(p.L) + " exceeds the dense build guard (" +
                      std::to_string(cap) + (p.allow_large ? ")" : "); set allow_large to lift"));
    if (p.detunings.size() != static_cast<std::size_t>(p.L))
        throw_invalid("params not materialized; call make_params first");
}

inline double mz(int s, int k) { return (s >> k) & 1 ? -0.5 : 0.5; }

// M += w * A_k B_n acting on qubits k != n, O(4 N) per bond.
void add_two_site(ComplexMatrix& m, int L, int k, int n, cd w, const Block& a, const Block& b) {
    const int N = 1 << L;
    for (int s = 0; s < N; ++s) {
        const int ak = (s >> k) & 1;
        const int bn = (s >> n) & 1;
        const int base = s & ~(1 << k) & ~(1 << n);
        for (int ar = 0; ar < 2; ++ar) {
            const cd av = a[ar * 2 + ak];
            if (av == cd(0.0, 0.0)) continue;
            for (int br = 0; br < 2; ++br) {
                const cd bv = b[br * 2 + bn];
                if (bv == cd(0.0, 0.0)) continue;
                const int row = base | (ar << k) | (br << n);
                m.at(row, s) += w * av * bv;
            }
        }
    }
}

struct Bond {
    int k, n;
    double j;
};

std::vector<Bond> bond_list(const ModelParams& p) {
    const auto jm = coupling_matrix(p.coupling, p.L);
    std::vector<Bond> bonds;
    for (int k = 0; k < p.L; ++k)
        for (int n = k + 1; n < p.L; ++n)
            if (jm[static_cast<std::size_t>(k) * p.L + n] != 0.0)
                bonds.push_back({k, n, jm[static_cast<std::size_t>(k) * p.L + n]});
    return bonds;
}

}  // namespace

ComplexMatrix build_z_hamiltonian(const ModelParams& p) {
    check_build_size(p);
    const int N = p.dim();
    const auto bonds = bond_list(p);
    ComplexMatrix h(N);
    const cd flip(0.0, 0.5 * p.omega);  // <s + 2^k| Omega I^y_k |s> for bit k = 0
    for (int s = 0; s < N; ++s) {
        double diag = 0.0;
        for (int k = 0; k < p.L; ++k) diag -= p.detunings[k] * mz(s, k);
        for (const auto& b : bonds) diag -= 2.0 * b.j * mz(s, b.k) * mz(s, b.n);
        h.at(s, s) = diag;
        for (int k = 0; k < p.L; ++k) {
            if ((s >> k) & 1) continue;
            const int sp = s | (1 << k);
            h.at(sp, s) = flip;
            h.at(s, sp) = std::conj(flip);
        }
    }
    return h;
}

MeanFieldData mean_field(const ModelParams& p) {
    if (p.detunings.size() != static_cast<std::size_t>(p.L))
        throw_invalid("params not materialized; call make_params first");
    MeanFieldData mf;
    mf.epsilons.resize(p.L);
    mf.a_coeffs.resize(p.L);
    mf.b_coeffs.resize(p.L);
    mf.blocks.resize(p.L);
    for (int k = 0; k < p.L; ++k) {
        const double delta = p.detunings[k];
        const double gamma = std::hypot(delta, p.omega);
        mf.epsilons[k] = 0.5 * gamma;
        mf.a_coeffs[k] = p.omega / gamma;
        mf.b_coeffs[k] = -delta / gamma;
        // Eigenvectors of h_k = [[-delta/2, -i Omega/2], [i Omega/2, delta/2]]:
        // column 0 = (c, -i s), column 1 = (-i s, c) with
        // c = Omega/sqrt(Omega^2 + t^2), s = t/sqrt(Omega^2 + t^2), t = gamma - delta.
        const double t = gamma - delta;
        const double norm = std::hypot(p.omega, t);
        const double c = p.omega / norm;
        const double s = t / norm;
        if (s > c) {
            // Dominant component is the off-diagonal one; a global factor i
            // makes it real positive in both columns.
            mf.blocks[k] = {cd(0.0, c), cd(s, 0.0), cd(s, 0.0), cd(0.0, c)};
        } else {
            mf.blocks[k] = {cd(c, 0.0), cd(0.0, -s), cd(0.0, -s), cd(c, 0.0)};
        }
    }
    return mf;
}

ComplexMatrix MeanFieldData::rotation() const {
    const int L = qubits();
    ComplexMatrix u(1);
    u.at(0, 0) = 1.0;
    for (int k = 0; k < L; ++k) {
        const int nd = 1 << k;
        ComplexMatrix next(nd * 2);
        const Block& b = blocks[k];
        for (int hi_r = 0; hi_r < 2; ++hi_r)
            for (int hi_c = 0; hi_c < 2; ++hi_c) {
                const cd f = b[hi_r * 2 + hi_c];
                if (f == cd(0.0, 0.0)) continue;
                for (int r = 0; r < nd; ++r)
                    for (int c = 0; c < nd; ++c)
                        next.at((hi_r << k) | r, (hi_c << k) | c) = f * u.at(r, c);
            }
        u = std::move(next);
    }
    return u;
}

std::vector<double> unperturbed_diagonal(const MeanFieldData& mf) {
    const int L = mf.qubits();
    const int N = 1 << L;
    std::vector<double> d(static_cast<std::size_t>(N), 0.0);
    for (int s = 0; s < N; ++s) {
        double e = 0.0;
        for (int k = 0; k < L; ++k) e += (s >> k) & 1 ? mf.epsilons[k] : -mf.epsilons[k];
        d[s] = e;
    }
    return d;
}

InteractionTerms build_interaction_terms(const ModelParams& p) {
    check_build_size(p);
    const auto mf = mean_field(p);
    const auto bonds = bond_list(p);
    const int N = p.dim();
    InteractionTerms t{ComplexMatrix(N), ComplexMatrix(N), ComplexMatrix(N)};
    for (const auto& b : bonds) {
        const double ak = mf.a_coeffs[b.k], an = mf.a_coeffs[b.n];
        const double bk = mf.b_coeffs[b.k], bn = mf.b_coeffs[b.n];
        add_two_site(t.v_diag, p.L, b.k, b.n, -2.0 * b.j * bk * bn, kIz, kIz);
        add_two_site(t.v_band, p.L, b.k, b.n, -2.0 * b.j * ak * an, kIy, kIy);
        add_two_site(t.v_off, p.L, b.k, b.n, 2.0 * b.j * ak * bn, kIy, kIz);
        add_two_site(t.v_off, p.L, b.k, b.n, 2.0 * b.j * bk * an, kIz, kIy);
    }
    return t;
}

ComplexMatrix build_mean_field_hamiltonian(const ModelParams& p) {
    check_build_size(p);
    const auto mf = mean_field(p);
    const auto bonds = bond_list(p);
    const int N = p.dim();
    ComplexMatrix h(N);
    for (const auto& b : bonds) {
        const double ak = mf.a_coeffs[b.k], an = mf.a_coeffs[b.n];
        const double bk = mf.b_coeffs[b.k], bn = mf.b_coeffs[b.n];
        add_two_site(h, p.L, b.k, b.n, -2.0 * b.j * bk * bn, kIz, kIz);
        add_two_site(h, p.L, b.k, b.n, -2.0 * b.j * ak * an, kIy, kIy);
        add_two_site(h, p.L, b.k, b.n, 2.0 * b.j * ak * bn, kIy, kIz);
        add_two_site(h, p.L, b.k, b.n, 2.0 * b.j * bk * an, kIz, kIy);
    }
    const auto d0 = unperturbed_diagonal(mf);
    for (int s = 0; s < N; ++s) h.at(s, s) += d0[s];
    return h;
}

ComplexMatrix build_quasi_integrable(const ModelParams& p) {
    check_build_size(p);
    if (p.coupling.kind != CouplingKind::N)
        throw_invalid("quasi-integrable build requires nearest-neighbour coupling");
    const auto mf = mean_field(p);
    const auto bonds = bond_list(p);
    const int N = p.dim();
    ComplexMatrix h(N);
    for (int s = 0; s < N; ++s) {
        double diag = 0.0;
        for (int k = 0; k < p.L; ++k) diag += 2.0 * mf.epsilons[k] * mz(s, k);
        h.at(s, s) = diag;
    }
    for (const auto& b : bonds) add_two_site(h, p.L, b.k, b.n, -2.0 * b.j, kIy, kIy);
    return h;
}

void rotate_columns(const MeanFieldData& mf, ComplexMatrix& m) {
    const int L = mf.qubits();
    const int N = 1 << L;
    if (m.dim() != N) throw_invalid("rotate_columns: dimension mismatch");
    for (int k = 0; k < L; ++k) {
        const Block& b = mf.blocks[k];
        const int bit = 1 << k;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                if (c & bit) continue;
                const cd x0 = m.at(r, c);
                const cd x1 = m.at(r, c | bit);
                m.at(r, c) = x0 * b[0] + x1 * b[2];
                m.at(r, c | bit) = x0 * b[1] + x1 * b[3];
            }
    }
}

void rotate_rows_adjoint(const MeanFieldData& mf, ComplexMatrix& m) {
    const int L = mf.qubits();
    const int N = 1 << L;
    if (m.dim() != N) throw_invalid("rotate_rows_adjoint: dimension mismatch");
    for (int k = 0; k < L; ++k) {
        const Block& b = mf.blocks[k];
        const int bit = 1 << k;
        for (int r = 0; r < N; ++r) {
            if (r & bit) continue;
            for (int c = 0; c < N; ++c) {
                const cd x0 = m.at(r, c);
                const cd x1 = m.at(r | bit, c);
                m.at(r, c) = std::conj(b[0]) * x0 + std::conj(b[2]) * x1;
                m.at(r | bit, c) = std::conj(b[1]) * x0 + std::conj(b[3]) * x1;
            }
        }
    }
}

ComplexMatrix to_mean_field_basis(const MeanFieldData& mf, const ComplexMatrix& h) {
    ComplexMatrix out = h;
    rotate_columns(mf, out);
    rotate_rows_adjoint(mf, out);
    return out;
}

}  // namespace qspin
