#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace omitread {

template <std::size_t N>
using MatNc = std::array<std::array<std::complex<double>, N>, N>;

template <std::size_t N>
struct EigResult {
    std::array<double, N> values;
    MatNc<N> vectors; // eigenvectors as columns, vectors[row][col]
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
// Each sweep rotates away every off-diagonal pair; convergence is reached
// when the off-diagonal Frobenius norm drops below 1e-14 of the matrix
// scale. Plenty for the 4x4 level Hamiltonians this library builds, and
// it keeps the core dependency-free.
template <std::size_t N>
EigResult<N> hermitian_eig(MatNc<N> h) {
    using cplx = std::complex<double>;
    MatNc<N> v{};
    for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) scale = std::max(scale, std::abs(h[i][j]));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += std::norm(h[p][q]);
        if (std::sqrt(off) < 1e-14 * scale) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx g = h[p][q];
                const double ag = std::abs(g);
                if (ag < 1e-300) continue;
                const cplx phase = g / ag; // e^{i phi}
                const double alpha = h[p][p].real();
                const double beta = h[q][q].real();
                const double tau = (alpha - beta) / (2.0 * ag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // columns of the rotation acting on (p, q):
                //   new_p =  c * e_p + s * conj(phase) * e_q
                //   new_q = -s * phase * e_p + c * e_q
                const cplx vpp = c, vpq = -s * phase;
                const cplx vqp = s * std::conj(phase), vqq = c;

                for (std::size_t k = 0; k < N; ++k) { // H <- V^dag H V, columns
                    const cplx hkp = h[k][p], hkq = h[k][q];
                    h[k][p] = hkp * vpp + hkq * vqp;
                    h[k][q] = hkp * vpq + hkq * vqq;
                }
                for (std::size_t k = 0; k < N; ++k) { // rows
                    const cplx hpk = h[p][k], hqk = h[q][k];
                    h[p][k] = std::conj(vpp) * hpk + std::conj(vqp) * hqk;
                    h[q][k] = std::conj(vpq) * hpk + std::conj(vqq) * hqk;
                }
                for (std::size_t k = 0; k < N; ++k) { // accumulate eigenvectors
                    const cplx vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = vkp * vpp + vkq * vqp;
                    v[k][q] = vkp * vpq + vkq * vqq;
                }
                h[p][q] = 0.0;
                h[q][p] = 0.0;
            }
        }
    }

    EigResult<N> r;
    for (std::size_t i = 0; i < N; ++i) r.values[i] = h[i][i].real();
    r.vectors = v;
    return r;
}

} // namespace omitread
