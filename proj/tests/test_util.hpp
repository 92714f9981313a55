#pragma once

#include <random>

#include "qlps/density_engine.hpp"

namespace qlps::testing {

inline Mat random_ginibre(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat m(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

inline Mat random_density(int dim, std::mt19937_64& rng) {
    Mat g = random_ginibre(dim, rng);
    Mat rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline Mat random_unitary(int dim, std::mt19937_64& rng) {
    Mat g = random_ginibre(dim, rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (long i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

inline DensityState random_state(int n, std::mt19937_64& rng) {
    DensityState s;
    s.n_qubits = n;
    s.rho = random_density(1 << n, rng);
    return s;
}

inline Vec random_pure(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(dim);
    for (long i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
    return v / v.norm();
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Largest entrywise difference modulo a global phase.
inline double max_abs_diff_up_to_phase(const Mat& a, const Mat& b) {
    long imax = 0, jmax = 0;
    double best = 0;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (std::abs(a(i, j)) > best) {
                best = std::abs(a(i, j));
                imax = i;
                jmax = j;
            }
    if (best < 1e-12) return max_abs_diff(a, b);
    const cplx phase = b(imax, jmax) / a(imax, jmax);
    if (std::abs(std::abs(phase) - 1.0) > 1e-6) return max_abs_diff(a, b);
    return max_abs_diff(a * phase, b);
}

}  // namespace qlps::testing
