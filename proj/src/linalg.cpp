#include "qlps/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cstring>

#include "qlps/errors.hpp"

namespace qlps {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace {
Mat make2(cplx a, cplx b, cplx c, cplx d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}
}  // namespace

const Mat& pauli_i() {
    static const Mat m = make2(1, 0, 0, 1);
    return m;
}
const Mat& pauli_x() {
    static const Mat m = make2(0, 1, 1, 0);
    return m;
}
const Mat& pauli_y() {
    static const Mat m = make2(0, cplx(0, -1), cplx(0, 1), 0);
    return m;
}
const Mat& pauli_z() {
    static const Mat m = make2(1, 0, 0, -1);
    return m;
}
const Mat& hadamard() {
    static const Mat m = make2(1, 1, 1, -1) / std::sqrt(2.0);
    return m;
}

Vec basis_vector(int dim, int index) {
    Vec v = Vec::Zero(dim);
    v(index) = 1.0;
    return v;
}

Mat expm_i_hermitian(const Mat& h, double scale) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    if (es.info() != Eigen::Success) throw ConstructionError("eigendecomposition failed");
    const auto& lambda = es.eigenvalues();
    Vec phases(lambda.size());
    for (long i = 0; i < lambda.size(); ++i)
        phases(i) = std::exp(cplx(0.0, scale * lambda(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat hermitian_generator(const Mat& u, double tol) {
    if (!is_unitary(u, tol)) throw ConstructionError("hermitian_generator: input is not unitary");
    Eigen::ComplexSchur<Mat> schur(u);
    if (schur.info() != Eigen::Success) throw ConstructionError("Schur decomposition failed");
    const Mat& t = schur.matrixT();
    // A unitary matrix is normal, so its Schur form is diagonal up to roundoff.
    for (long i = 0; i < t.rows(); ++i)
        for (long j = i + 1; j < t.cols(); ++j)
            if (std::abs(t(i, j)) > 1e-8)
                throw ConstructionError("hermitian_generator: Schur form not diagonal");
    Eigen::VectorXd angles(t.rows());
    for (long i = 0; i < t.rows(); ++i) angles(i) = std::arg(t(i, i));
    Mat g = schur.matrixU() * angles.cast<cplx>().asDiagonal() * schur.matrixU().adjoint();
    g = (g + g.adjoint()).eval() / 2.0;
    if ((expm_i_hermitian(g) - u).cwiseAbs().maxCoeff() > 1e-9)
        throw ConstructionError("hermitian_generator: exp(iG) does not reproduce U");
    return g;
}

bool is_hermitian(const Mat& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& m, double tol) {
    Mat d = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a_matrix(const Mat& m, std::uint64_t seed) {
    std::uint64_t h = fnv1a(&seed, sizeof(seed), seed);
    long rows = m.rows(), cols = m.cols();
    h = fnv1a(&rows, sizeof(rows), h);
    h = fnv1a(&cols, sizeof(cols), h);
    return fnv1a(m.data(), sizeof(cplx) * static_cast<std::size_t>(m.size()), h);
}

}  // namespace qlps
