#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>

namespace qlps {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Qubit-index convention used across the whole library:
// qubit 0 is the MOST significant bit of the basis-state index, so the basis
// state |b0 b1 ... b_{n-1}> has index sum b_q * 2^(n-1-q). Kronecker products
// therefore compose left-factor-first: kron(A, B) acts on A's qubits followed
// by B's qubits.
inline int bit_position(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

inline int basis_bit(long index, int qubit, int n_qubits) {
    return static_cast<int>((index >> bit_position(qubit, n_qubits)) & 1);
}

Mat kron(const Mat& a, const Mat& b);

// Pauli matrices and friends.
const Mat& pauli_i();
const Mat& pauli_x();
const Mat& pauli_y();
const Mat& pauli_z();
const Mat& hadamard();

Vec basis_vector(int dim, int index);

// exp(i * s * H) for Hermitian H, via eigendecomposition.
Mat expm_i_hermitian(const Mat& h, double scale = 1.0);

// Hermitian G such that exp(i G) == U, principal branch. Throws
// ConstructionError when U is not unitary within tolerance.
Mat hermitian_generator(const Mat& u, double tol = 1e-9);

bool is_hermitian(const Mat& m, double tol = 1e-10);
bool is_unitary(const Mat& m, double tol = 1e-10);

// FNV-1a over raw bytes, used for cache keys and config hashes.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ull);
std::uint64_t fnv1a_matrix(const Mat& m, std::uint64_t seed = 1469598103934665603ull);

}  // namespace qlps
