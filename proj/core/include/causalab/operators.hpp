// Dense complex-operator kernel: tensor products, subsystem bookkeeping,
// Bloch-sphere states, Hermitian operator bases, and seeded random draws.

#ifndef CAUSALAB_OPERATORS_HPP
#define CAUSALAB_OPERATORS_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace causalab {

using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr double kHermitianTol = 1e-10;

// Deterministic sub-stream derivation. Two rounds of splitmix64 over the
// (master, stream) pair so that nearby master seeds do not share streams.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

CMat identity(int d);

CMat kron(const CMat& a, const CMat& b);
CMat kron(const std::vector<CMat>& factors);

// Trace over every subsystem not listed in `keep` (0-based, strictly
// increasing). Kept subsystems stay in their original relative order.
CMat partial_trace(const CMat& op, const std::vector<int>& dims,
                   const std::vector<int>& keep);

// Permute tensor factors. perm[p] names the old subsystem that lands at new
// position p; the result acts on dims[perm[0]] x dims[perm[1]] x ...
CMat reorder_subsystems(const CMat& op, const std::vector<int>& dims,
                        const std::vector<int>& perm);

// Transpose the listed subsystems (0-based), leaving the rest untouched.
CMat partial_transpose(const CMat& op, const std::vector<int>& dims,
                       const std::vector<int>& subsystems);

// Qubit pure state with Bloch vector (sin t cos p, sin t sin p, cos t),
// angles in degrees.
CMat bloch_pure_state(double theta_deg, double phi_deg);

// Antipodal partner on the Bloch sphere; bloch_pure_state of the result is
// I - bloch_pure_state(theta_deg, phi_deg) up to rounding.
std::pair<double, double> antipode_deg(double theta_deg, double phi_deg);

// d^2 Hermitian operators spanning the d x d matrices, pairwise orthogonal
// under the Hilbert-Schmidt inner product. Element 0 is the identity; for
// d = 2 the rest are the Pauli matrices.
std::vector<CMat> hermitian_basis(int d);

// Haar-distributed unitary via QR of a Ginibre matrix with the phase fix
// that makes the distribution exactly invariant.
CMat haar_unitary(int d, Rng& rng);
CMat haar_unitary(int d, std::uint64_t seed);

// Effect U diag(u_1..u_d) U^dag with u_i uniform on [0,1], U Haar.
CMat random_effect(int d, Rng& rng);
CMat random_effect(int d, std::uint64_t seed);

// Density matrix G G^dag / tr(G G^dag) with G square Ginibre.
CMat random_density(int d, Rng& rng);
CMat random_density(int d, std::uint64_t seed);

// Haar-random pure state as a rank-1 density matrix.
CMat random_pure_density(int d, Rng& rng);

bool is_hermitian(const CMat& m, double tol = kHermitianTol);
double min_eigenvalue_hermitian(const CMat& m);

// Throw std::invalid_argument unless m is a density matrix / an effect
// (Hermitian, eigenvalues in the admissible range, unit trace for states).
void require_density(const CMat& m, const char* what, double tol = 1e-8);
void require_effect(const CMat& m, const char* what, double tol = 1e-8);

// Hilbert-Schmidt inner product tr(a^dag b); real for Hermitian arguments.
double hs_inner_real(const CMat& a, const CMat& b);

double frobenius_distance(const CMat& a, const CMat& b);

}  // namespace causalab

#endif
