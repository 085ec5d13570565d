#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "symq/error.hpp"

namespace symq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default tolerances used across the library.  All are overridable per call.
namespace tol {
inline constexpr double rank = 1e-9;       ///< relative, on singular values
inline constexpr double spectrum = 1e-8;   ///< absolute eigenvalue clustering
inline constexpr double residual = 1e-9;   ///< property/residual checks
inline constexpr double hermitian = 1e-10;  ///< max|M - M*|
inline constexpr double unitary = 1e-9;    ///< max|M*M - I|
}  // namespace tol

/// Eigenvalues sorted by (real part, imaginary part) and clustered with an
/// absolute tolerance; multiplicities sum to the matrix dimension.
struct Spectrum {
  std::vector<Complex> eigenvalues;  ///< one representative per cluster
  std::vector<int> multiplicities;
  /// Expands clusters back to a sorted list with repetitions.
  std::vector<Complex> expanded() const;
};

/// max |A_ij| over all entries; 0 for empty matrices.
double max_abs(const Matrix& m);

/// True when max|M - M*| <= tolerance.
bool is_hermitian(const Matrix& m, double tolerance = tol::hermitian);

/// True when max|M*M - I| <= tolerance.
bool is_unitary(const Matrix& m, double tolerance = tol::unitary);

/// Numerical rank from singular values with a relative threshold.
int numerical_rank(const Matrix& m, double rank_tol = tol::rank);

/// Orthonormal basis of ker(M) as columns, in a canonical form: column j has
/// its first nonzero entry at a strictly increasing row index, and that entry
/// is real and positive.  The result depends only on the nullspace as a
/// subspace, so reruns (and different input bases) reproduce it bit for bit.
/// A full-rank M yields a cols(M) x 0 matrix.
Matrix orthonormal_nullspace(const Matrix& m, double rank_tol = tol::rank);

/// Canonicalizes an orthonormal column basis in place (same form as
/// orthonormal_nullspace): unique reduced echelon of the span, re-orthonormalized.
Matrix canonical_basis(const Matrix& basis, double rank_tol = tol::rank);

/// Eigenvalues of a square matrix, clustered into a Spectrum.  The Hermitian
/// path uses a self-adjoint solver and guarantees real eigenvalues.
/// Throws Error(errc::eig_fail) when the underlying iteration fails.
Spectrum eig(const Matrix& m, bool hermitian, double cluster_tol = tol::spectrum);

/// Hermitian eigendecomposition M = Q diag(w) Q*; eigenvalues ascending.
void eig_hermitian(const Matrix& m, Eigen::VectorXd& eigenvalues, Matrix& eigenvectors);

/// dim ker((M - lambda I)^k): the order-k generalized eigenspace dimension.
int generalized_eigenspace_dim(const Matrix& m, Complex lambda, int k,
                               double rank_tol = tol::rank);

/// True when the sorted expanded spectra agree elementwise within cluster_tol.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double cluster_tol = tol::spectrum);

}  // namespace symq
