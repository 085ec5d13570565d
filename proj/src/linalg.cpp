#include "symq/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace symq {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_shape: return "BadShape";
    case errc::eig_fail: return "EigFail";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::not_unitary: return "NotUnitary";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::bad_index: return "BadIndex";
    case errc::not_pi_symmetric: return "NotPiSymmetric";
    case errc::incomplete_irrep_list: return "IncompleteIrrepList";
    case errc::bad_vertex_partition: return "BadVertexPartition";
    case errc::singular_a_ib: return "SingularAiB";
    case errc::singular_a_ikb: return "SingularAikB";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::potential_unsupported: return "PotentialUnsupported";
    case errc::reversal_edge: return "ReversalEdge";
    case errc::condition_not_met: return "ConditionNotMet";
    case errc::bad_partition: return "BadPartition";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  Matrix g = m.adjoint() * m;
  g.diagonal().array() -= 1.0;
  return max_abs(g) <= tolerance;
}

int numerical_rank(const Matrix& m, double rank_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = rank_tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return rank;
}

namespace {

// Unique reduced row echelon form of the rows of `m` (in-place result).
// Returns the pivot column of each nonzero row; rows below the returned
// count are numerically zero.  `zero_tol` decides pivot viability.
std::vector<Eigen::Index> reduced_row_echelon(Matrix& m, double zero_tol) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Largest remaining entry in this column for stability.
    Eigen::Index best = -1;
    double best_mag = zero_tol;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      const double mag = std::abs(m(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (best < 0) continue;
    m.row(row).swap(m.row(best));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != row && std::abs(m(r, col)) > 0.0) m.row(r) -= m(r, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Orthonormalizes echelon-form rows from the last upward so every pivot entry
// survives untouched (later rows vanish before earlier pivots), then rescales
// each vector's leading entry to be real and positive.
Matrix echelon_to_orthonormal_columns(const Matrix& echelon, const std::vector<Eigen::Index>& pivots) {
  const Eigen::Index d = static_cast<Eigen::Index>(pivots.size());
  const Eigen::Index p = echelon.cols();
  Matrix basis(p, d);
  for (Eigen::Index j = d - 1; j >= 0; --j) {
    Vector v = echelon.row(j).transpose();
    for (Eigen::Index mcol = j + 1; mcol < d; ++mcol)
      v -= basis.col(mcol).dot(v) * basis.col(mcol);
    v /= v.norm();
    // The pivot entry is real positive after normalization only up to a
    // phase; rotate so it is exactly real positive.
    const Complex lead = v(pivots[static_cast<size_t>(j)]);
    v *= std::abs(lead) / lead;
    basis.col(j) = v;
  }
  return basis;
}

}  // namespace

Matrix canonical_basis(const Matrix& basis, double rank_tol) {
  if (basis.cols() == 0) return basis;
  // Row space of basis^T is the spanned subspace; RREF of it is unique.
  Matrix rows = basis.transpose();
  const double scale = max_abs(rows);
  std::vector<Eigen::Index> pivots = reduced_row_echelon(rows, rank_tol * std::max(1.0, scale));
  rows.conservativeResize(static_cast<Eigen::Index>(pivots.size()), rows.cols());
  return echelon_to_orthonormal_columns(rows, pivots);
}

Matrix orthonormal_nullspace(const Matrix& m, double rank_tol) {
  if (m.rows() == 0 || m.cols() == 0) {
    // No constraints: the nullspace is everything, canonically the identity.
    return Matrix::Identity(m.cols(), m.cols());
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double threshold = (sv.size() > 0 && sv(0) > 0.0) ? rank_tol * sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  const Eigen::Index nullity = m.cols() - rank;
  if (nullity == 0) return Matrix(m.cols(), 0);
  Matrix raw = svd.matrixV().rightCols(nullity);
  return canonical_basis(raw, rank_tol);
}

std::vector<Complex> Spectrum::expanded() const {
  std::vector<Complex> out;
  for (size_t i = 0; i < eigenvalues.size(); ++i)
    out.insert(out.end(), static_cast<size_t>(multiplicities[i]), eigenvalues[i]);
  return out;
}

namespace {

Spectrum cluster_eigenvalues(std::vector<Complex> values, double cluster_tol) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  Spectrum spectrum;
  size_t i = 0;
  while (i < values.size()) {
    size_t j = i + 1;
    // Chain-merge: extend while consecutive values are within tolerance.
    while (j < values.size() && std::abs(values[j] - values[j - 1]) <= cluster_tol) ++j;
    Complex mean = 0.0;
    for (size_t t = i; t < j; ++t) mean += values[t];
    mean /= static_cast<double>(j - i);
    spectrum.eigenvalues.push_back(mean);
    spectrum.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  return spectrum;
}

}  // namespace

void eig_hermitian(const Matrix& m, Eigen::VectorXd& eigenvalues, Matrix& eigenvectors) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error(errc::eig_fail, "self-adjoint eigensolver did not converge (dimension " +
                                    std::to_string(m.rows()) + ")");
  eigenvalues = solver.eigenvalues();
  eigenvectors = solver.eigenvectors();
}

Spectrum eig(const Matrix& m, bool hermitian, double cluster_tol) {
  if (m.rows() != m.cols())
    throw Error(errc::bad_shape, "eig requires a square matrix, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (m.size() == 0) return Spectrum{};
  std::vector<Complex> values;
  values.reserve(static_cast<size_t>(m.rows()));
  if (hermitian) {
    Eigen::VectorXd w;
    Matrix q;
    eig_hermitian(m, w, q);
    for (Eigen::Index i = 0; i < w.size(); ++i) values.push_back(Complex(w(i), 0.0));
  } else {
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw Error(errc::eig_fail, "complex eigensolver did not converge (dimension " +
                                      std::to_string(m.rows()) + ")");
    for (Eigen::Index i = 0; i < m.rows(); ++i) values.push_back(solver.eigenvalues()(i));
  }
  return cluster_eigenvalues(std::move(values), cluster_tol);
}

int generalized_eigenspace_dim(const Matrix& m, Complex lambda, int k, double rank_tol) {
  if (m.rows() != m.cols())
    throw Error(errc::bad_shape, "generalized_eigenspace_dim requires a square matrix");
  if (k < 1) throw Error(errc::bad_index, "generalized eigenspace order must be >= 1");
  if (m.size() == 0) return 0;
  Matrix shifted = m;
  shifted.diagonal().array() -= lambda;
  Matrix power = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) power = power * shifted;

  // Rank relative to the scale of the input, not of the difference: when
  // lambda is an exact eigenvalue of a small block, (M - lambda I)^k can be
  // uniformly at roundoff level and its own largest singular value must not
  // be mistaken for signal.
  double scale = std::pow(max_abs(m) + std::abs(lambda), k);
  if (scale == 0.0) return static_cast<int>(m.cols());  // zero matrix, lambda 0
  Eigen::JacobiSVD<Matrix> svd(power);
  const auto& sv = svd.singularValues();
  const double threshold = rank_tol * std::max(sv.size() > 0 ? sv(0) : 0.0, scale);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return static_cast<int>(m.cols()) - rank;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double cluster_tol) {
  const std::vector<Complex> ea = a.expanded();
  const std::vector<Complex> eb = b.expanded();
  if (ea.size() != eb.size()) return false;
  for (size_t i = 0; i < ea.size(); ++i)
    if (std::abs(ea[i] - eb[i]) > cluster_tol) return false;
  return true;
}

}  // namespace symq
