#include "symq/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symq::kernels {

namespace {
std::atomic<int> thread_cap{0};

int env_thread_cap() {
  static const int cached = [] {
    const char* raw = std::getenv("SYMQ_THREADS");
    if (!raw) return 0;
    const int parsed = std::atoi(raw);
    return parsed > 0 ? parsed : 0;
  }();
  return cached;
}
}  // namespace

void set_thread_cap(int threads) { thread_cap.store(threads > 0 ? threads : 0); }

int configured_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  const int explicit_cap = thread_cap.load();
  const int env_cap = env_thread_cap();
  if (explicit_cap > 0 && explicit_cap < n) n = explicit_cap;
  if (env_cap > 0 && env_cap < n) n = env_cap;
  return n > 0 ? n : 1;
#else
  return 1;
#endif
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  Matrix out(ar * br, ac * bc);
  const Eigen::Index blocks = ar * ac;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(configured_threads())
#endif
  for (Eigen::Index t = 0; t < blocks; ++t) {
    const Eigen::Index i = t / ac;
    const Eigen::Index j = t % ac;
    out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  }
  return out;
}

Vector vectorize(const Matrix& a) {
  Vector v(a.size());
  Eigen::Index at = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) v(at++) = a(i, j);
  return v;
}

Matrix unvectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw Error(errc::bad_shape, "unvectorize: vector length " + std::to_string(v.size()) +
                                     " != " + std::to_string(rows) + "*" + std::to_string(cols));
  Matrix a(rows, cols);
  Eigen::Index at = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = v(at++);
  return a;
}

Matrix row_parallel_sum(Eigen::Index rows, Eigen::Index cols, int count,
                        const std::function<void(int, Eigen::Index, Eigen::RowVectorXcd&)>& add_row) {
  Matrix out = Matrix::Zero(rows, cols);
#ifdef _OPENMP
#pragma omp parallel num_threads(configured_threads())
#endif
  {
    Eigen::RowVectorXcd row(cols);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (Eigen::Index r = 0; r < rows; ++r) {
      row.setZero();
      // Terms visited in a fixed order per row keeps rounding deterministic.
      for (int term = 0; term < count; ++term) add_row(term, r, row);
      out.row(r) = row;
    }
  }
  return out;
}

void parallel_for(int n, const std::function<void(int)>& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(configured_threads())
#endif
  for (int i = 0; i < n; ++i) body(i);
}

namespace serial {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix row_sum(Eigen::Index rows, Eigen::Index cols, int count,
               const std::function<void(int, Eigen::Index, Eigen::RowVectorXcd&)>& add_row) {
  Matrix out = Matrix::Zero(rows, cols);
  Eigen::RowVectorXcd row(cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    row.setZero();
    for (int term = 0; term < count; ++term) add_row(term, r, row);
    out.row(r) = row;
  }
  return out;
}

}  // namespace serial

}  // namespace symq::kernels
