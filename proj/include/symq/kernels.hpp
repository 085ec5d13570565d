#pragma once

#include <functional>

#include "symq/linalg.hpp"

namespace symq::kernels {

/// Number of worker threads the parallel kernels use: min(omp max threads,
/// SYMQ_THREADS if set).  Always 1 when built without OpenMP.
int configured_threads();

/// Overrides the SYMQ_THREADS-derived cap (0 restores the default).
void set_thread_cap(int threads);

/// Kronecker product, parallelized over blocks of the result.
Matrix kron(const Matrix& a, const Matrix& b);

/// vec(A): stacks the columns of A into a single column vector.
Vector vectorize(const Matrix& a);

/// Inverse of vectorize.  Throws Error(errc::bad_shape) on a length mismatch.
Matrix unvectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Sum over terms indexed 0..count-1 of weight-free accumulation
/// `accumulate(term, out)`: each row of `out` is owned by exactly one thread
/// and terms are always visited in index order, so results are bit-identical
/// for any thread count.  `rows`/`cols` size the zero-initialized output.
/// Used by the projector and block-quotient assemblies.
Matrix row_parallel_sum(Eigen::Index rows, Eigen::Index cols, int count,
                        const std::function<void(int term, Eigen::Index row, Eigen::RowVectorXcd&)>& add_row);

/// Runs body(i) for i in [0, n) across the configured threads.  Each index
/// must write only its own output slot; iteration order is unspecified.
void parallel_for(int n, const std::function<void(int)>& body);

namespace serial {
/// Reference implementations used as test oracles and by bench_kernels;
/// plain scalar loops, no threading.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix row_sum(Eigen::Index rows, Eigen::Index cols, int count,
               const std::function<void(int term, Eigen::Index row, Eigen::RowVectorXcd&)>& add_row);
}  // namespace serial

}  // namespace symq::kernels
