#pragma once

#include <vector>

#include "symq/linalg.hpp"
#include "symq/representation.hpp"

namespace symq {

/// An ordered partition of {0..n-1} into blocks; used for divisor checks.
using Partition = std::vector<std::vector<int>>;

/// Throws Error(errc::bad_partition) unless the blocks cover {0..n-1}
/// disjointly and are non-empty.
void validate_partition(const Partition& blocks, int n);

/// Divisor test for a (multi-)digraph adjacency matrix.  The partition is a
/// front divisor when, inside every block pair (mu, nu), each row of block mu
/// has the same total weight into block nu; rear is the column analogue.
struct DivisorReport {
  bool front = false;
  bool rear = false;
  Matrix front_matrix;  ///< m x m block row-sum matrix (meaningful when front)
  Matrix rear_matrix;   ///< m x m block column-sum matrix (meaningful when rear)
};
DivisorReport check_divisor(const Matrix& a, const Partition& blocks,
                            double tolerance = 1e-9);

/// Block-averaging projector Y = diag over blocks of (1/|C|) * all-ones.
/// Satisfies Y^2 = Y = Y*; commutes with A exactly when the partition is a
/// two-sided divisor of A.
Matrix y_projector(const Partition& blocks);

/// Connects the front divisor of the orbit partition to the trivial-
/// representation quotient:  Theta* A Theta = V D V^{-1} with
/// V = diag(sqrt |C_mu|).
struct DivisorQuotientReport {
  Partition partition;     ///< orbit partition, ordered by minimal element
  Matrix divisor;          ///< front divisor matrix D
  Matrix quotient;         ///< Theta* A Theta, trivial-rep orbit-adapted basis
  Matrix similarity;       ///< V D V^{-1}
  double max_difference = 0.0;
  bool pass = false;
};
DivisorQuotientReport divisor_vs_trivial_quotient(const Matrix& a,
                                                  const Representation& pi,
                                                  double residual_tol = 1e-10);

}  // namespace symq
