#include "symq/divisors.hpp"

#include <cmath>
#include <string>

#include "symq/error.hpp"
#include "symq/quotient.hpp"

namespace symq {

void validate_partition(const Partition& blocks, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& block : blocks) {
    if (block.empty())
      throw Error(errc::bad_partition, "empty block");
    for (int v : block) {
      if (v < 0 || v >= n)
        throw Error(errc::bad_partition,
                    "index " + std::to_string(v) + " outside 0.." +
                        std::to_string(n - 1));
      if (seen[static_cast<size_t>(v)])
        throw Error(errc::bad_partition,
                    "index " + std::to_string(v) + " appears twice");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<size_t>(v)])
      throw Error(errc::bad_partition,
                  "index " + std::to_string(v) + " is not covered");
}

DivisorReport check_divisor(const Matrix& a, const Partition& blocks,
                            double tolerance) {
  if (a.rows() != a.cols())
    throw Error(errc::bad_shape, "adjacency matrix must be square");
  const int n = static_cast<int>(a.rows());
  validate_partition(blocks, n);
  const int m = static_cast<int>(blocks.size());

  DivisorReport report;
  report.front = true;
  report.rear = true;
  report.front_matrix = Matrix::Zero(m, m);
  report.rear_matrix = Matrix::Zero(m, m);

  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu) {
      // Row sums from block mu into block nu must not depend on the row.
      bool first = true;
      Complex common = 0.0;
      for (int i : blocks[static_cast<size_t>(mu)]) {
        Complex sum = 0.0;
        for (int j : blocks[static_cast<size_t>(nu)]) sum += a(i, j);
        if (first) {
          common = sum;
          first = false;
        } else if (std::abs(sum - common) > tolerance) {
          report.front = false;
        }
      }
      report.front_matrix(mu, nu) = common;

      first = true;
      common = 0.0;
      for (int j : blocks[static_cast<size_t>(nu)]) {
        Complex sum = 0.0;
        for (int i : blocks[static_cast<size_t>(mu)]) sum += a(i, j);
        if (first) {
          common = sum;
          first = false;
        } else if (std::abs(sum - common) > tolerance) {
          report.rear = false;
        }
      }
      report.rear_matrix(mu, nu) = common;
    }
  return report;
}

Matrix y_projector(const Partition& blocks) {
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  validate_partition(blocks, n);
  Matrix y = Matrix::Zero(n, n);
  for (const auto& block : blocks) {
    const double w = 1.0 / static_cast<double>(block.size());
    for (int u : block)
      for (int v : block) y(u, v) = w;
  }
  return y;
}

DivisorQuotientReport divisor_vs_trivial_quotient(const Matrix& a,
                                                  const Representation& pi,
                                                  double residual_tol) {
  const auto orbit_data = pi.group().orbits();
  DivisorQuotientReport report;
  report.partition = orbit_data.orbits;

  DivisorReport divisor = check_divisor(a, report.partition);
  report.divisor = divisor.front_matrix;

  Representation trivial = Representation::trivial(pi.group());
  QuotientResult q = quotient(a, orbit_adapted_basis(trivial, pi));
  report.quotient = q.matrix;

  const int m = static_cast<int>(report.partition.size());
  Matrix v = Matrix::Zero(m, m);
  for (int mu = 0; mu < m; ++mu)
    v(mu, mu) = std::sqrt(
        static_cast<double>(report.partition[static_cast<size_t>(mu)].size()));
  report.similarity = v * report.divisor * v.inverse();

  report.max_difference = max_abs(report.quotient - report.similarity);
  report.pass = divisor.front && report.max_difference <= residual_tol;
  return report;
}

}  // namespace symq
