#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "symq/kernels.hpp"

using namespace symq;
namespace ker = symq::kernels;

TEST_CASE("kron matches the serial reference and block semantics") {
  std::mt19937 rng(11);
  Matrix a = ts::random_hermitian(3, rng);
  Matrix b = ts::random_hermitian(4, rng);
  Matrix k = ker::kron(a, b);
  REQUIRE(k.rows() == 12);
  REQUIRE(k.cols() == 12);
  CHECK(ts::diff(k, ker::serial::kron(a, b)) == 0.0);
  // Block (i,j) of the result is a(i,j) * b.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(ts::near(k.block(4 * i, 4 * j, 4, 4), (a(i, j) * b).eval(), 0.0));
  // Mixed-product property.
  Matrix c = ts::random_hermitian(3, rng);
  Matrix d = ts::random_hermitian(4, rng);
  CHECK(ts::near(ker::kron((a * c).eval(), (b * d).eval()),
                 (ker::kron(a, b) * ker::kron(c, d)).eval(), 1e-10));
}

TEST_CASE("vectorize and unvectorize round-trip") {
  std::mt19937 rng(12);
  Matrix m = ts::random_hermitian(5, rng).topRows(3);  // 3x5, not square
  Vector v = ker::vectorize(m);
  REQUIRE(v.size() == 15);
  CHECK(ts::near(ker::unvectorize(v, 3, 5), m, 0.0));
  // Column stacking: vec(A X B) = (B^T ⊗ A) vec(X).
  Matrix a = ts::random_hermitian(3, rng);
  Matrix b = ts::random_hermitian(5, rng);
  Vector lhs = ker::vectorize((a * m * b).eval());
  Vector rhs = ker::kron(b.transpose(), a) * ker::vectorize(m);
  CHECK(ts::near(lhs, rhs, 1e-9));
  CHECK_THROWS_AS(ker::unvectorize(v, 4, 5), Error);
}

TEST_CASE("row_parallel_sum equals the serial reference for any thread cap") {
  std::mt19937 rng(13);
  const int rows = 17, cols = 9, count = 23;
  std::vector<Matrix> terms;
  for (int t = 0; t < count; ++t) {
    Matrix m(rows, cols);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
    terms.push_back(m);
  }
  auto add_row = [&](int term, Eigen::Index row, Eigen::RowVectorXcd& acc) {
    acc += terms[static_cast<size_t>(term)].row(row);
  };

  Matrix serial_sum = ker::serial::row_sum(rows, cols, count, add_row);
  Matrix expected = Matrix::Zero(rows, cols);
  for (const auto& m : terms) expected += m;
  CHECK(ts::near(serial_sum, expected, 1e-12));

  for (int cap : {1, 2, 3, 8}) {
    ker::set_thread_cap(cap);
    Matrix parallel_sum = ker::row_parallel_sum(rows, cols, count, add_row);
    // Per-row ownership + fixed term order means the result is bit-identical
    // to the serial reference regardless of the thread count.
    CHECK(ts::diff(parallel_sum, serial_sum) == 0.0);
  }
  ker::set_thread_cap(0);
}

TEST_CASE("configured_threads respects the cap and stays positive") {
  ker::set_thread_cap(2);
  CHECK(ker::configured_threads() >= 1);
  CHECK(ker::configured_threads() <= 2);
  ker::set_thread_cap(1);
  CHECK(ker::configured_threads() == 1);
  ker::set_thread_cap(0);
  CHECK(ker::configured_threads() >= 1);
}

TEST_CASE("parallel_for covers every index exactly once") {
  const int n = 101;
  std::vector<int> hits(n, 0);
  ker::set_thread_cap(4);
  ker::parallel_for(n, [&](int i) { hits[static_cast<size_t>(i)] += 1; });
  ker::set_thread_cap(0);
  for (int i = 0; i < n; ++i) CHECK(hits[static_cast<size_t>(i)] == 1);
}
