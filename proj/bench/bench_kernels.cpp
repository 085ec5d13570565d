// bench_kernels - wall-clock comparison of the OpenMP kernels against their
// serial reference twins, plus thread-capped runs of the two composite hot
// loops (block quotient assembly, secular k-scan).  Also cross-checks that
// the parallel results agree with the serial ones (they are bit-identical by
// construction: every output row/block/grid point is owned by one thread and
// accumulates in a fixed order).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symq/kernels.hpp"
#include "symq/quantum_graph.hpp"
#include "symq/quotient.hpp"
#include "symq/representation.hpp"

namespace {

using symq::Complex;
using symq::Matrix;

double seconds(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return dt.count();
}

double best_of(int reps, const std::function<void()>& body) {
  double best = seconds(body);
  for (int i = 1; i < reps; ++i) best = std::min(best, seconds(body));
  return best;
}

void report(const std::string& name, double t_serial, double t_parallel,
            double agreement) {
  std::printf("%-24s %10.4f ms %10.4f ms %8.2fx   max |diff| = %g\n",
              name.c_str(), 1e3 * t_serial, 1e3 * t_parallel,
              t_serial / t_parallel, agreement);
}

Matrix random_matrix(int rows, int cols, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(dist(rng), dist(rng));
  return m;
}

/// Cyclic group rotating `orbits` disjoint free orbits of size n each.
symq::PermGroup free_cyclic(int n, int orbits) {
  symq::Perm g(static_cast<size_t>(n * orbits));
  for (int o = 0; o < orbits; ++o)
    for (int i = 0; i < n; ++i)
      g[static_cast<size_t>(o * n + i)] = o * n + (i + 1) % n;
  return symq::PermGroup::close(n * orbits, {{"t", g}});
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  double scale = 1.0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--reps" && i + 1 < argc) reps = std::atoi(argv[++i]);
    else if (arg == "--scale" && i + 1 < argc) scale = std::atof(argv[++i]);
    else {
      std::fprintf(stderr, "usage: bench_kernels [--reps N] [--scale S]\n");
      return 2;
    }
  }

  std::printf("threads: %d\n", symq::kernels::configured_threads());
  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");
  std::mt19937 rng(7);

  // Kronecker product.
  {
    const int na = static_cast<int>(48 * scale);
    const int nb = static_cast<int>(32 * scale);
    Matrix a = random_matrix(na, na, rng);
    Matrix b = random_matrix(nb, nb, rng);
    Matrix out_serial, out_parallel;
    double ts = best_of(reps, [&] { out_serial = symq::kernels::serial::kron(a, b); });
    double tp = best_of(reps, [&] { out_parallel = symq::kernels::kron(a, b); });
    report("kron", ts, tp, symq::max_abs(out_serial - out_parallel));
  }

  // Row-owned accumulation (shape of the projector sum).
  {
    const int rows = static_cast<int>(768 * scale);
    const int count = 64;
    Matrix seeds = random_matrix(count, rows, rng);
    auto add_row = [&](int term, Eigen::Index row, Eigen::RowVectorXcd& acc) {
      Complex w = seeds(term, row);
      for (Eigen::Index c = 0; c < acc.cols(); ++c)
        acc(c) += w * Complex(static_cast<double>(c + 1), 0.5);
    };
    Matrix out_serial, out_parallel;
    double ts = best_of(reps, [&] {
      out_serial = symq::kernels::serial::row_sum(rows, rows, count, add_row);
    });
    double tp = best_of(reps, [&] {
      out_parallel = symq::kernels::row_parallel_sum(rows, rows, count, add_row);
    });
    report("row accumulation", ts, tp, symq::max_abs(out_serial - out_parallel));
  }

  // Block quotient assembly: free cyclic action, regular rho (thread cap 1 vs
  // the configured default).
  {
    const int n = static_cast<int>(40 * scale);
    const int orbits = 5;
    symq::PermGroup group = free_cyclic(n, orbits);
    symq::Representation pi = symq::Representation::permutation(group);
    symq::Representation rho = symq::Representation::regular(group);
    Matrix op = symq::symmetrized_operator(
        random_matrix(group.degree(), group.degree(), rng), pi);
    Matrix m_serial, m_parallel;
    symq::kernels::set_thread_cap(1);
    double ts = best_of(reps, [&] {
      m_serial = symq::quotient_blocks(op, rho, pi).matrix;
    });
    symq::kernels::set_thread_cap(0);
    double tp = best_of(reps, [&] {
      m_parallel = symq::quotient_blocks(op, rho, pi).matrix;
    });
    report("quotient assembly", ts, tp, symq::max_abs(m_serial - m_parallel));
  }

  // Secular k-scan on an incommensurate star (thread cap 1 vs default).
  {
    symq::MetricGraph star;
    star.edges = {{"e1", 1.0, 0.0},
                  {"e2", std::sqrt(2.0), 0.0},
                  {"e3", std::sqrt(3.0), 0.0}};
    symq::VertexConditions vc = symq::conditions_from_named(
        star, {{"neumann", {{0, 0}, {1, 0}, {2, 0}}},
               {"neumann", {{0, 1}}},
               {"neumann", {{1, 1}}},
               {"neumann", {{2, 1}}}});
    const double k_max = 10.0 * scale;
    std::vector<symq::SecularRoot> roots_serial, roots_parallel;
    symq::kernels::set_thread_cap(1);
    double ts = best_of(reps, [&] {
      roots_serial = symq::secular_spectrum(star, vc, 0.0, k_max);
    });
    symq::kernels::set_thread_cap(0);
    double tp = best_of(reps, [&] {
      roots_parallel = symq::secular_spectrum(star, vc, 0.0, k_max);
    });
    double diff = roots_serial.size() == roots_parallel.size() ? 0.0 : 1.0;
    for (size_t i = 0; i < roots_serial.size() && diff == 0.0; ++i)
      diff = std::max(diff, std::abs(roots_serial[i].k - roots_parallel[i].k));
    report("secular k-scan", ts, tp, diff);
    std::printf("  (%zu roots on (0, %g])\n", roots_serial.size(), k_max);
  }
  return 0;
}
