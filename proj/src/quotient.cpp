#include "symq/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "symq/error.hpp"
#include "symq/kernels.hpp"

namespace symq {

using kernels::kron;
using kernels::parallel_for;

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

// [I_r (x) op] theta without materialising the Kronecker product: the tensor
// factor acts independently on each block of p consecutive rows.
Matrix apply_block_diagonal(const Matrix& op, const Matrix& theta, int r,
                            int p) {
  Matrix out(theta.rows(), theta.cols());
  for (int a = 0; a < r; ++a)
    out.middleRows(a * p, p).noalias() = op * theta.middleRows(a * p, p);
  return out;
}

void check_pi_symmetric(const Matrix& op, const Representation& pi,
                        double residual_tol) {
  if (op.rows() != pi.degree() || op.cols() != pi.degree())
    throw Error(errc::bad_shape,
                "operator is " + std::to_string(op.rows()) + "x" +
                    std::to_string(op.cols()) + " but the action has degree " +
                    std::to_string(pi.degree()));
  const auto& gens = pi.group().generators();
  const auto& gen_elements = pi.group().generator_elements();
  for (size_t k = 0; k < gen_elements.size(); ++k) {
    const Matrix& m = pi.at(gen_elements[k]);
    double viol = max_abs(m * op - op * m);
    if (viol > residual_tol)
      throw Error(errc::not_pi_symmetric,
                  "operator does not commute with generator '" +
                      gens[k].first + "' (max violation " + fmt(viol) + ")");
  }
}

std::map<int, std::pair<int, int>> block_index_of(const KernelBasis& basis) {
  std::map<int, std::pair<int, int>> index;
  for (const auto& b : basis.blocks)
    index[b.representative] = {b.offset, b.dimension};
  return index;
}

std::vector<Complex> sorted_eigenvalues(const Matrix& m, bool hermitian) {
  std::vector<Complex> vals = eig(m, hermitian).expanded();
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return vals;
}

}  // namespace

KernelBasis kernel_space(const Representation& rho, const Representation& pi,
                         double rank_tol) {
  if (!same_group(rho.group(), pi.group()))
    throw Error(errc::bad_shape,
                "rho and pi must be representations of the same group");
  const int r = rho.degree();
  const int p = pi.degree();
  const auto& gen_elements = pi.group().generator_elements();
  const Matrix id_r = Matrix::Identity(r, r);
  const Matrix id_p = Matrix::Identity(p, p);

  // One constraint row-block per generator; closure under products makes the
  // remaining group elements redundant.
  Matrix stacked(static_cast<int>(gen_elements.size()) * r * p, r * p);
  for (size_t k = 0; k < gen_elements.size(); ++k) {
    int e = gen_elements[k];
    stacked.middleRows(static_cast<int>(k) * r * p, r * p) =
        kron(id_r, pi.at(e)) - kron(rho.at(e).transpose(), id_p);
  }
  return KernelBasis(rho, pi, orthonormal_nullspace(stacked, rank_tol));
}

Matrix projector(const Representation& rho, const Representation& pi) {
  if (!same_group(rho.group(), pi.group()))
    throw Error(errc::bad_shape,
                "rho and pi must be representations of the same group");
  const auto& group = rho.group();
  const int r = rho.degree();
  const int p = pi.degree();
  const int n = group.size();
  Matrix out = Matrix::Zero(r * p, r * p);

  std::vector<int> inverse(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) inverse[static_cast<size_t>(g)] = group.inverse(g);

  if (pi.is_permutation_rep()) {
    // pi(g) has a single unit entry per row: (i, j) with j = g^{-1} i.
    parallel_for(r * p, [&](int row) {
      const int a = row / p;
      const int i = row % p;
      for (int g = 0; g < n; ++g) {
        const int j = group.act(inverse[static_cast<size_t>(g)], i);
        const Matrix& rg = rho.at(g);
        for (int b = 0; b < r; ++b)
          out(row, b * p + j) += std::conj(rg(a, b));
      }
    });
  } else {
    parallel_for(r * p, [&](int row) {
      const int a = row / p;
      const int i = row % p;
      for (int g = 0; g < n; ++g) {
        const Matrix& rg = rho.at(g);
        const Matrix& pg = pi.at(g);
        for (int b = 0; b < r; ++b)
          for (int j = 0; j < p; ++j)
            out(row, b * p + j) += std::conj(rg(a, b)) * pg(i, j);
      }
    });
  }
  return out / static_cast<double>(n);
}

Matrix fixed_point_basis(const Representation& rho, const Subgroup& g_i,
                         double rank_tol) {
  if (!same_group(rho.group(), *g_i.parent))
    throw Error(errc::not_a_subgroup,
                "subgroup does not belong to the representation's group");
  const int r = rho.degree();
  const Matrix id = Matrix::Identity(r, r);
  // The trivial subgroup imposes no constraints and yields exactly I_r.
  Matrix stacked(static_cast<int>(g_i.generators.size()) * r, r);
  for (size_t k = 0; k < g_i.generators.size(); ++k)
    stacked.middleRows(static_cast<int>(k) * r, r) =
        id - rho.at(g_i.generators[k]).transpose();
  return orthonormal_nullspace(stacked, rank_tol);
}

KernelBasis orbit_adapted_basis(const Representation& rho,
                                const Representation& pi, double rank_tol) {
  if (!same_group(rho.group(), pi.group()))
    throw Error(errc::bad_shape,
                "rho and pi must be representations of the same group");
  if (!pi.is_permutation_rep())
    throw Error(errc::bad_shape,
                "orbit-adapted bases require a permutation action");
  const auto& group = pi.group();
  const int r = rho.degree();
  const int p = pi.degree();

  const Matrix proj = projector(rho, pi);
  const auto orbit_data = group.orbits();

  std::vector<KernelBasis::OrbitBlock> blocks;
  int total = 0;
  for (int i : orbit_data.fundamental_domain) {
    Subgroup g_i = stabilizer(group, i);
    KernelBasis::OrbitBlock block;
    block.representative = i;
    block.offset = total;
    block.stabilizer_order = g_i.size();
    block.phi = fixed_point_basis(rho, g_i, rank_tol);
    block.dimension = static_cast<int>(block.phi.cols());
    total += block.dimension;
    blocks.push_back(std::move(block));
  }

  Matrix theta(r * p, total);
  for (const auto& block : blocks) {
    // P (phi (x) e_i) only reads the p-slot-i columns of the projector.
    Matrix pcols(r * p, r);
    for (int b = 0; b < r; ++b)
      pcols.col(b) = proj.col(b * p + block.representative);
    const double scale = std::sqrt(static_cast<double>(group.size()) /
                                   static_cast<double>(block.stabilizer_order));
    theta.middleCols(block.offset, block.dimension).noalias() =
        scale * (pcols * block.phi);
  }

  KernelBasis basis(rho, pi, std::move(theta));
  basis.orbit_adapted = true;
  basis.blocks = std::move(blocks);
  return basis;
}

QuotientResult quotient(const Matrix& op, const KernelBasis& basis,
                        const QuotientOptions& opts) {
  check_pi_symmetric(op, basis.pi, opts.residual_tol);
  const int r = basis.rep_degree();
  const int p = basis.points();
  const int d = basis.dimension();

  Matrix compressed =
      basis.theta.adjoint() * apply_block_diagonal(op, basis.theta, r, p);
  if (!opts.orthonormal) {
    Matrix gram = basis.theta.adjoint() * basis.theta;
    Eigen::FullPivLU<Matrix> lu(gram);
    if (lu.rank() < d)
      throw Error(errc::bad_shape, "basis columns are linearly dependent");
    compressed = lu.solve(compressed);
  }
  bool hermitian = is_hermitian(compressed, tol::hermitian);
  return QuotientResult{std::move(compressed), block_index_of(basis), basis,
                        hermitian};
}

QuotientResult quotient_blocks(const Matrix& op, const Representation& rho,
                               const Representation& pi,
                               const QuotientOptions& opts) {
  KernelBasis basis = orbit_adapted_basis(rho, pi, opts.rank_tol);
  check_pi_symmetric(op, basis.pi, opts.residual_tol);
  const auto& group = pi.group();
  const int n = group.size();
  const int d = basis.dimension();
  const int nblocks = static_cast<int>(basis.blocks.size());

  const bool trivial = rho.is_trivial_rep();
  bool free_action = true;
  for (const auto& b : basis.blocks)
    if (b.stabilizer_order != 1) free_action = false;

  // A pair (i, j) admits the fixed-point shortcut when i is the only point
  // of its orbit with entries in column j.
  auto fixed_point_pair = [&](int i, int j) {
    for (int g = 0; g < n; ++g) {
      int gi = group.act(g, i);
      if (gi != i && op(gi, j) != Complex(0.0, 0.0)) return false;
    }
    return true;
  };

  Matrix out = Matrix::Zero(d, d);
  parallel_for(nblocks * nblocks, [&](int pair) {
    const auto& bi = basis.blocks[static_cast<size_t>(pair / nblocks)];
    const auto& bj = basis.blocks[static_cast<size_t>(pair % nblocks)];
    const int i = bi.representative;
    const int j = bj.representative;
    const double norm = std::sqrt(static_cast<double>(bi.stabilizer_order) *
                                  static_cast<double>(bj.stabilizer_order));
    Matrix block;
    if (opts.fast_paths && trivial) {
      Complex sum = 0.0;
      for (int g = 0; g < n; ++g) sum += op(i, group.act(g, j));
      block = Matrix::Constant(1, 1, sum / norm);
    } else if (opts.fast_paths && free_action) {
      block = Matrix::Zero(bi.dimension, bj.dimension);
      for (int g = 0; g < n; ++g) {
        Complex c = op(i, group.act(g, j));
        if (c != Complex(0.0, 0.0)) block += rho.at(g).conjugate() * c;
      }
    } else if (opts.fast_paths && fixed_point_pair(i, j)) {
      block = std::sqrt(static_cast<double>(bi.stabilizer_order) /
                        static_cast<double>(bj.stabilizer_order)) *
              (bi.phi.adjoint() * bj.phi) * op(i, j);
    } else {
      block = Matrix::Zero(bi.dimension, bj.dimension);
      for (int g = 0; g < n; ++g) {
        Complex c = op(i, group.act(g, j));
        if (c != Complex(0.0, 0.0))
          block += (bi.phi.adjoint() * rho.at(g).conjugate() * bj.phi) * c;
      }
      block /= norm;
    }
    out.block(bi.offset, bj.offset, bi.dimension, bj.dimension) = block;
  });

  bool hermitian = is_hermitian(out, tol::hermitian);
  return QuotientResult{std::move(out), block_index_of(basis), basis,
                        hermitian};
}

Matrix symmetrized_operator(const Matrix& m, const Representation& pi) {
  const int p = pi.degree();
  if (m.rows() != p || m.cols() != p)
    throw Error(errc::bad_shape, "matrix does not match the action degree");
  const auto& group = pi.group();
  const int n = group.size();
  Matrix out = Matrix::Zero(p, p);

  if (pi.is_permutation_rep()) {
    std::vector<int> inverse(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g)
      inverse[static_cast<size_t>(g)] = group.inverse(g);
    // (pi(g) M pi(g)*)_{u,v} = M(g^{-1} u, g^{-1} v)
    parallel_for(p, [&](int u) {
      for (int g = 0; g < n; ++g) {
        const int ginv = inverse[static_cast<size_t>(g)];
        const int su = group.act(ginv, u);
        for (int v = 0; v < p; ++v) out(u, v) += m(su, group.act(ginv, v));
      }
    });
  } else {
    for (int g = 0; g < n; ++g) out += pi.at(g) * m * pi.at(g).adjoint();
  }
  return out / static_cast<double>(n);
}

FundamentalReport verify_fundamental(const Matrix& op,
                                     const QuotientResult& result,
                                     double residual_tol) {
  const KernelBasis& basis = result.basis;
  FundamentalReport report;
  report.commutation_residual = max_abs(
      basis.theta * result.matrix -
      apply_block_diagonal(op, basis.theta, basis.rep_degree(), basis.points()));
  report.orthonormality_residual =
      max_abs(basis.theta.adjoint() * basis.theta -
              Matrix::Identity(basis.dimension(), basis.dimension()));
  report.pass = report.commutation_residual <= residual_tol &&
                report.orthonormality_residual <= residual_tol;
  return report;
}

DecompositionReport verify_decomposition(
    const Matrix& op, const Representation& pi,
    const std::vector<std::pair<std::string, Representation>>& irreps,
    double spec_tol) {
  const auto& group = pi.group();
  long sum_sq = 0;
  for (const auto& [label, rho] : irreps) {
    if (!same_group(rho.group(), group))
      throw Error(errc::incomplete_irrep_list,
                  "representation '" + label +
                      "' does not live on the operator's symmetry group");
    sum_sq += static_cast<long>(rho.degree()) * rho.degree();
  }
  if (sum_sq != group.size())
    throw Error(errc::incomplete_irrep_list,
                "sum of squared degrees is " + std::to_string(sum_sq) +
                    " but the group has order " +
                    std::to_string(group.size()));
  for (size_t a = 0; a < irreps.size(); ++a)
    for (size_t b = 0; b < irreps.size(); ++b) {
      Complex ip =
          character_inner_product(irreps[a].second, irreps[b].second);
      double expected = (a == b) ? 1.0 : 0.0;
      if (std::abs(ip - expected) > 1e-8)
        throw Error(errc::incomplete_irrep_list,
                    "characters of '" + irreps[a].first + "' and '" +
                        irreps[b].first + "' are not orthonormal");
    }

  DecompositionReport report;
  const bool herm = is_hermitian(op, tol::hermitian);
  report.full_spectrum = sorted_eigenvalues(op, herm);

  for (const auto& [label, rho] : irreps) {
    KernelBasis basis = kernel_space(rho, pi);
    if (basis.dimension() == 0) continue;
    QuotientResult q = quotient(op, basis);
    for (Complex ev : sorted_eigenvalues(q.matrix, q.hermitian))
      for (int copy = 0; copy < rho.degree(); ++copy)
        report.quotient_spectrum.push_back({ev, label});
  }
  std::sort(report.quotient_spectrum.begin(), report.quotient_spectrum.end(),
            [](const DecompositionReport::Entry& a,
               const DecompositionReport::Entry& b) {
              if (a.eigenvalue.real() != b.eigenvalue.real())
                return a.eigenvalue.real() < b.eigenvalue.real();
              return a.eigenvalue.imag() < b.eigenvalue.imag();
            });

  if (report.quotient_spectrum.size() != report.full_spectrum.size()) {
    report.pass = false;
    return report;
  }
  for (size_t k = 0; k < report.full_spectrum.size(); ++k)
    report.max_pairing_distance = std::max(
        report.max_pairing_distance,
        std::abs(report.quotient_spectrum[k].eigenvalue -
                 report.full_spectrum[k]));
  report.pass = report.max_pairing_distance <= spec_tol;
  return report;
}

SpectralReport verify_spectral(const Matrix& op, const Representation& rho,
                               const Representation& pi, Complex lambda, int k,
                               double rank_tol) {
  KernelBasis basis = kernel_space(rho, pi, rank_tol);
  QuotientResult q = quotient(op, basis);

  SpectralReport report;
  report.quotient_dim =
      generalized_eigenspace_dim(q.matrix, lambda, k, rank_tol);

  const int r = rho.degree();
  const int p = pi.degree();
  const int rp = r * p;
  Matrix shifted =
      op - lambda * Matrix::Identity(p, p);
  Matrix powered = Matrix::Identity(p, p);
  for (int t = 0; t < k; ++t) powered = powered * shifted;

  // A vector lies in the intersection iff it is annihilated both by the
  // complement of the kernel-space projector and by I_r (x) (Op-lambda)^k.
  Matrix membership =
      Matrix::Identity(rp, rp) - basis.theta * basis.theta.adjoint();
  Matrix annihilator = kron(Matrix::Identity(r, r), powered);
  double scale = max_abs(annihilator);
  if (scale > 0) annihilator /= scale;

  Matrix stacked(2 * rp, rp);
  stacked.topRows(rp) = membership;
  stacked.bottomRows(rp) = annihilator;
  report.intersection_dim = rp - numerical_rank(stacked, rank_tol);
  report.pass = report.quotient_dim == report.intersection_dim;
  return report;
}

StructureReport verify_structure(const Matrix& op, const Representation& rho,
                                 const Representation& pi, unsigned int seed) {
  constexpr double kBlockTol = 1e-12;
  KernelBasis basis = orbit_adapted_basis(rho, pi);
  QuotientResult base = quotient(op, basis);
  const auto orbit_data = pi.group().orbits();
  const int p = pi.degree();

  StructureReport report;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (const auto& bi : basis.blocks) {
    const auto& orbit_i =
        orbit_data.orbits[static_cast<size_t>(
            orbit_data.orbit_of[static_cast<size_t>(bi.representative)])];
    for (const auto& bj : basis.blocks) {
      const auto& orbit_j =
          orbit_data.orbits[static_cast<size_t>(
              orbit_data.orbit_of[static_cast<size_t>(bj.representative)])];

      bool connected = false;
      for (int u : orbit_i)
        for (int v : orbit_j)
          if (op(u, v) != Complex(0.0, 0.0)) connected = true;
      Matrix base_block = base.matrix.block(bi.offset, bj.offset,
                                            bi.dimension, bj.dimension);
      if (!connected)
        report.max_zero_block_entry =
            std::max(report.max_zero_block_entry, max_abs(base_block));

      // Perturb only entries outside rows O_i and columns O_j; averaging over
      // the group preserves that support, so the block must not move.
      Matrix noise(p, p);
      for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v) noise(u, v) = Complex(unit(rng), unit(rng));
      for (int u : orbit_i) noise.row(u).setZero();
      for (int v : orbit_j) noise.col(v).setZero();
      QuotientResult perturbed =
          quotient(op + symmetrized_operator(noise, pi), basis);
      Matrix moved = perturbed.matrix.block(bi.offset, bj.offset, bi.dimension,
                                            bj.dimension);
      report.max_locality_drift =
          std::max(report.max_locality_drift, max_abs(moved - base_block));
    }
  }
  report.pass = report.max_zero_block_entry <= kBlockTol &&
                report.max_locality_drift <= kBlockTol;
  return report;
}

InductionReport verify_induction(const Matrix& op, const Representation& pi,
                                 const Subgroup& h, const Representation& sigma,
                                 double spec_tol) {
  if (!same_group(pi.group(), *h.parent))
    throw Error(errc::not_a_subgroup,
                "subgroup does not belong to the action's group");
  Representation pi_restricted = restrict_to(pi, h);
  if (!same_group(sigma.group(), pi_restricted.group()))
    throw Error(errc::not_a_subgroup,
                "sigma must be a representation of the given subgroup");

  QuotientResult q_sub = quotient(op, kernel_space(sigma, pi_restricted));
  QuotientResult q_ind = quotient(op, kernel_space(induce(sigma, h), pi));

  InductionReport report;
  report.hermitian = q_sub.hermitian && q_ind.hermitian;
  report.subgroup_spectrum = sorted_eigenvalues(q_sub.matrix, q_sub.hermitian);
  report.induced_spectrum = sorted_eigenvalues(q_ind.matrix, q_ind.hermitian);
  if (report.subgroup_spectrum.size() != report.induced_spectrum.size()) {
    report.pass = false;
    return report;
  }
  for (size_t k = 0; k < report.subgroup_spectrum.size(); ++k)
    report.max_pairing_distance =
        std::max(report.max_pairing_distance,
                 std::abs(report.subgroup_spectrum[k] -
                          report.induced_spectrum[k]));
  report.pass = report.max_pairing_distance <= spec_tol;
  return report;
}

}  // namespace symq
