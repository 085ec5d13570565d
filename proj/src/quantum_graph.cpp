#include "symq/quantum_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "symq/error.hpp"
#include "symq/kernels.hpp"

namespace symq {

using kernels::parallel_for;

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

double wrap_phase(double x) { return std::remainder(x, 2.0 * kPi); }

Matrix apply_block_diagonal(const Matrix& op, const Matrix& theta, int r,
                            int p) {
  Matrix out(theta.rows(), theta.cols());
  for (int a = 0; a < r; ++a)
    out.middleRows(a * p, p).noalias() = op * theta.middleRows(a * p, p);
  return out;
}

void check_conditions_shape(const MetricGraph& graph,
                            const VertexConditions& vc) {
  const int n = graph.slot_count();
  if (vc.a.rows() != n || vc.a.cols() != n || vc.b.rows() != n ||
      vc.b.cols() != n)
    throw Error(errc::bad_shape,
                "vertex condition matrices must be " + std::to_string(n) + "x" +
                    std::to_string(n));
}

// Slot-swap matrix J: exchanges the two endpoints of every edge.
Matrix edge_swap(int edge_count) {
  Matrix j = Matrix::Zero(2 * edge_count, 2 * edge_count);
  for (int e = 0; e < edge_count; ++e) {
    j(2 * e, 2 * e + 1) = 1.0;
    j(2 * e + 1, 2 * e) = 1.0;
  }
  return j;
}

std::vector<double> sorted_phases(const Matrix& u) {
  std::vector<Complex> vals = eig(u, false, 0.0).expanded();
  std::vector<double> phases;
  phases.reserve(vals.size());
  for (Complex v : vals) phases.push_back(std::atan2(v.imag(), v.real()));
  std::sort(phases.begin(), phases.end());
  return phases;
}

}  // namespace

double MetricGraph::max_length() const {
  double m = 0.0;
  for (const auto& e : edges) m = std::max(m, e.length);
  return m;
}

void validate(const MetricGraph& graph) {
  std::set<std::string> ids;
  for (const auto& e : graph.edges) {
    if (e.id.empty())
      throw Error(errc::bad_shape, "edge with empty id");
    if (!(e.length > 0.0))
      throw Error(errc::bad_shape,
                  "edge '" + e.id + "' has non-positive length");
    if (!ids.insert(e.id).second)
      throw Error(errc::bad_shape, "duplicate edge id '" + e.id + "'");
  }
}

bool self_adjoint_conditions(const VertexConditions& vc, double tolerance) {
  const int n = static_cast<int>(vc.a.rows());
  Matrix ab(n, 2 * n);
  ab << vc.a, vc.b;
  if (numerical_rank(ab) != n) return false;
  return is_hermitian(vc.a * vc.b.adjoint(), tolerance);
}

VertexConditions conditions_from_named(
    const MetricGraph& graph, const std::vector<NamedVertex>& vertices) {
  validate(graph);
  const int n = graph.slot_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int total = 0;
  for (const auto& v : vertices) {
    for (auto [e, t] : v.slots) {
      if (e < 0 || e >= graph.edge_count() || (t != 0 && t != 1))
        throw Error(errc::bad_vertex_partition,
                    "slot (" + std::to_string(e) + "," + std::to_string(t) +
                        ") out of range");
      int slot = 2 * e + t;
      if (seen[static_cast<size_t>(slot)])
        throw Error(errc::bad_vertex_partition,
                    "slot (" + std::to_string(e) + "," + std::to_string(t) +
                        ") assigned to two vertices");
      seen[static_cast<size_t>(slot)] = 1;
    }
    total += static_cast<int>(v.slots.size());
  }
  if (total != n)
    throw Error(errc::bad_vertex_partition,
                std::to_string(n - total) + " slot(s) not assigned to any vertex");

  VertexConditions vc{Matrix::Zero(n, n), Matrix::Zero(n, n)};
  int row = 0;
  for (const auto& v : vertices) {
    const auto slot = [](std::pair<int, int> s) {
      return 2 * s.first + s.second;
    };
    if (v.type == "dirichlet") {
      for (auto s : v.slots) vc.a(row++, slot(s)) = 1.0;
    } else if (v.type == "neumann") {
      // Continuity chain, then the vanishing sum of outgoing derivatives.
      for (size_t m = 0; m + 1 < v.slots.size(); ++m) {
        vc.a(row, slot(v.slots[m])) = 1.0;
        vc.a(row, slot(v.slots[m + 1])) = -1.0;
        ++row;
      }
      for (auto s : v.slots) vc.b(row, slot(s)) = 1.0;
      ++row;
    } else {
      throw Error(errc::parse_error,
                  "unknown vertex condition type '" + v.type + "'");
    }
  }
  return vc;
}

Matrix EdgeSymmetry::slot_matrix(int element) const {
  const Perm& p = slot_perms[static_cast<size_t>(element)];
  const int n = static_cast<int>(p.size());
  Matrix m = Matrix::Zero(n, n);
  for (int s = 0; s < n; ++s) m(p[static_cast<size_t>(s)], s) = 1.0;
  return m;
}

EdgeSymmetry edge_symmetry(const MetricGraph& graph,
                           const std::vector<EdgeMapGenerator>& generators) {
  validate(graph);
  const int ne = graph.edge_count();

  std::vector<std::pair<std::string, Perm>> slot_gens;
  std::vector<std::pair<std::string, Perm>> edge_gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.target.size()) != ne ||
        static_cast<int>(g.reversed.size()) != ne)
      throw Error(errc::bad_shape,
                  "generator '" + g.name + "' must map all " +
                      std::to_string(ne) + " edges");
    Perm slot(static_cast<size_t>(2 * ne));
    for (int e = 0; e < ne; ++e) {
      const int f = g.target[static_cast<size_t>(e)];
      const int flip = g.reversed[static_cast<size_t>(e)] ? 1 : 0;
      slot[static_cast<size_t>(2 * e)] = 2 * f + flip;
      slot[static_cast<size_t>(2 * e + 1)] = 2 * f + 1 - flip;
    }
    slot_gens.emplace_back(g.name, slot);
    edge_gens.emplace_back(g.name, Perm(g.target.begin(), g.target.end()));
  }

  PermGroup slot_group = PermGroup::close(2 * ne, slot_gens);
  for (int g = 0; g < slot_group.size(); ++g)
    for (int e = 0; e < ne; ++e)
      if (slot_group.act(g, 2 * e) == 2 * e + 1)
        throw Error(errc::reversal_edge,
                    "the symmetry maps edge '" +
                        graph.edges[static_cast<size_t>(e)].id +
                        "' to its own reversal; subdivide it with a midpoint "
                        "dummy vertex first");

  EdgeSymmetry sym{PermGroup::close(ne, edge_gens), {}};
  if (sym.edge_group.size() != slot_group.size())
    throw Error(errc::bad_shape,
                "edge action is not faithful");  // unreachable without reversals
  sym.slot_perms.resize(static_cast<size_t>(slot_group.size()));
  for (int s = 0; s < slot_group.size(); ++s) {
    Perm edge_perm(static_cast<size_t>(ne));
    for (int e = 0; e < ne; ++e)
      edge_perm[static_cast<size_t>(e)] = slot_group.act(s, 2 * e) / 2;
    sym.slot_perms[static_cast<size_t>(sym.edge_group.index_of(edge_perm))] =
        slot_group.perm(s);
  }
  return sym;
}

QGSymmetryReport check_pi_symmetric(const MetricGraph& graph,
                                    const EdgeSymmetry& sym,
                                    const VertexConditions& vc,
                                    double residual_tol) {
  validate(graph);
  check_conditions_shape(graph, vc);
  const int ne = graph.edge_count();
  QGSymmetryReport report;

  const auto& gens = sym.edge_group.generators();
  const auto& gen_elements = sym.edge_group.generator_elements();
  for (size_t k = 0; k < gen_elements.size(); ++k) {
    const Perm& slot = sym.slot_perms[static_cast<size_t>(gen_elements[k])];
    for (int e = 0; e < ne; ++e) {
      const auto& src = graph.edges[static_cast<size_t>(e)];
      const auto& dst =
          graph.edges[static_cast<size_t>(slot[static_cast<size_t>(2 * e)] / 2)];
      if (src.length != dst.length) {
        report.lengths_ok = false;
        report.violations.push_back("generator '" + gens[k].first +
                                    "' maps edge '" + src.id + "' (length " +
                                    fmt(src.length) + ") to '" + dst.id +
                                    "' (length " + fmt(dst.length) + ")");
      }
      if (src.potential != dst.potential) {
        report.lengths_ok = false;
        report.violations.push_back("generator '" + gens[k].first +
                                    "' maps edge '" + src.id + "' (potential " +
                                    fmt(src.potential) + ") to '" + dst.id +
                                    "' (potential " + fmt(dst.potential) + ")");
      }
    }
  }

  // The conditions are symmetric when the solution space of
  // A gamma_D + B gamma_N = 0 is invariant under the doubled action.
  const int n = graph.slot_count();
  Matrix ab(n, 2 * n);
  ab << vc.a, vc.b;
  Matrix kernel = orthonormal_nullspace(ab);
  Matrix proj = kernel * kernel.adjoint();
  for (size_t k = 0; k < gen_elements.size(); ++k) {
    Matrix q = sym.slot_matrix(gen_elements[k]);
    Matrix doubled = Matrix::Zero(2 * n, 2 * n);
    doubled.topLeftCorner(n, n) = q;
    doubled.bottomRightCorner(n, n) = q;
    double residual = max_abs(doubled * proj * doubled.adjoint() - proj);
    report.max_condition_residual =
        std::max(report.max_condition_residual, residual);
    if (residual > residual_tol) {
      report.conditions_ok = false;
      report.violations.push_back(
          "solution space not invariant under generator '" + gens[k].first +
          "' (residual " + fmt(residual) + ")");
    }
  }
  report.pass = report.lengths_ok && report.conditions_ok;
  return report;
}

VertexConditions symmetrize_conditions(const VertexConditions& vc,
                                       double rank_tol) {
  if (vc.a.rows() != vc.a.cols() || vc.b.rows() != vc.b.cols() ||
      vc.a.rows() != vc.b.rows())
    throw Error(errc::bad_shape, "condition matrices must be square and equal-sized");
  Matrix aib = vc.a + Complex(0.0, 1.0) * vc.b;
  if (numerical_rank(aib, rank_tol) < aib.rows())
    throw Error(errc::singular_a_ib,
                "A + iB is singular; the conditions do not determine a "
                "self-adjoint operator");
  Eigen::FullPivLU<Matrix> lu(aib);
  return VertexConditions{lu.solve(vc.a), lu.solve(vc.b)};
}

QGQuotient quotient_graph(const MetricGraph& graph, const EdgeSymmetry& sym,
                          const Representation& rho, const VertexConditions& vc,
                          double residual_tol, double rank_tol) {
  validate(graph);
  check_conditions_shape(graph, vc);
  if (!same_group(rho.group(), sym.edge_group))
    throw Error(errc::bad_shape,
                "rho must be a representation of the edge symmetry group");

  const auto& gens = sym.edge_group.generators();
  const auto& gen_elements = sym.edge_group.generator_elements();
  for (size_t k = 0; k < gen_elements.size(); ++k) {
    const Perm& slot = sym.slot_perms[static_cast<size_t>(gen_elements[k])];
    for (int e = 0; e < graph.edge_count(); ++e) {
      const auto& src = graph.edges[static_cast<size_t>(e)];
      const auto& dst =
          graph.edges[static_cast<size_t>(slot[static_cast<size_t>(2 * e)] / 2)];
      if (src.length != dst.length || src.potential != dst.potential)
        throw Error(errc::not_pi_symmetric,
                    "generator '" + gens[k].first +
                        "' does not preserve edge data ('" + src.id + "' -> '" +
                        dst.id + "')");
    }
    Matrix q = sym.slot_matrix(gen_elements[k]);
    double va = max_abs(q * vc.a - vc.a * q);
    double vb = max_abs(q * vc.b - vc.b * q);
    if (va > residual_tol || vb > residual_tol)
      throw Error(errc::not_pi_symmetric,
                  "condition matrices do not commute with generator '" +
                      gens[k].first + "' (residual " + fmt(std::max(va, vb)) +
                      "); pass symmetrized conditions");
  }

  Representation pi_edges = Representation::permutation(sym.edge_group);
  KernelBasis basis = orbit_adapted_basis(rho, pi_edges, rank_tol);
  const int r = rho.degree();
  const int ne = graph.edge_count();
  const int d = basis.dimension();

  QGQuotient q;
  q.rep_degree = r;
  q.theta = basis.theta;
  q.blocks = basis.blocks;
  q.theta_hat = Matrix::Zero(2 * r * ne, 2 * d);
  for (int a = 0; a < r; ++a)
    for (int e = 0; e < ne; ++e)
      for (int c = 0; c < d; ++c)
        for (int t = 0; t < 2; ++t)
          q.theta_hat(a * 2 * ne + 2 * e + t, 2 * c + t) =
              basis.theta(a * ne + e, c);

  for (const auto& block : basis.blocks) {
    const auto& rep_edge = graph.edges[static_cast<size_t>(block.representative)];
    for (int c = 0; c < block.dimension; ++c) {
      MetricEdge edge = rep_edge;
      if (block.dimension > 1) edge.id += "#" + std::to_string(c);
      q.graph.edges.push_back(std::move(edge));
    }
  }

  q.a_rho = q.theta_hat.adjoint() *
            apply_block_diagonal(vc.a, q.theta_hat, r, 2 * ne);
  q.b_rho = q.theta_hat.adjoint() *
            apply_block_diagonal(vc.b, q.theta_hat, r, 2 * ne);
  return q;
}

Matrix scattering_matrix(const MetricGraph& graph, const VertexConditions& vc,
                         double k, double rank_tol) {
  validate(graph);
  check_conditions_shape(graph, vc);
  Matrix aikb = vc.a + Complex(0.0, k) * vc.b;
  if (numerical_rank(aikb, rank_tol) < aikb.rows())
    throw Error(errc::singular_a_ikb,
                "A + ikB is singular at k = " + fmt(k));
  Eigen::FullPivLU<Matrix> lu(aikb);
  Matrix m = lu.solve(vc.a - Complex(0.0, k) * vc.b);
  return -(edge_swap(graph.edge_count()) * m);
}

Matrix unitary_evolution(const MetricGraph& graph, const VertexConditions& vc,
                         double k, double rank_tol) {
  Matrix s = scattering_matrix(graph, vc, k, rank_tol);
  Vector t(graph.slot_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    Complex phase = std::exp(
        Complex(0.0, k * graph.edges[static_cast<size_t>(e)].length));
    t(2 * e) = phase;
    t(2 * e + 1) = phase;
  }
  return t.asDiagonal() * s;
}

Matrix quotient_scattering(const Matrix& s, const EdgeSymmetry& sym,
                           const QGQuotient& q, double residual_tol) {
  const int n = static_cast<int>(sym.slot_perms.empty()
                                     ? s.rows()
                                     : static_cast<int>(
                                           sym.slot_perms.front().size()));
  if (s.rows() != n || s.cols() != n)
    throw Error(errc::bad_shape, "scattering matrix has wrong dimensions");
  const auto& gens = sym.edge_group.generators();
  const auto& gen_elements = sym.edge_group.generator_elements();
  for (size_t k = 0; k < gen_elements.size(); ++k) {
    Matrix p = sym.slot_matrix(gen_elements[k]);
    double viol = max_abs(p * s - s * p);
    if (viol > residual_tol)
      throw Error(errc::not_pi_symmetric,
                  "scattering matrix does not commute with generator '" +
                      gens[k].first + "' (max violation " + fmt(viol) + ")");
  }
  return q.theta_hat.adjoint() *
         apply_block_diagonal(s, q.theta_hat, q.rep_degree, n);
}

std::vector<SecularRoot> secular_spectrum(const MetricGraph& graph,
                                          const VertexConditions& vc,
                                          double k_min, double k_max,
                                          const SecularOptions& opts) {
  if (graph.edge_count() == 0) return {};
  validate(graph);
  check_conditions_shape(graph, vc);
  for (const auto& e : graph.edges)
    if (e.potential != 0.0)
      throw Error(errc::potential_unsupported,
                  "edge '" + e.id + "' has nonzero potential " +
                      fmt(e.potential) +
                      "; the secular scan supports zero potential only");
  if (!(k_max > k_min) || k_min < 0.0)
    throw Error(errc::bad_shape, "need 0 <= k_min < k_max");

  const double step =
      opts.grid_step > 0.0 ? opts.grid_step : 0.01 / graph.max_length();
  // Each eigenphase of U(k) advances at a rate bounded by the longest edge
  // length, so once step * max_length reaches pi a branch can sweep half the
  // circle between neighboring grid points and crossings of 1 become
  // indistinguishable from aliasing. Refuse to scan rather than miss roots.
  if (step * graph.max_length() >= kPi * (1.0 - 1e-9))
    throw Error(errc::grid_too_coarse,
                "grid_step " + fmt(step) + " lets an eigenphase advance " +
                    fmt(step * graph.max_length()) +
                    " rad (>= pi) between grid points; use a finer grid_step");
  // Never evaluate at k = 0: the secular condition is degenerate there.
  const double lo = k_min > 0.0 ? k_min : std::min(step, k_max) * 1e-3;
  if (!(k_max > lo)) throw Error(errc::bad_shape, "k range is empty");
  const int intervals =
      std::max(1, static_cast<int>(std::ceil((k_max - lo) / step)));
  const int npts = intervals + 1;
  std::vector<double> ks(static_cast<size_t>(npts));
  for (int t = 0; t < npts; ++t)
    ks[static_cast<size_t>(t)] =
        (t == npts - 1) ? k_max : lo + step * static_cast<double>(t);

  std::vector<std::vector<double>> phase_grid(static_cast<size_t>(npts));
  parallel_for(npts, [&](int t) {
    phase_grid[static_cast<size_t>(t)] = sorted_phases(
        unitary_evolution(graph, vc, ks[static_cast<size_t>(t)]));
  });

  const int m = graph.slot_count();
  auto phase_at = [&](double k, double expected) {
    std::vector<double> phases =
        sorted_phases(unitary_evolution(graph, vc, k));
    double best = phases.front();
    double best_dist = std::abs(wrap_phase(best - expected));
    for (double ph : phases) {
      double dist = std::abs(wrap_phase(ph - expected));
      if (dist < best_dist) {
        best = ph;
        best_dist = dist;
      }
    }
    return best;
  };

  struct RawRoot {
    double k;
    bool tangential;
  };
  std::vector<RawRoot> roots;

  // crossed_into[t][m]: branch ending at sorted position m of grid point t+1
  // crossed phase zero inside interval t; used to spot tangential grid hits.
  std::vector<std::vector<char>> crossed_into(
      static_cast<size_t>(npts), std::vector<char>(static_cast<size_t>(m), 0));
  std::vector<std::vector<char>> crossed_from(
      static_cast<size_t>(npts), std::vector<char>(static_cast<size_t>(m), 0));

  for (int t = 0; t + 1 < npts; ++t) {
    const auto& prev = phase_grid[static_cast<size_t>(t)];
    const auto& next = phase_grid[static_cast<size_t>(t + 1)];

    // Cyclic matching of the two sorted phase lists.
    int best_shift = 0;
    double best_cost = -1.0;
    for (int s = 0; s < m; ++s) {
      double cost = 0.0;
      for (int b = 0; b < m; ++b)
        cost += std::abs(wrap_phase(next[static_cast<size_t>((b + s) % m)] -
                                    prev[static_cast<size_t>(b)]));
      if (best_cost < 0.0 || cost < best_cost) {
        best_cost = cost;
        best_shift = s;
      }
    }

    for (int b = 0; b < m; ++b) {
      const int bn = (b + best_shift) % m;
      const double a = prev[static_cast<size_t>(b)];
      const double delta =
          wrap_phase(next[static_cast<size_t>(bn)] - a);
      if (std::abs(delta) >= kPi * (1.0 - 1e-6))
        throw Error(errc::grid_too_coarse,
                    "an eigenphase moved by " + fmt(std::abs(delta)) +
                        " rad between k = " + fmt(ks[static_cast<size_t>(t)]) +
                        " and k = " + fmt(ks[static_cast<size_t>(t + 1)]) +
                        "; use a finer grid_step");
      const bool up = delta > 0.0 && a < 0.0 && a + delta >= 0.0;
      const bool down = delta < 0.0 && a > 0.0 && a + delta <= 0.0;
      if (!up && !down) continue;
      crossed_from[static_cast<size_t>(t)][static_cast<size_t>(b)] = 1;
      crossed_into[static_cast<size_t>(t)][static_cast<size_t>(bn)] = 1;

      // Bisect the sign change of this branch's phase.
      double kl = ks[static_cast<size_t>(t)];
      double kr = ks[static_cast<size_t>(t + 1)];
      double pl = a;
      double pr = a + delta;
      const double dir = up ? 1.0 : -1.0;
      double root = kr;
      for (int iter = 0; iter < 200; ++iter) {
        const double km = 0.5 * (kl + kr);
        const double expected = pl + 0.5 * (pr - pl);
        const double ph = phase_at(km, expected);
        root = km;
        if (2.0 * std::abs(std::sin(0.5 * ph)) <= opts.phase_tol) break;
        if (dir * ph < 0.0) {
          kl = km;
          pl = ph;
        } else {
          kr = km;
          pr = ph;
        }
        if (kr - kl <= 1e-15 * std::max(1.0, kr)) {
          root = 0.5 * (kl + kr);
          break;
        }
      }
      roots.push_back({root, false});
    }
  }

  // A phase sitting exactly on zero at a grid point without a sign change in
  // either adjacent interval is a tangential touch.
  for (int t = 1; t + 1 < npts; ++t)
    for (int b = 0; b < m; ++b)
      if (std::abs(phase_grid[static_cast<size_t>(t)][static_cast<size_t>(b)]) <=
              opts.phase_tol &&
          !crossed_into[static_cast<size_t>(t - 1)][static_cast<size_t>(b)] &&
          !crossed_from[static_cast<size_t>(t)][static_cast<size_t>(b)])
        roots.push_back({ks[static_cast<size_t>(t)], true});

  std::sort(roots.begin(), roots.end(),
            [](const RawRoot& x, const RawRoot& y) { return x.k < y.k; });

  std::vector<SecularRoot> clustered;
  for (const auto& raw : roots) {
    if (raw.k <= k_min || raw.k > k_max + opts.cluster_tol) continue;
    if (!clustered.empty() &&
        raw.k - (clustered.back().k) <=
            opts.cluster_tol * clustered.back().multiplicity) {
      // Merge into the running cluster, tracking the mean position.
      auto& c = clustered.back();
      c.k = (c.k * c.multiplicity + raw.k) / (c.multiplicity + 1);
      ++c.multiplicity;
      c.tangential = c.tangential || raw.tangential;
    } else {
      clustered.push_back({raw.k, 1, raw.tangential});
    }
  }
  return clustered;
}

SecularComparison compare_secular(
    const MetricGraph& graph, const VertexConditions& vc,
    const EdgeSymmetry& sym,
    const std::vector<std::pair<std::string, Representation>>& irreps,
    double k_min, double k_max, const SecularOptions& opts, double k_tol) {
  SecularComparison cmp;
  cmp.full = secular_spectrum(graph, vc, k_min, k_max, opts);

  VertexConditions symmetric = symmetrize_conditions(vc);
  std::vector<double> flat;
  for (const auto& [label, rho] : irreps) {
    QGQuotient q = quotient_graph(graph, sym, rho, symmetric);
    if (q.graph.edge_count() == 0) continue;
    for (const auto& root :
         secular_spectrum(q.graph, VertexConditions{q.a_rho, q.b_rho}, k_min,
                          k_max, opts))
      for (int copy = 0; copy < rho.degree() * root.multiplicity; ++copy)
        flat.push_back(root.k);
  }
  std::sort(flat.begin(), flat.end());

  std::vector<double> full_flat;
  for (const auto& root : cmp.full)
    for (int copy = 0; copy < root.multiplicity; ++copy)
      full_flat.push_back(root.k);

  for (double k : flat) {
    if (!cmp.combined.empty() && k - cmp.combined.back().k <= k_tol)
      ++cmp.combined.back().multiplicity;
    else
      cmp.combined.push_back({k, 1, false});
  }

  if (flat.size() != full_flat.size()) {
    cmp.pass = false;
    return cmp;
  }
  for (size_t i = 0; i < flat.size(); ++i)
    cmp.max_distance =
        std::max(cmp.max_distance, std::abs(flat[i] - full_flat[i]));
  cmp.pass = cmp.max_distance <= k_tol;
  return cmp;
}

}  // namespace symq
