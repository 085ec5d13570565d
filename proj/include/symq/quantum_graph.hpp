#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symq/group.hpp"
#include "symq/linalg.hpp"
#include "symq/quotient.hpp"
#include "symq/representation.hpp"

namespace symq {

// A compact metric graph: edges with positive lengths and constant edge
// potentials.  Function data on the boundary is ordered in "trace slots":
// slot 2e is the start (x = 0) and slot 2e+1 the end (x = l_e) of edge e,
// with the outgoing-derivative sign convention (+f' at starts, -f' at ends).
struct MetricEdge {
  std::string id;
  double length = 1.0;
  double potential = 0.0;
};

struct MetricGraph {
  std::vector<MetricEdge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int slot_count() const { return 2 * edge_count(); }
  double max_length() const;
};

/// Throws Error(errc::bad_shape) unless all lengths are positive and edge ids
/// are unique and non-empty.
void validate(const MetricGraph& graph);

// Vertex conditions A gamma_D(f) + B gamma_N(f) = 0 on the 2|E| trace slots.
struct VertexConditions {
  Matrix a;
  Matrix b;
};

/// Self-adjointness test: (A|B) has full rank 2|E| and A B* is Hermitian.
bool self_adjoint_conditions(const VertexConditions& vc,
                             double tolerance = tol::hermitian);

// One vertex of a named-conditions description: the slots (edge index,
// endpoint 0|1) meeting at the vertex, with either standard Kirchhoff
// ("neumann": continuity plus vanishing sum of outgoing derivatives) or
// "dirichlet" (the function vanishes) conditions.
struct NamedVertex {
  std::string type;                          // "neumann" | "dirichlet"
  std::vector<std::pair<int, int>> slots;    // (edge, endpoint)
};

/// Block rows per vertex, in input order.  Throws
/// Error(errc::bad_vertex_partition) unless the vertices cover every slot
/// exactly once, and Error(errc::parse_error) for unknown condition types.
VertexConditions conditions_from_named(const MetricGraph& graph,
                                       const std::vector<NamedVertex>& vertices);

// ---------------------------------------------------------------------------
// Edge symmetries.  A generator maps each edge to a target edge, optionally
// reversing its orientation.  The group is closed over the doubled (slot)
// action; the induced action on edges is faithful once self-reversals are
// excluded, and the edge-level group is what representations and kernel
// bases live on.
struct EdgeMapGenerator {
  std::string name;
  std::vector<int> target;      // edge -> image edge
  std::vector<bool> reversed;   // true when the image orientation is flipped
};

struct EdgeSymmetry {
  PermGroup edge_group;          // degree |E|
  std::vector<Perm> slot_perms;  // doubled action, aligned with edge_group

  /// 2|E| x 2|E| permutation matrix of the doubled action of an element.
  Matrix slot_matrix(int element) const;
};

/// Closes the symmetry group.  Throws Error(errc::reversal_edge) when any
/// group element maps an edge to its own reversal (subdivide that edge with a
/// midpoint dummy vertex first), plus the usual closure errors.
EdgeSymmetry edge_symmetry(const MetricGraph& graph,
                           const std::vector<EdgeMapGenerator>& generators);

// Symmetry report: lengths/potentials must match along the action exactly and
// the solution space of A gamma_D + B gamma_N = 0 must be invariant under the
// doubled action (the matrices themselves need not commute with it).
struct QGSymmetryReport {
  bool lengths_ok = true;
  bool conditions_ok = true;
  double max_condition_residual = 0.0;  // projector-invariance residual
  std::vector<std::string> violations;
  bool pass = false;
};
QGSymmetryReport check_pi_symmetric(const MetricGraph& graph,
                                    const EdgeSymmetry& sym,
                                    const VertexConditions& vc,
                                    double residual_tol = tol::residual);

/// Canonical equivalent conditions  A~ = (A+iB)^{-1}A,  B~ = (A+iB)^{-1}B
/// (so A~ + iB~ = I).  These commute with the doubled action whenever the
/// original conditions are symmetric in the kernel sense.  Throws
/// Error(errc::singular_a_ib) when A + iB is numerically singular.
VertexConditions symmetrize_conditions(const VertexConditions& vc,
                                       double rank_tol = tol::rank);

// A quotient quantum graph: one edge per kernel-basis column (lengths and
// potentials inherited from the orbit representatives) and compressed vertex
// conditions A_rho, B_rho on its 2d slots.
struct QGQuotient {
  MetricGraph graph;
  Matrix a_rho;      // 2d x 2d
  Matrix b_rho;
  Matrix theta;      // r|E| x d edge-level kernel basis
  Matrix theta_hat;  // 2r|E| x 2d doubled basis (theta with each entry * I_2)
  int rep_degree = 1;
  std::vector<KernelBasis::OrbitBlock> blocks;  // edge-orbit layout
};

/// Builds the quotient graph from symmetrized conditions.  rho must be a
/// representation of sym.edge_group.  Throws Error(errc::not_pi_symmetric)
/// when lengths/potentials break the symmetry or the conditions fail to
/// commute with the doubled action.
QGQuotient quotient_graph(const MetricGraph& graph, const EdgeSymmetry& sym,
                          const Representation& rho, const VertexConditions& vc,
                          double residual_tol = tol::residual,
                          double rank_tol = tol::rank);

/// Bond scattering matrix S(k) = -J (A + ikB)^{-1} (A - ikB), where J swaps
/// the two slots of each edge.  Invariant under row operations on (A, B).
/// Throws Error(errc::singular_a_ikb) when A + ikB is numerically singular.
Matrix scattering_matrix(const MetricGraph& graph, const VertexConditions& vc,
                         double k, double rank_tol = tol::rank);

/// U(k) = e^{ikL} S(k) with L the slot-length diagonal.
Matrix unitary_evolution(const MetricGraph& graph, const VertexConditions& vc,
                         double k, double rank_tol = tol::rank);

/// S_rho(k) = ThetaHat* [I_r (x) S(k)] ThetaHat, checking first that S
/// commutes with the doubled action of every generator.
Matrix quotient_scattering(const Matrix& s, const EdgeSymmetry& sym,
                           const QGQuotient& q,
                           double residual_tol = tol::residual);

// ---------------------------------------------------------------------------
// Secular spectrum: wavenumbers k in (k_min, k_max] where U(k) has eigenvalue
// 1, found by tracking the eigenphases of U across a uniform grid and
// bisecting each crossing of phase zero.

struct SecularOptions {
  double grid_step = 0.0;     // 0: use 0.01 / max edge length
  double phase_tol = 1e-10;   // target |e^{i theta} - 1| at a root
  double cluster_tol = 1e-7;  // roots closer than this merge (multiplicity)
};

struct SecularRoot {
  double k = 0.0;
  int multiplicity = 1;
  bool tangential = false;  // branch touched 1 without a sign change
};

/// Throws Error(errc::potential_unsupported) when any edge potential is
/// nonzero and Error(errc::grid_too_coarse) when an eigenphase moves by more
/// than (almost) pi between neighbouring grid points.  k = 0 is never
/// reported: the secular condition is degenerate there.
std::vector<SecularRoot> secular_spectrum(const MetricGraph& graph,
                                          const VertexConditions& vc,
                                          double k_min, double k_max,
                                          const SecularOptions& opts = {});

// Spectral union check: the roots of the full graph against the roots of all
// irrep quotients, each counted deg(rho) times.
struct SecularComparison {
  std::vector<SecularRoot> full;
  std::vector<SecularRoot> combined;
  double max_distance = 0.0;
  bool pass = false;
};
SecularComparison compare_secular(
    const MetricGraph& graph, const VertexConditions& vc,
    const EdgeSymmetry& sym,
    const std::vector<std::pair<std::string, Representation>>& irreps,
    double k_min, double k_max, const SecularOptions& opts = {},
    double k_tol = 1e-7);

}  // namespace symq
