#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symq/group.hpp"
#include "symq/linalg.hpp"
#include "symq/representation.hpp"

namespace symq {

// Orthonormal basis Theta of the intertwiner kernel space
//   K(rho, pi) = { v : [I_r (x) pi(g)] v = [rho(g)^T (x) I_p] v  for all g },
// optionally organised orbit by orbit.  In orbit-adapted form the columns
// belonging to orbit representative i are supported on the tensor slots of
// point i only, and are built from an orthonormal basis Phi_i of the
// fixed-point subspace of rho restricted to the stabilizer of i.
struct KernelBasis {
  Representation rho;
  Representation pi;
  Matrix theta;  // (r*p) x d, orthonormal columns (unless user-supplied)
  bool orbit_adapted = false;

  struct OrbitBlock {
    int representative = 0;   // fundamental-domain point of the orbit
    int offset = 0;           // first column of this orbit's Theta_i
    int dimension = 0;        // d_i
    int stabilizer_order = 1; // |G_i|
    Matrix phi;               // r x d_i fixed-point basis (orbit-adapted only)
  };
  std::vector<OrbitBlock> blocks;  // empty unless orbit_adapted

  KernelBasis(Representation rho_, Representation pi_, Matrix theta_)
      : rho(std::move(rho_)), pi(std::move(pi_)), theta(std::move(theta_)) {}

  int dimension() const { return static_cast<int>(theta.cols()); }
  int rep_degree() const { return rho.degree(); }
  int points() const { return pi.degree(); }
};

// Result of compressing a symmetric operator onto a kernel-space basis.
struct QuotientResult {
  Matrix matrix;  // d x d
  // orbit representative -> (column offset, block dimension d_i);
  // empty when the basis is not orbit-adapted.
  std::map<int, std::pair<int, int>> block_index;
  KernelBasis basis;
  bool hermitian = false;
};

struct QuotientOptions {
  double residual_tol = tol::residual;  // symmetry-check tolerance
  double rank_tol = tol::rank;          // nullspace rank cutoff
  // When false, theta is not assumed orthonormal and the compression uses
  // the Gram-matrix correction (Theta* Theta)^{-1} Theta* [I (x) Op] Theta.
  bool orthonormal = true;
  // When false, quotient_blocks always evaluates the full group sum instead
  // of dispatching to the free-action / fixed-point / trivial shortcuts.
  bool fast_paths = true;
};

// Canonical orthonormal basis of K(rho, pi), built from the generator
// constraints only (sufficient, since the constraint set is closed under
// products).  d may be zero.
KernelBasis kernel_space(const Representation& rho, const Representation& pi,
                         double rank_tol = tol::rank);

// Orthogonal projector P = (1/|G|) sum_g conj(rho(g)) (x) pi(g) onto the
// kernel space; satisfies P^2 = P, P* = P and P = Theta Theta*.
Matrix projector(const Representation& rho, const Representation& pi);

// Orthonormal basis Phi_i of the joint fixed-point space
//   cap_{g in G_i} ker[I_r - rho(g)^T],
// computed from the subgroup's generators.  The trivial subgroup yields
// exactly the identity matrix.
Matrix fixed_point_basis(const Representation& rho, const Subgroup& g_i,
                         double rank_tol = tol::rank);

// Orbit-adapted basis: Theta_i = sqrt(|G|/|G_i|) * P * (Phi_i (x) e_i) for
// each fundamental-domain point i in ascending order.
KernelBasis orbit_adapted_basis(const Representation& rho,
                                const Representation& pi,
                                double rank_tol = tol::rank);

// Compress a pi-symmetric operator: Op_rho = Theta* [I_r (x) Op] Theta.
// Throws NotPiSymmetric (naming the offending generator) when Op fails to
// commute with the permutation action.
QuotientResult quotient(const Matrix& op, const KernelBasis& basis,
                        const QuotientOptions& opts = {});

// Same operator computed block-by-block from the closed-form sum
//   [Op_rho]_{i,j} = (|G_i| |G_j|)^{-1/2}
//                    sum_g (Phi_i* conj(rho(g)) Phi_j) Op(i, g.j),
// dispatching to the free-action, fixed-point and trivial-representation
// shortcuts whenever they apply.
QuotientResult quotient_blocks(const Matrix& op, const Representation& rho,
                               const Representation& pi,
                               const QuotientOptions& opts = {});

// Group-average of an arbitrary matrix: (1/|G|) sum_g pi(g) M pi(g)*.
// The result always commutes with the action; used to manufacture symmetric
// operators and perturbations.
Matrix symmetrized_operator(const Matrix& m, const Representation& pi);

// ---------------------------------------------------------------------------
// Verifiers.  Each returns a small report rather than throwing, so callers
// can collect and print diagnostics.

// Commutation identity Theta Op_rho = [I_r (x) Op] Theta plus orthonormality
// of the basis.
struct FundamentalReport {
  double commutation_residual = 0.0;
  double orthonormality_residual = 0.0;
  bool pass = false;
};
FundamentalReport verify_fundamental(const Matrix& op,
                                     const QuotientResult& result,
                                     double residual_tol = tol::residual);

// Multiset equality  spec(Op) = union over irreps rho of deg(rho) copies of
// spec(Op_rho).  The irrep list is validated (sum of squared degrees equals
// |G|, characters orthonormal) before use.
struct DecompositionReport {
  struct Entry {
    Complex eigenvalue;
    std::string source;  // irrep label the eigenvalue came from
  };
  std::vector<Entry> quotient_spectrum;   // with multiplicity, sorted
  std::vector<Complex> full_spectrum;     // spec(Op), sorted
  double max_pairing_distance = 0.0;
  bool pass = false;
};
DecompositionReport verify_decomposition(
    const Matrix& op, const Representation& pi,
    const std::vector<std::pair<std::string, Representation>>& irreps,
    double spec_tol = tol::spectrum);

// Generalized eigenspace match:
//   dim E^k_{Op_rho}(lambda) = dim( K(rho,pi)  cap  ker [I_r (x) (Op-lambda)^k] ).
struct SpectralReport {
  int quotient_dim = 0;
  int intersection_dim = 0;
  bool pass = false;
};
SpectralReport verify_spectral(const Matrix& op, const Representation& rho,
                               const Representation& pi, Complex lambda, int k,
                               double rank_tol = tol::rank);

// Structural checks on the block pattern: orbit pairs with no connecting
// entries must give (numerically) zero blocks, and each block must depend
// only on the operator entries between its two orbits (tested by perturbing
// everything else with a symmetrized random matrix).
struct StructureReport {
  double max_zero_block_entry = 0.0;  // worst entry over must-vanish blocks
  double max_locality_drift = 0.0;    // worst block change under perturbation
  bool pass = false;
};
StructureReport verify_structure(const Matrix& op, const Representation& rho,
                                 const Representation& pi,
                                 unsigned int seed = 20240818u);

// Induction compatibility: the quotient of Op by a representation sigma of a
// subgroup equals (up to unitary equivalence, certified by spectra) the
// quotient by the induced representation of the full group.
struct InductionReport {
  std::vector<Complex> subgroup_spectrum;
  std::vector<Complex> induced_spectrum;
  double max_pairing_distance = 0.0;
  bool hermitian = false;
  bool pass = false;
};
InductionReport verify_induction(const Matrix& op, const Representation& pi,
                                 const Subgroup& h, const Representation& sigma,
                                 double spec_tol = tol::spectrum);

}  // namespace symq
