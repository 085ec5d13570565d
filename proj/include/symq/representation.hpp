#pragma once

#include <map>

#include "symq/group.hpp"
#include "symq/linalg.hpp"

namespace symq {

/// A homomorphism from a permutation group into unitary matrices.  Matrices
/// are aligned with the group's element order.  The group is held by value
/// (closures are small), so representations are self-contained; "same group"
/// preconditions are checked structurally with same_group().
class Representation {
public:
  /// Builds element matrices from one unitary image per generator, following
  /// each element's stored word.  Validates unitarity (εunit) and the
  /// homomorphism property: all pairs when |G| <= 200, else 500 seeded random
  /// pairs, to 1e-9.  Throws Error(errc::not_unitary) or
  /// Error(errc::not_a_homomorphism) naming the offending pair.
  static Representation build(PermGroup group, int degree,
                              const std::map<std::string, Matrix>& generator_images);

  /// The permutation representation: [π(g)f](i) = f(g⁻¹ i), i.e. π(g) e_i = e_{g·i}.
  static Representation permutation(PermGroup group);

  /// One-dimensional all-ones representation.
  static Representation trivial(PermGroup group);

  /// One-dimensional representation sending the named generators to -1 and
  /// every other generator to +1; validated as a homomorphism.
  static Representation sign(PermGroup group, const std::vector<std::string>& negated_generators);

  /// The regular representation: G acting on its own elements by left
  /// multiplication, as a degree-|G| permutation representation.
  static Representation regular(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  int degree() const { return degree_; }
  const Matrix& at(int element) const { return matrices_[static_cast<size_t>(element)]; }
  Complex character(int element) const { return matrices_[static_cast<size_t>(element)].trace(); }
  bool is_permutation_rep() const { return permutation_rep_; }

  /// True when the representation is one-dimensional and identically 1.
  bool is_trivial_rep() const;

private:
  PermGroup group_;
  int degree_ = 0;
  std::vector<Matrix> matrices_;
  bool permutation_rep_ = false;

  friend Representation direct_sum(const Representation&, const Representation&);
  friend Representation restrict_to(const Representation&, const Subgroup&);
  friend Representation induce(const Representation&, const Subgroup&);
};

/// Structural equality: same degree, same generators, same element list.
bool same_group(const PermGroup& a, const PermGroup& b);

/// Restriction of ρ to H: the same matrices, indexed by H's elements (H is
/// realized as a standalone group via Subgroup::as_group).  Throws
/// Error(errc::not_a_subgroup) when H's parent is not ρ's group.
Representation restrict_to(const Representation& rho, const Subgroup& h);

/// Induced representation Ind_H^G σ, where σ must live on H's standalone
/// group.  Block (i,j) of Ind σ(g) is σ(gᵢ⁻¹ g gⱼ) when that element lies in
/// H, else 0; degree = [G:H]·deg σ.
Representation induce(const Representation& sigma, const Subgroup& h);

/// Blockwise direct sum; both summands must share the same group.
Representation direct_sum(const Representation& a, const Representation& b);

/// (1/|G|) Σ_g χ₁(g)·conj(χ₂(g)).
Complex character_inner_product(const Representation& a, const Representation& b);

/// True when the two representations have equal characters within `tolerance`
/// (equal characters ⇔ equivalent representations for finite groups).
bool equivalent(const Representation& a, const Representation& b, double tolerance = 1e-9);

}  // namespace symq
