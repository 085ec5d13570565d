#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "symq/error.hpp"

namespace symq {

/// A permutation of {0..p-1} in one-line notation: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& f, const Perm& g);  ///< apply g first, then f
Perm perm_inverse(const Perm& f);

/// A finite group realized by permutations, closed breadth-first from named
/// generators.  Element 0 is the identity; every element stores the shortest
/// discovered word over generator names with ties broken by discovery order.
class PermGroup {
public:
  /// Breadth-first closure.  Throws Error(errc::group_too_large) when the
  /// closure exceeds `cap` elements and Error(errc::bad_index) for malformed
  /// generator permutations.
  static PermGroup close(int degree, const std::vector<std::pair<std::string, Perm>>& generators,
                         int cap = 10080);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Perm& perm(int element) const { return elements_[static_cast<size_t>(element)]; }
  const std::vector<std::string>& word(int element) const { return words_[static_cast<size_t>(element)]; }
  const std::vector<std::pair<std::string, Perm>>& generators() const { return generators_; }
  /// Indices (into elements) of the generators, in generator order.
  const std::vector<int>& generator_elements() const { return generator_elements_; }

  /// Element index of a permutation; throws Error(errc::bad_index) if absent.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const;
  int compose(int a, int b) const;  ///< index of perm(a) ∘ perm(b) (b first)
  int inverse(int a) const;
  int act(int element, int point) const { return elements_[static_cast<size_t>(element)][static_cast<size_t>(point)]; }

  /// Orbits of the action on {0..degree-1}, each sorted ascending, ordered by
  /// their minimal element; the fundamental domain is that minimal element.
  struct OrbitData {
    std::vector<std::vector<int>> orbits;
    std::vector<int> fundamental_domain;  ///< orbit representatives (minimal indices)
    std::vector<int> orbit_of;            ///< point -> orbit number
  };
  OrbitData orbits() const;

  /// Conjugacy classes as element-index sets, members ascending, classes
  /// ordered by minimal member.
  std::vector<std::vector<int>> conjugacy_classes() const;

private:
  int degree_ = 0;
  std::vector<std::pair<std::string, Perm>> generators_;
  std::vector<int> generator_elements_;
  std::vector<Perm> elements_;
  std::vector<std::vector<std::string>> words_;
  std::unordered_map<std::string, int> index_;  // packed perm -> element index

  static std::string pack(const Perm& p);
};

/// A subgroup of a parent PermGroup, tracked by parent element indices.
struct Subgroup {
  const PermGroup* parent = nullptr;
  std::vector<int> members;      ///< parent element indices, ascending
  std::vector<int> generators;   ///< greedy minimal generating set (parent indices)
  std::vector<int> coset_reps;   ///< left-coset representatives, parent BFS-first

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int parent_element) const;
  int index() const { return parent->size() / size(); }

  /// The subgroup as a standalone PermGroup (generators named after their
  /// parent words, joined by '.'), plus the parent index of each element.
  struct AsGroup {
    PermGroup group;
    std::vector<int> parent_index;  ///< element index in parent per element of `group`
  };
  AsGroup as_group() const;
};

/// Subgroup generated by the given parent elements (BFS closure inside the
/// parent).  Coset representatives are picked in parent element order.
Subgroup subgroup_generated_by(const PermGroup& parent, const std::vector<int>& generator_elements);

/// Stabilizer subgroup of a point.  Throws Error(errc::bad_index) when the
/// point is outside the action's range.
Subgroup stabilizer(const PermGroup& group, int point);

/// All subgroups found by closing element subsets of size <= 3; requires
/// |G| <= 48 (the helper is a fixture-search utility, not a core operation).
std::vector<Subgroup> enumerate_subgroups(const PermGroup& group);

}  // namespace symq
