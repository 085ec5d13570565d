#include "symq/group.hpp"

#include <algorithm>
#include <set>

namespace symq {

Perm perm_identity(int degree) {
  Perm p(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm out(g.size());
  for (size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<size_t>(g[i])];
  return out;
}

Perm perm_inverse(const Perm& f) {
  Perm out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[static_cast<size_t>(f[i])] = static_cast<int>(i);
  return out;
}

std::string PermGroup::pack(const Perm& p) {
  std::string key;
  key.reserve(p.size() * 2);
  for (int v : p) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

PermGroup PermGroup::close(int degree, const std::vector<std::pair<std::string, Perm>>& generators,
                           int cap) {
  for (const auto& [name, p] : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(errc::bad_index, "generator '" + name + "' has length " +
                                       std::to_string(p.size()) + ", expected degree " +
                                       std::to_string(degree));
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
        throw Error(errc::bad_index, "generator '" + name + "' is not a permutation of 0.." +
                                         std::to_string(degree - 1));
      seen[static_cast<size_t>(v)] = true;
    }
  }

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = generators;
  g.elements_.push_back(perm_identity(degree));
  g.words_.push_back({});
  g.index_[pack(g.elements_[0])] = 0;

  // Breadth-first closure by right multiplication; words come out with
  // minimal length, ties resolved by discovery order.
  for (size_t at = 0; at < g.elements_.size(); ++at) {
    for (const auto& [name, gen] : generators) {
      Perm next = perm_compose(g.elements_[at], gen);
      const std::string key = pack(next);
      if (g.index_.count(key)) continue;
      if (static_cast<int>(g.elements_.size()) >= cap)
        throw Error(errc::group_too_large,
                    "closure exceeds cap of " + std::to_string(cap) + " elements");
      g.index_[key] = static_cast<int>(g.elements_.size());
      std::vector<std::string> word = g.words_[at];
      word.push_back(name);
      g.elements_.push_back(std::move(next));
      g.words_.push_back(std::move(word));
    }
  }

  for (const auto& [name, p] : generators) g.generator_elements_.push_back(g.index_of(p));
  return g;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(pack(p));
  if (it == index_.end()) throw Error(errc::bad_index, "permutation is not a group element");
  return it->second;
}

bool PermGroup::contains(const Perm& p) const { return index_.count(pack(p)) > 0; }

int PermGroup::compose(int a, int b) const {
  return index_of(perm_compose(elements_[static_cast<size_t>(a)], elements_[static_cast<size_t>(b)]));
}

int PermGroup::inverse(int a) const { return index_of(perm_inverse(elements_[static_cast<size_t>(a)])); }

PermGroup::OrbitData PermGroup::orbits() const {
  OrbitData data;
  data.orbit_of.assign(static_cast<size_t>(degree_), -1);
  for (int start = 0; start < degree_; ++start) {
    if (data.orbit_of[static_cast<size_t>(start)] >= 0) continue;
    const int orbit_id = static_cast<int>(data.orbits.size());
    std::vector<int> orbit{start};
    data.orbit_of[static_cast<size_t>(start)] = orbit_id;
    for (size_t at = 0; at < orbit.size(); ++at) {
      for (const auto& [name, gen] : generators_) {
        const int image = gen[static_cast<size_t>(orbit[at])];
        if (data.orbit_of[static_cast<size_t>(image)] < 0) {
          data.orbit_of[static_cast<size_t>(image)] = orbit_id;
          orbit.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    data.fundamental_domain.push_back(orbit.front());
    data.orbits.push_back(std::move(orbit));
  }
  return data;
}

std::vector<std::vector<int>> PermGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> assigned(static_cast<size_t>(size()), false);
  for (int e = 0; e < size(); ++e) {
    if (assigned[static_cast<size_t>(e)]) continue;
    std::vector<int> cls{e};
    assigned[static_cast<size_t>(e)] = true;
    for (size_t at = 0; at < cls.size(); ++at) {
      for (int gen : generator_elements_) {
        const int conj = compose(gen, compose(cls[at], inverse(gen)));
        if (!assigned[static_cast<size_t>(conj)]) {
          assigned[static_cast<size_t>(conj)] = true;
          cls.push_back(conj);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool Subgroup::contains(int parent_element) const {
  return std::binary_search(members.begin(), members.end(), parent_element);
}

Subgroup subgroup_generated_by(const PermGroup& parent, const std::vector<int>& generator_elements) {
  Subgroup h;
  h.parent = &parent;

  // Closure inside the parent, tracked by element indices.
  std::set<int> members{0};
  std::vector<int> frontier{0};
  for (size_t at = 0; at < frontier.size(); ++at) {
    for (int gen : generator_elements) {
      const int next = parent.compose(frontier[at], gen);
      if (members.insert(next).second) frontier.push_back(next);
    }
  }
  h.members.assign(members.begin(), members.end());

  // Greedy minimal generating set, scanning members in ascending order.
  std::set<int> closed{0};
  for (int candidate : h.members) {
    if (closed.count(candidate)) continue;
    h.generators.push_back(candidate);
    std::vector<int> grow(closed.begin(), closed.end());
    for (size_t at = 0; at < grow.size(); ++at) {
      for (int gen : h.generators) {
        const int next = parent.compose(grow[at], gen);
        if (closed.insert(next).second) grow.push_back(next);
      }
    }
  }

  // Left-coset representatives: first parent element (in closure order) of
  // each unseen coset gH.
  std::vector<bool> seen(static_cast<size_t>(parent.size()), false);
  for (int e = 0; e < parent.size(); ++e) {
    if (seen[static_cast<size_t>(e)]) continue;
    h.coset_reps.push_back(e);
    for (int m : h.members) seen[static_cast<size_t>(parent.compose(e, m))] = true;
  }
  return h;
}

Subgroup stabilizer(const PermGroup& group, int point) {
  if (point < 0 || point >= group.degree())
    throw Error(errc::bad_index, "stabilizer point " + std::to_string(point) +
                                     " outside degree " + std::to_string(group.degree()));
  std::vector<int> fixing;
  for (int e = 0; e < group.size(); ++e)
    if (group.act(e, point) == point) fixing.push_back(e);
  return subgroup_generated_by(group, fixing);
}

Subgroup::AsGroup Subgroup::as_group() const {
  std::vector<std::pair<std::string, Perm>> gens;
  for (int g : generators) {
    std::string name;
    for (const auto& letter : parent->word(g)) {
      if (!name.empty()) name.push_back('.');
      name += letter;
    }
    if (name.empty()) name = "e";
    gens.emplace_back(name, parent->perm(g));
  }
  AsGroup out{PermGroup::close(parent->degree(), gens, parent->size() + 1), {}};
  out.parent_index.reserve(static_cast<size_t>(out.group.size()));
  for (int e = 0; e < out.group.size(); ++e)
    out.parent_index.push_back(parent->index_of(out.group.perm(e)));
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const PermGroup& group) {
  if (group.size() > 48)
    throw Error(errc::group_too_large,
                "subgroup enumeration is limited to |G| <= 48; supply explicit subgroup files");
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](const std::vector<int>& gens) {
    Subgroup h = subgroup_generated_by(group, gens);
    if (seen.insert(h.members).second) out.push_back(std::move(h));
  };
  add({});
  const int n = group.size();
  for (int a = 1; a < n; ++a) {
    add({a});
    for (int b = a + 1; b < n; ++b) {
      add({a, b});
      for (int c = b + 1; c < n; ++c) add({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

}  // namespace symq
