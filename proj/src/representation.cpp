#include "symq/representation.hpp"

#include <random>

namespace symq {

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (&a == &b) return true;
  if (a.degree() != b.degree() || a.size() != b.size()) return false;
  if (a.generators() != b.generators()) return false;
  for (int e = 0; e < a.size(); ++e)
    if (a.perm(e) != b.perm(e)) return false;
  return true;
}

namespace {

void validate_homomorphism(const PermGroup& group, const std::vector<Matrix>& matrices,
                           double tolerance) {
  const int n = group.size();
  auto check_pair = [&](int a, int b) {
    const int ab = group.compose(a, b);
    const double violation =
        max_abs(matrices[static_cast<size_t>(a)] * matrices[static_cast<size_t>(b)] -
                matrices[static_cast<size_t>(ab)]);
    if (violation > tolerance)
      throw Error(errc::not_a_homomorphism,
                  "rho(g)rho(h) != rho(gh) for element pair (" + std::to_string(a) + ", " +
                      std::to_string(b) + "), violation " + std::to_string(violation));
  };
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check_pair(a, b);
  } else {
    std::mt19937 rng(20240818u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 500; ++t) check_pair(pick(rng), pick(rng));
  }
}

}  // namespace

Representation Representation::build(PermGroup group, int degree,
                                     const std::map<std::string, Matrix>& generator_images) {
  for (const auto& [name, gen] : group.generators()) {
    auto it = generator_images.find(name);
    if (it == generator_images.end())
      throw Error(errc::parse_error, "no image supplied for generator '" + name + "'");
    if (it->second.rows() != degree || it->second.cols() != degree)
      throw Error(errc::bad_shape, "image of generator '" + name + "' is " +
                                       std::to_string(it->second.rows()) + "x" +
                                       std::to_string(it->second.cols()) + ", expected degree " +
                                       std::to_string(degree));
    if (!is_unitary(it->second, tol::unitary))
      throw Error(errc::not_unitary, "image of generator '" + name + "' is not unitary");
  }

  Representation rho;
  rho.degree_ = degree;
  rho.matrices_.reserve(static_cast<size_t>(group.size()));
  for (int e = 0; e < group.size(); ++e) {
    Matrix m = Matrix::Identity(degree, degree);
    for (const auto& letter : group.word(e)) m = m * generator_images.at(letter);
    rho.matrices_.push_back(std::move(m));
  }
  validate_homomorphism(group, rho.matrices_, tol::residual);
  rho.group_ = std::move(group);
  return rho;
}

Representation Representation::permutation(PermGroup group) {
  Representation pi;
  pi.degree_ = group.degree();
  pi.permutation_rep_ = true;
  for (int e = 0; e < group.size(); ++e) {
    Matrix m = Matrix::Zero(group.degree(), group.degree());
    for (int j = 0; j < group.degree(); ++j) m(group.act(e, j), j) = 1.0;
    pi.matrices_.push_back(std::move(m));
  }
  pi.group_ = std::move(group);
  return pi;
}

Representation Representation::trivial(PermGroup group) {
  Representation rho;
  rho.degree_ = 1;
  rho.matrices_.assign(static_cast<size_t>(group.size()), Matrix::Identity(1, 1));
  rho.group_ = std::move(group);
  return rho;
}

Representation Representation::sign(PermGroup group, const std::vector<std::string>& negated_generators) {
  std::map<std::string, Matrix> images;
  for (const auto& [name, gen] : group.generators()) {
    const bool negated = std::find(negated_generators.begin(), negated_generators.end(), name) !=
                         negated_generators.end();
    images[name] = Matrix::Constant(1, 1, negated ? -1.0 : 1.0);
  }
  return build(std::move(group), 1, images);
}

Representation Representation::regular(const PermGroup& group) {
  // Left multiplication on element indices: R(g) e_h = e_{gh}.  The result is
  // a representation of `group` itself, so it mixes freely with other
  // representations of the same group.  (permutation_rep_ stays false: the
  // matrices permute element indices, not the group's points.)
  Representation rep;
  rep.degree_ = group.size();
  rep.matrices_.reserve(static_cast<size_t>(group.size()));
  for (int g = 0; g < group.size(); ++g) {
    Matrix m = Matrix::Zero(group.size(), group.size());
    for (int h = 0; h < group.size(); ++h) m(group.compose(g, h), h) = 1.0;
    rep.matrices_.push_back(std::move(m));
  }
  rep.group_ = group;
  return rep;
}

bool Representation::is_trivial_rep() const {
  if (degree_ != 1) return false;
  for (const auto& m : matrices_)
    if (std::abs(m(0, 0) - 1.0) > 1e-12) return false;
  return true;
}

Representation restrict_to(const Representation& rho, const Subgroup& h) {
  if (!same_group(rho.group(), *h.parent))
    throw Error(errc::not_a_subgroup, "subgroup's parent is not the representation's group");
  Subgroup::AsGroup standalone = h.as_group();
  Representation res;
  res.degree_ = rho.degree();
  res.matrices_.reserve(static_cast<size_t>(standalone.group.size()));
  for (int e = 0; e < standalone.group.size(); ++e)
    res.matrices_.push_back(rho.at(standalone.parent_index[static_cast<size_t>(e)]));
  res.permutation_rep_ = rho.is_permutation_rep();
  res.group_ = std::move(standalone.group);
  return res;
}

Representation induce(const Representation& sigma, const Subgroup& h) {
  const PermGroup& parent = *h.parent;
  // σ must live on H's standalone realization: same degree and element set.
  if (sigma.group().degree() != parent.degree() || sigma.group().size() != h.size())
    throw Error(errc::not_a_subgroup, "sigma is not a representation of the given subgroup");
  std::vector<int> h_index_of_parent(static_cast<size_t>(parent.size()), -1);
  for (int e = 0; e < sigma.group().size(); ++e) {
    const Perm& p = sigma.group().perm(e);
    if (!parent.contains(p) || !h.contains(parent.index_of(p)))
      throw Error(errc::not_a_subgroup, "sigma's group does not coincide with the given subgroup");
    h_index_of_parent[static_cast<size_t>(parent.index_of(p))] = e;
  }

  const int n = static_cast<int>(h.coset_reps.size());
  const int s = sigma.degree();
  Representation ind;
  ind.degree_ = n * s;
  ind.matrices_.reserve(static_cast<size_t>(parent.size()));
  for (int g = 0; g < parent.size(); ++g) {
    Matrix m = Matrix::Zero(n * s, n * s);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int moved = parent.compose(parent.inverse(h.coset_reps[static_cast<size_t>(i)]),
                                         parent.compose(g, h.coset_reps[static_cast<size_t>(j)]));
        const int in_h = h_index_of_parent[static_cast<size_t>(moved)];
        if (in_h >= 0) m.block(i * s, j * s, s, s) = sigma.at(in_h);
      }
    }
    ind.matrices_.push_back(std::move(m));
  }
  ind.group_ = parent;
  return ind;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!same_group(a.group(), b.group()))
    throw Error(errc::bad_index, "direct_sum requires representations of the same group");
  Representation sum;
  sum.degree_ = a.degree() + b.degree();
  sum.matrices_.reserve(static_cast<size_t>(a.group().size()));
  for (int e = 0; e < a.group().size(); ++e) {
    Matrix m = Matrix::Zero(sum.degree_, sum.degree_);
    m.topLeftCorner(a.degree(), a.degree()) = a.at(e);
    m.bottomRightCorner(b.degree(), b.degree()) = b.at(e);
    sum.matrices_.push_back(std::move(m));
  }
  sum.group_ = a.group();
  return sum;
}

Complex character_inner_product(const Representation& a, const Representation& b) {
  if (!same_group(a.group(), b.group()))
    throw Error(errc::bad_index, "character_inner_product requires the same group");
  Complex sum = 0.0;
  for (int e = 0; e < a.group().size(); ++e)
    sum += a.character(e) * std::conj(b.character(e));
  return sum / static_cast<double>(a.group().size());
}

bool equivalent(const Representation& a, const Representation& b, double tolerance) {
  if (!same_group(a.group(), b.group()) || a.degree() != b.degree()) return false;
  for (int e = 0; e < a.group().size(); ++e)
    if (std::abs(a.character(e) - b.character(e)) > tolerance) return false;
  return true;
}

}  // namespace symq
