#include <cmath>
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "symq/representation.hpp"

using namespace symq;

namespace {
double ip(const Representation& a, const Representation& b) {
  Complex v = character_inner_product(a, b);
  CHECK(std::abs(v.imag()) < 1e-9);
  return v.real();
}
}  // namespace

TEST_CASE("permutation representation acts by point images") {
  PermGroup g = symq::io::load_group(ts::fx("line/group.json"));
  Representation pi = Representation::permutation(g);
  CHECK(pi.degree() == 5);
  CHECK(pi.is_permutation_rep());
  CHECK_FALSE(pi.is_trivial_rep());
  int r = g.generator_elements()[0];
  // pi(g) e_i = e_{g·i}
  for (int i = 0; i < 5; ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(5);
    e(i) = 1.0;
    Eigen::VectorXcd im = pi.at(r) * e;
    CHECK(std::abs(im(g.act(r, i)) - Complex(1, 0)) < 1e-12);
  }
  // Character counts fixed points: r fixes only the center vertex.
  CHECK(std::abs(pi.character(r) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pi.character(0) - Complex(5, 0)) < 1e-12);
}

TEST_CASE("trivial and sign representations") {
  PermGroup g = symq::io::load_group(ts::fx("line/group.json"));
  Representation triv = Representation::trivial(g);
  CHECK(triv.degree() == 1);
  CHECK(triv.is_trivial_rep());
  Representation sgn = Representation::sign(g, {"r"});
  CHECK_FALSE(sgn.is_trivial_rep());
  int r = g.generator_elements()[0];
  CHECK(std::abs(sgn.character(r) - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(sgn.character(0) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("build validates unitarity and the homomorphism property") {
  PermGroup g = symq::io::load_group(ts::fx("line/group.json"));
  // Non-unitary image.
  CHECK_THROWS_AS(Representation::build(g, 1, {{"r", ts::rm({{2.0}})}}), Error);
  try {
    Representation::build(g, 1, {{"r", ts::rm({{2.0}})}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_unitary);
  }
  // Unitary but inconsistent: r has order 2 but a 90-degree rotation does not.
  Matrix rot = ts::rm({{0, -1}, {1, 0}});
  CHECK_THROWS_AS(Representation::build(g, 2, {{"r", rot}}), Error);
  try {
    Representation::build(g, 2, {{"r", rot}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_homomorphism);
  }
  // A consistent 2x2 image works: the swap matrix.
  Representation ok = Representation::build(g, 2, {{"r", ts::rm({{0, 1}, {1, 0}})}});
  CHECK(ok.degree() == 2);
}

TEST_CASE("irreducibility and multiplicities in the two-orbit action") {
  ts::Family f = ts::s4_family();
  std::map<std::string, const Representation*> reps;
  for (const auto& [name, rep] : f.irreps) reps[name] = &rep;

  // Each listed irrep has unit character norm.
  for (const auto& [name, rep] : f.irreps) {
    CAPTURE(name);
    CHECK(ip(rep, rep) == doctest::Approx(1.0).epsilon(1e-9));
  }
  // Distinct irreps are orthogonal.
  CHECK(ip(*reps["standard"], *reps["standard_sign"]) == doctest::Approx(0.0));
  CHECK(ip(*reps["trivial"], *reps["sign"]) == doctest::Approx(0.0));
  // Squares of degrees exhaust the group order: a full irrep list.
  int sum = 0;
  for (const auto& [name, rep] : f.irreps) sum += rep.degree() * rep.degree();
  CHECK(sum == f.group.size());

  // Multiplicities of each irrep inside the permutation action.
  CHECK(ip(*reps["trivial"], f.pi) == doctest::Approx(2.0));
  CHECK(ip(*reps["sign"], f.pi) == doctest::Approx(0.0));
  CHECK(ip(*reps["standard"], f.pi) == doctest::Approx(3.0));
  CHECK(ip(*reps["standard_sign"], f.pi) == doctest::Approx(1.0));
  CHECK(ip(*reps["2d"], f.pi) == doctest::Approx(1.0));
}

TEST_CASE("regular representation has the delta character") {
  PermGroup g = symq::io::load_group(ts::fx("hexagon/group.json"));
  Representation reg = Representation::regular(g);
  CHECK(reg.degree() == g.size());
  CHECK(std::abs(reg.character(0) - Complex(g.size(), 0)) < 1e-12);
  for (int e = 1; e < g.size(); ++e) CHECK(std::abs(reg.character(e)) < 1e-12);
  // Each irrep appears with multiplicity equal to its degree.
  ts::Family f = ts::hexagon_family();
  for (const auto& [name, rep] : f.irreps) {
    CAPTURE(name);
    CHECK(ip(rep, reg) == doctest::Approx(static_cast<double>(rep.degree())));
  }
}

TEST_CASE("direct_sum adds degrees and characters") {
  ts::Family f = ts::hexagon_family();
  const Representation& triv = f.irreps[0].second;
  const Representation& sgn = f.irreps[1].second;
  const Representation& two = f.irreps[2].second;
  Representation sum = direct_sum(direct_sum(triv, sgn), direct_sum(two, two));
  CHECK(sum.degree() == 6);
  for (int e = 0; e < f.group.size(); ++e)
    CHECK(std::abs(sum.character(e) - (triv.character(e) + sgn.character(e) +
                                       2.0 * two.character(e))) < 1e-10);
  // The vertex action of the order-6 symmetry group is free and transitive,
  // so it is equivalent to the regular representation = triv + sign + 2·(2d).
  CHECK(equivalent(sum, f.pi));
  CHECK_FALSE(equivalent(triv, sgn));
  CHECK_FALSE(equivalent(sum, triv));
}

TEST_CASE("restriction and induction satisfy Frobenius reciprocity") {
  ts::Family f = ts::s4_family();
  Subgroup h = stabilizer(f.group, 0);  // order 6
  REQUIRE(h.size() == 6);

  const Representation& triv = f.irreps[0].second;
  const Representation& sgn = f.irreps[1].second;
  const Representation& std3 = f.irreps[2].second;

  Representation sigma = Representation::trivial(h.as_group().group);
  Representation ind = induce(sigma, h);
  CHECK(ind.degree() == h.index());

  // Induced from the trivial character = permutation action on cosets.
  CHECK(ip(ind, triv) == doctest::Approx(1.0));
  CHECK(ip(ind, sgn) == doctest::Approx(0.0));
  CHECK(ip(ind, std3) == doctest::Approx(1.0));

  // Frobenius reciprocity against restriction, for every fixture irrep.
  for (const auto& [name, rep] : f.irreps) {
    CAPTURE(name);
    Representation res = restrict_to(rep, h);
    CHECK(ip(ind, rep) == doctest::Approx(ip(sigma, res)).epsilon(1e-8));
  }

  // Restricting the 3-dimensional irrep to the point stabilizer splits it
  // into two inequivalent pieces (character norm 2).
  Representation res3 = restrict_to(std3, h);
  CHECK(ip(res3, res3) == doctest::Approx(2.0));
}

TEST_CASE("induction multiplies degree by the index and stays a homomorphism") {
  ts::Family f = ts::hexagon_family();
  int s_elt = f.group.generator_elements()[0];
  Subgroup c3 = subgroup_generated_by(f.group, {s_elt});
  Representation sigma = Representation::trivial(c3.as_group().group);
  Representation ind = induce(sigma, c3);
  CHECK(ind.degree() == 2);
  // Spot-check the homomorphism property on all pairs.
  for (int a = 0; a < f.group.size(); ++a)
    for (int b = 0; b < f.group.size(); ++b)
      CHECK(ts::near(ind.at(f.group.compose(a, b)), (ind.at(a) * ind.at(b)).eval(), 1e-10));
  // Induced-from-trivial on an index-2 subgroup = trivial + sign of the quotient.
  CHECK(ip(ind, f.irreps[0].second) == doctest::Approx(1.0));
  CHECK(ip(ind, f.irreps[1].second) == doctest::Approx(1.0));
  CHECK(ip(ind, f.irreps[2].second) == doctest::Approx(0.0));
}
