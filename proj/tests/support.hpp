#pragma once

// Shared helpers for the test suite: fixture paths/loaders, matrix literals
// and comparison shorthand.  FIXTURES_DIR is injected by CMake.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "symq/io.hpp"
#include "symq/linalg.hpp"
#include "symq/quotient.hpp"
#include "symq/representation.hpp"

namespace ts {

using symq::Complex;
using symq::Matrix;

inline std::string fx(const std::string& rel) {
  return std::string(FIXTURES_DIR) + "/" + rel;
}

/// Real matrix literal.
inline Matrix rm(const std::vector<std::vector<double>>& rows) {
  Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

/// Complex matrix literal.
inline Matrix cm(const std::vector<std::vector<Complex>>& rows) {
  Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

inline double diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return symq::max_abs(a - b);
}

inline bool near(const Matrix& a, const Matrix& b, double tol = 1e-10) {
  return diff(a, b) <= tol;
}

/// Random Hermitian matrix with entries O(1); deterministic per seed.
inline Matrix random_hermitian(int n, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return (m + m.adjoint().eval()) / 2.0;
}

/// A fixture family: permutation group acting on the operator's index set.
struct Family {
  std::string name;
  symq::PermGroup group;
  symq::Representation pi;
  Matrix op;
  /// Irreps paired with labels; `complete` means the list is a full set of
  /// pairwise-inequivalent irreps of the group (enables whole-spectrum checks).
  std::vector<std::pair<std::string, symq::Representation>> irreps;
  bool complete = false;
};

inline symq::Representation sign_rep(const symq::PermGroup& g,
                                     const std::vector<std::string>& negated) {
  return symq::Representation::sign(g, negated);
}

inline Family line_family() {
  Family f;
  f.name = "line";
  f.group = symq::io::load_group(fx("line/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("line/laplacian.json"));
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign", sign_rep(f.group, {"r"}));
  f.complete = true;
  return f;
}

inline Family hexagon_family() {
  Family f;
  f.name = "hexagon";
  f.group = symq::io::load_group(fx("hexagon/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("hexagon/h.json"));
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign", sign_rep(f.group, {"r"}));
  f.irreps.emplace_back("2d", symq::io::load_representation(fx("hexagon/rho2.json"), f.group));
  f.complete = true;
  return f;
}

inline Family s4_family() {
  Family f;
  f.name = "s4";
  f.group = symq::io::load_group(fx("s4/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("s4/h.json"));
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign", sign_rep(f.group, {"s12", "s23", "s34"}));
  f.irreps.emplace_back("standard", symq::io::load_representation(fx("s4/rep_standard.json"), f.group));
  f.irreps.emplace_back("standard_sign",
                        symq::io::load_representation(fx("s4/rep_standard_sign.json"), f.group));
  f.irreps.emplace_back("2d", symq::io::load_representation(fx("s4/rep_2d.json"), f.group));
  f.complete = true;
  return f;
}

inline Family disappearing_family() {
  Family f;
  f.name = "disappearing";
  f.group = symq::io::load_group(fx("disappearing/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("disappearing/laplacian.json"));
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign", sign_rep(f.group, {"r"}));
  f.complete = true;
  return f;
}

inline Family directed_family() {
  Family f;
  f.name = "directed";
  f.group = symq::io::load_group(fx("directed/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("directed/op.json"));
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign", sign_rep(f.group, {"r"}));
  f.complete = true;
  return f;
}

inline Family q8_family() {
  Family f;
  f.name = "q8";
  f.group = symq::io::load_group(fx("q8/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("q8/a.json"));
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign_i", sign_rep(f.group, {"i"}));
  f.irreps.emplace_back("sign_j", sign_rep(f.group, {"j"}));
  f.irreps.emplace_back("sign_ij", sign_rep(f.group, {"i", "j"}));
  f.irreps.emplace_back("2d", symq::io::load_representation(fx("q8/rho.json"), f.group));
  f.complete = true;
  return f;
}

inline Family aff8_family() {
  Family f;
  f.name = "aff8";
  f.group = symq::io::load_group(fx("aff8/group.json"));
  f.pi = symq::Representation::permutation(f.group);
  f.op = symq::io::load_operator(fx("aff8/adjacency.json"));
  // Characters of the point stabilizer factor through the action in useful
  // ways; for property tests we use one-dimensional reps of the full group.
  // Aff(Z8) / [Aff,Aff] has four characters determined on (t, m3, m5).
  f.irreps.emplace_back("trivial", symq::Representation::trivial(f.group));
  f.irreps.emplace_back("sign_m3", sign_rep(f.group, {"m3"}));
  f.irreps.emplace_back("sign_m5", sign_rep(f.group, {"m5"}));
  f.irreps.emplace_back("sign_m3m5", sign_rep(f.group, {"m3", "m5"}));
  f.complete = false;  // higher-dimensional irreps intentionally omitted
  return f;
}

inline std::vector<Family> all_families() {
  std::vector<Family> fams;
  fams.push_back(line_family());
  fams.push_back(hexagon_family());
  fams.push_back(s4_family());
  fams.push_back(disappearing_family());
  fams.push_back(directed_family());
  fams.push_back(q8_family());
  fams.push_back(aff8_family());
  return fams;
}

}  // namespace ts
