// Acceptance suite: ten end-to-end checks, one line of output each.
// Every check is self-contained and loads its inputs from the fixtures
// directory; the process exit code is the number of failed checks.
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "symq/divisors.hpp"
#include "symq/io.hpp"
#include "symq/isospectral.hpp"
#include "symq/quantum_graph.hpp"
#include "symq/quotient.hpp"

using namespace symq;
using ts::cm;
using ts::rm;

namespace {

const double PI = 3.14159265358979323846;
const Complex I1(0, 1);

struct Check {
  bool ok = true;
  std::ostringstream why;
  void that(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) why << "; ";
    ok = false;
    why << what;
  }
  void near(const Matrix& a, const Matrix& b, double tol, const std::string& what) {
    double d = ts::diff(a, b);
    if (d <= tol) return;
    std::ostringstream ss;
    ss << what << " (diff " << d << ")";
    that(false, ss.str());
  }
};

std::vector<Complex> sorted_spectrum(const Matrix& m, bool hermitian) {
  return eig(m, hermitian, 1e-8).expanded();
}

bool multiset_close(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

// --- 1: path graph -----------------------------------------------------------

void line_goldens(Check& c) {
  ts::Family f = ts::line_family();
  const double r5 = std::sqrt(5.0), s2 = std::sqrt(2.0);
  std::vector<Complex> expect = {0.0, (3 - r5) / 2, (5 - r5) / 2, (3 + r5) / 2,
                                 (5 + r5) / 2};
  std::sort(expect.begin(), expect.end(),
            [](Complex x, Complex y) { return x.real() < y.real(); });
  c.that(multiset_close(sorted_spectrum(f.op, true), expect, 1e-9),
         "full spectrum differs");

  QuotientResult qt = quotient_blocks(f.op, f.irreps[0].second, f.pi);
  QuotientResult qs = quotient_blocks(f.op, f.irreps[1].second, f.pi);
  c.near(qt.matrix, rm({{2, -s2, 0}, {-s2, 2, -1}, {0, -1, 1}}), 1e-10,
         "trivial quotient matrix");
  c.near(qs.matrix, rm({{2, -1}, {-1, 1}}), 1e-10, "sign quotient matrix");

  std::vector<Complex> unioned = sorted_spectrum(qt.matrix, true);
  std::vector<Complex> s_part = sorted_spectrum(qs.matrix, true);
  unioned.insert(unioned.end(), s_part.begin(), s_part.end());
  std::sort(unioned.begin(), unioned.end(),
            [](Complex x, Complex y) { return x.real() < y.real(); });
  c.that(multiset_close(unioned, expect, 1e-9),
         "quotient spectra do not partition the full spectrum");
}

// --- 2: hexagon --------------------------------------------------------------

void hexagon_goldens(Check& c) {
  ts::Family f = ts::hexagon_family();
  const Representation& rho2 = f.irreps[2].second;
  const double r3 = std::sqrt(3.0);

  QuotientResult q = quotient_blocks(f.op, rho2, f.pi);
  c.near(q.matrix, rm({{3 - r3, 0}, {0, 3 + r3}}), 1e-9, "2d quotient matrix");

  Spectrum full = eig(f.op, true, 1e-8);
  c.that(full.eigenvalues.size() == 4 && full.multiplicities[0] == 1 &&
             full.multiplicities[1] == 2 && full.multiplicities[2] == 2 &&
             full.multiplicities[3] == 1,
         "full multiplicity pattern");
  c.that(multiset_close(full.expanded(),
                        {0.0, 3 - r3, 3 - r3, 3 + r3, 3 + r3, 6.0}, 1e-9),
         "full spectrum values");
  c.that(multiset_close(sorted_spectrum(q.matrix, true), {3 - r3, 3 + r3}, 1e-9),
         "quotient spectrum values");

  QuotientOptions generic;
  generic.fast_paths = false;
  QuotientResult qg = quotient_blocks(f.op, rho2, f.pi, generic);
  c.near(q.matrix, qg.matrix, 1e-10, "fast path vs generic path");
}

// --- 3: S4 vertex action -----------------------------------------------------

void s4_goldens(Check& c) {
  ts::Family f = ts::s4_family();
  Subgroup g_dot = stabilizer(f.group, 0);
  Subgroup g_cross = stabilizer(f.group, 4);
  auto dims = [&](const Representation& rho) {
    return std::pair<int, int>(
        static_cast<int>(fixed_point_basis(rho, g_dot).cols()),
        static_cast<int>(fixed_point_basis(rho, g_cross).cols()));
  };
  c.that(dims(f.irreps[0].second) == std::pair<int, int>(1, 1), "d for trivial");
  c.that(dims(f.irreps[1].second) == std::pair<int, int>(0, 0), "d for sign");
  c.that(dims(f.irreps[2].second) == std::pair<int, int>(1, 2), "d for standard");
  c.that(dims(f.irreps[3].second) == std::pair<int, int>(0, 1),
         "d for standard (x) sign");
  c.that(dims(f.irreps[4].second) == std::pair<int, int>(0, 1), "d for 2d irrep");

  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  QuotientResult qs = quotient_blocks(f.op, f.irreps[2].second, f.pi);
  // The canonical fixed-point basis orders the two cross-orbit columns the
  // other way round than the published display; conjugate by that swap.
  Eigen::PermutationMatrix<3> p;
  p.indices() << 0, 2, 1;
  Matrix display = p.transpose() * qs.matrix * p;
  c.near(display, rm({{3, -1, -r2}, {-1, 1, 0}, {-r2, 0, 3}}), 1e-10,
         "standard-rep quotient display");

  QuotientResult qt = quotient_blocks(f.op, f.irreps[0].second, f.pi);
  c.near(qt.matrix, rm({{3, -r3}, {-r3, 1}}), 1e-10, "trivial quotient display");
  c.that(multiset_close(sorted_spectrum(qt.matrix, true), {0.0, 4.0}, 1e-9),
         "trivial quotient spectrum");

  DecompositionReport dec = verify_decomposition(f.op, f.pi, f.irreps, 1e-8);
  c.that(dec.pass, "decomposition verifier");
  c.that(dec.max_pairing_distance <= 1e-9, "eigenvalue pairing beyond 1e-9");
  c.that(dec.full_spectrum.size() == 16, "expected 16 eigenvalues");

  Spectrum full = eig(f.op, true, 1e-8);
  std::vector<int> mults = full.multiplicities;
  c.that(mults == std::vector<int>{1, 3, 2, 3, 3, 1, 3}, "multiplicity pattern");
  std::vector<Complex> rounded = {0.0,  0.44, 0.44, 0.44, 1.0, 1.0,
                                  2.0,  2.0,  2.0,  3.0,  3.0, 3.0,
                                  4.0,  4.56, 4.56, 4.56};
  c.that(multiset_close(full.expanded(), rounded, 1e-2),
         "rounded spectrum values");
  c.that(multiset_close(dec.full_spectrum, full.expanded(), 1e-9),
         "decomposition vs eigensolver");
}

// --- 4: disappearing edges ---------------------------------------------------

void disappearing_goldens(Check& c) {
  ts::Family f = ts::disappearing_family();
  QuotientResult qt = quotient_blocks(f.op, f.irreps[0].second, f.pi);
  QuotientResult qs = quotient_blocks(f.op, f.irreps[1].second, f.pi);
  c.near(qt.matrix, rm({{3, -2, -1}, {-2, 3, -1}, {-1, -1, 2}}), 1e-10,
         "trivial quotient");
  c.near(qs.matrix, rm({{3, 0, -1}, {0, 5, -1}, {-1, -1, 2}}), 1e-10,
         "sign quotient");
  c.that(std::abs(qs.matrix(0, 1)) <= 1e-10,
         "connecting block did not vanish");
}

// --- 5: directed operator ----------------------------------------------------

void directed_goldens(Check& c) {
  ts::Family f = ts::directed_family();
  const double s2 = std::sqrt(2.0);
  QuotientResult q = quotient_blocks(f.op, f.irreps[0].second, f.pi);
  c.near(q.matrix, rm({{2, 1, 0}, {1, 2, 0}, {0, s2, 1}}), 1e-10,
         "trivial quotient");
  c.that(!q.hermitian, "quotient unexpectedly hermitian");

  c.that(generalized_eigenspace_dim(f.op, 1.0, 1) == 2, "full E^1 dim");
  c.that(generalized_eigenspace_dim(f.op, 1.0, 2) == 3, "full E^2 dim");
  c.that(generalized_eigenspace_dim(q.matrix, 1.0, 1) == 1, "quotient E^1 dim");
  c.that(generalized_eigenspace_dim(q.matrix, 1.0, 2) == 2, "quotient E^2 dim");
}

// --- 6: quaternion action ----------------------------------------------------

Matrix reweighted(const ts::Family& f, const double w[5]) {
  Matrix op = Matrix::Zero(f.op.rows(), f.op.cols());
  for (int r = 0; r < f.op.rows(); ++r)
    for (int cc = 0; cc < f.op.cols(); ++cc) {
      double v = f.op(r, cc).real();
      if (v != 0.0) op(r, cc) = w[static_cast<int>(v)];
    }
  return op;
}

void quaternion_goldens(Check& c) {
  ts::Family f = ts::q8_family();
  const Representation& rho2 = f.irreps[4].second;

  QuotientResult q = quotient_blocks(f.op, rho2, f.pi);
  Matrix golden = cm({{0, 0, Complex(1, -2), 0, 3, 4},
                      {0, 0, 0, Complex(1, 2), -4, 3},
                      {Complex(1, 2), 0, 0, 0, 0, 0},
                      {0, Complex(1, -2), 0, 0, 0, 0},
                      {3, -4, 0, 0, 0, 0},
                      {4, 3, 0, 0, 0, 0}});
  c.near(q.matrix, golden, 1e-10, "block pattern");

  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> u(0.5, 2.5);
  int done = 0;
  while (done < 10) {
    double w[5] = {0.0, u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(w[1] - w[2]) < 0.05 || std::abs(w[3] - w[4]) < 0.05) continue;
    ++done;
    Matrix op = reweighted(f, w);
    QuotientResult qw = quotient_blocks(op, rho2, f.pi);
    Spectrum s = eig(qw.matrix, true, 1e-8);
    for (int m : s.multiplicities)
      c.that(m % 2 == 0, "odd multiplicity in quaternionic quotient");
  }
}

// --- 7: star graph -----------------------------------------------------------

void star_goldens(Check& c) {
  io::QuantumGraphFile f = io::load_quantum_graph(ts::fx("star/graph.json"));
  EdgeSymmetry sym = io::load_edge_symmetry(ts::fx("star/symmetry.json"), f.graph);
  const double s2 = std::sqrt(2.0), s8 = std::sqrt(8.0);

  VertexConditions tilde = symmetrize_conditions(f.conditions);
  Matrix at = Matrix::Zero(6, 6);
  Matrix bt = Matrix::Zero(6, 6);
  int starts[3] = {0, 2, 4};
  for (int i : {0, 1, 2})
    for (int j : {0, 1, 2}) {
      at(starts[i], starts[j]) = (i == j ? 2.0 : -1.0) / 3.0;
      bt(starts[i], starts[j]) = 1.0 / (3.0 * I1);
    }
  for (int s : {1, 3, 5}) bt(s, s) = 1.0 / I1;
  c.near(tilde.a, at, 1e-9, "canonical A");
  c.near(tilde.b, bt, 1e-9, "canonical B");
  c.near(tilde.a + I1 * tilde.b, Matrix::Identity(6, 6), 1e-9, "A + iB = I");
  c.that(is_hermitian((tilde.a * tilde.b.adjoint()).eval(), 1e-9),
         "A B* not hermitian");
  Matrix pihat = sym.slot_matrix(sym.edge_group.generator_elements()[0]);
  c.that(max_abs(pihat * tilde.a - tilde.a * pihat) <= 1e-9 &&
             max_abs(pihat * tilde.b - tilde.b * pihat) <= 1e-9,
         "canonical conditions do not commute with the action");

  Representation triv = Representation::trivial(sym.edge_group);
  QGQuotient q = quotient_graph(f.graph, sym, triv, tilde);
  c.near(q.theta, rm({{1, 0}, {0, 1 / s2}, {0, 1 / s2}}), 1e-9, "theta");
  c.near(q.a_rho, rm({{2, 0, -s2, 0}, {0, 0, 0, 0}, {-s2, 0, 1, 0}, {0, 0, 0, 0}}) / 3.0,
         1e-9, "quotient A");
  c.near(q.b_rho,
         cm({{1. / (3. * I1), 0, s2 / (3. * I1), 0},
             {0, 1. / I1, 0, 0},
             {s2 / (3. * I1), 0, 2. / (3. * I1), 0},
             {0, 0, 0, 1. / I1}}),
         1e-9, "quotient B");

  Matrix s_golden = rm({{0, 3, 0, 0, 0, 0},
                        {-1, 0, 2, 0, 2, 0},
                        {0, 0, 0, 3, 0, 0},
                        {2, 0, -1, 0, 2, 0},
                        {0, 0, 0, 0, 0, 3},
                        {2, 0, 2, 0, -1, 0}}) /
                    3.0;
  Matrix s = scattering_matrix(f.graph, f.conditions, 1.0);
  c.near(s, s_golden, 1e-9, "scattering matrix");
  c.that(is_unitary(s, 1e-9), "S not unitary");

  Matrix s_rho = quotient_scattering(s, sym, q);
  Matrix s_rho_golden =
      rm({{0, 3, 0, 0}, {-1, 0, s8, 0}, {0, 0, 0, 3}, {s8, 0, 1, 0}}) / 3.0;
  c.near(s_rho, s_rho_golden, 1e-9, "quotient scattering matrix");
  Matrix s_from_cond = scattering_matrix(q.graph, {q.a_rho, q.b_rho}, 1.0);
  c.near(s_from_cond, s_rho, 1e-9,
         "compressed S vs scattering of the quotient conditions");

  std::vector<std::pair<std::string, Representation>> irreps = {
      {"trivial", triv}, {"sign", Representation::sign(sym.edge_group, {"r"})}};
  SecularComparison cmp =
      compare_secular(f.graph, f.conditions, sym, irreps, 0.0, 20.0);
  c.that(cmp.pass, "secular union mismatch");
  c.that(cmp.max_distance <= 1e-7, "secular pairing beyond 1e-7");
}

// --- 8: randomized property suites -------------------------------------------

void property_suites(Check& c) {
  std::vector<ts::Family> fams = ts::all_families();
  std::mt19937 rng(20240823u);
  int cases = 0;
  for (const ts::Family& f : fams) {
    for (int trial = 0; trial < 15 && c.ok; ++trial) {
      ++cases;
      Matrix op = symmetrized_operator(
          ts::random_hermitian(static_cast<int>(f.op.rows()), rng), f.pi);
      size_t pick = static_cast<size_t>(trial) % f.irreps.size();
      for (size_t k = 0; k < f.irreps.size(); ++k) {
        const Representation& rho = f.irreps[k].second;
        QuotientResult q = quotient_blocks(op, rho, f.pi);
        FundamentalReport fund = verify_fundamental(op, q);
        c.that(fund.pass, f.name + ": fundamental identity");

        Complex ip = character_inner_product(rho, f.pi);
        double expected = std::round(ip.real());
        c.that(std::abs(ip.real() - expected) <= 1e-8 &&
                   std::abs(ip.imag()) <= 1e-8,
               f.name + ": character inner product not integral");
        c.that(q.matrix.rows() == static_cast<Eigen::Index>(expected),
               f.name + ": dim K != character inner product");

        if (k == pick) {
          QuotientResult plain = quotient(op, kernel_space(rho, f.pi));
          c.that(multiset_close(sorted_spectrum(q.matrix, q.hermitian),
                                sorted_spectrum(plain.matrix, plain.hermitian),
                                1e-8),
                 f.name + ": two construction paths disagree");
          StructureReport st = verify_structure(op, rho, f.pi);
          c.that(st.pass, f.name + ": structure checks");
        }
      }
      if (f.complete) {
        DecompositionReport dec = verify_decomposition(op, f.pi, f.irreps, 1e-8);
        c.that(dec.pass, f.name + ": spectral decomposition");
      }
    }
  }
  c.that(cases >= 100, "fewer than 100 randomized cases");
}

// --- 9: isospectrality -------------------------------------------------------

void isospectral_checks(Check& c) {
  ts::Family s4 = ts::s4_family();
  std::vector<Subgroup> subs = enumerate_subgroups(s4.group);
  c.that(subs.size() == 30, "subgroup enumeration size");
  int disagreements = 0;
  for (const Subgroup& h1 : subs)
    for (const Subgroup& h2 : subs) {
      bool counting = sunada_condition(s4.group, h1, h2).holds;
      SubgroupPair pair{h1, h2, Representation::trivial(h1.as_group().group),
                        Representation::trivial(h2.as_group().group)};
      if (counting != induction_condition(pair)) ++disagreements;
    }
  c.that(disagreements == 0, "conjugacy counting vs induced characters");

  PermGroup g = io::load_group(ts::fx("aff8/group.json"));
  Matrix op = io::load_operator(ts::fx("aff8/adjacency.json"));
  Representation pi = Representation::permutation(g);
  SubgroupPair pair = io::load_pair(ts::fx("aff8/pair.json"), g);
  IsospectralReport rep = certify_isospectral(op, pi, pair);
  c.that(rep.condition_holds, "pair condition");
  c.that(rep.pass && rep.spectra_match, "certification failed");
  c.that(ts::diff(rep.quotient1, rep.quotient2) >= 0.1,
         "quotients unexpectedly identical");
  c.that(rep.max_pairing_distance <= 1e-9, "spectra differ beyond 1e-9");
}

// --- 10: divisors ------------------------------------------------------------

void divisor_checks(Check& c) {
  for (ts::Family f : {ts::line_family(), ts::s4_family()}) {
    DivisorQuotientReport rep = divisor_vs_trivial_quotient(f.op, f.pi);
    Matrix y = y_projector(rep.partition);
    c.that(max_abs(y * y - y) <= 1e-12, f.name + ": Y not idempotent");
    c.that(max_abs(y - y.adjoint()) <= 1e-12, f.name + ": Y not self-adjoint");
    c.that(max_abs(y * f.op - f.op * y) <= 1e-12,
           f.name + ": Y does not commute with the operator");

    c.that(rep.pass, f.name + ": similarity check");
    c.that(rep.max_difference <= 1e-10, f.name + ": similarity beyond 1e-10");
    const int m = static_cast<int>(rep.partition.size());
    Matrix v = Matrix::Zero(m, m);
    for (int mu = 0; mu < m; ++mu)
      v(mu, mu) = std::sqrt(static_cast<double>(rep.partition[mu].size()));
    c.near(v * rep.divisor * v.inverse(), rep.quotient, 1e-10,
           f.name + ": V D V^-1 vs quotient");
    c.near(rep.similarity, rep.quotient, 1e-10,
           f.name + ": reported conjugated divisor vs quotient");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "path graph quotient pair and spectrum split", line_goldens},
      {2, "hexagon free-action quotient and fast paths", hexagon_goldens},
      {3, "S4 vertex action: dimensions, displays, accounting", s4_goldens},
      {4, "vanishing connecting block", disappearing_goldens},
      {5, "non-normal operator and Jordan structure", directed_goldens},
      {6, "quaternion block pattern and even degeneracy", quaternion_goldens},
      {7, "star graph conditions, scattering, secular union", star_goldens},
      {8, "randomized property suites (>= 100 cases)", property_suites},
      {9, "subgroup condition sweep and isospectral pair", isospectral_checks},
      {10, "divisor projector and similarity", divisor_checks},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.that(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d %s  %s\n", cr.id, c.ok ? "PASS" : "FAIL",
                cr.title);
    if (!c.ok) {
      std::printf("              %s\n", c.why.str().c_str());
      ++failed;
    }
  }
  std::printf("%d/10 acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failed);
  return failed;
}
