#include "symq/isospectral.hpp"

#include <algorithm>
#include <cmath>

#include "symq/error.hpp"
#include "symq/quotient.hpp"

namespace symq {
namespace {

std::vector<Complex> sorted_eigenvalues(const Matrix& m, bool hermitian) {
  std::vector<Complex> vals = eig(m, hermitian).expanded();
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return vals;
}

void check_parent(const PermGroup& group, const Subgroup& h,
                  const char* which) {
  if (h.parent == nullptr || !same_group(*h.parent, group))
    throw Error(errc::not_a_subgroup,
                std::string(which) + " is not a subgroup of the given group");
}

}  // namespace

SunadaReport sunada_condition(const PermGroup& group, const Subgroup& h1,
                              const Subgroup& h2) {
  check_parent(group, h1, "H1");
  check_parent(group, h2, "H2");

  SunadaReport report;
  report.holds = true;
  for (const auto& cls : group.conjugacy_classes()) {
    SunadaReport::ClassCount count;
    count.class_size = static_cast<int>(cls.size());
    for (int e : cls) {
      if (h1.contains(e)) ++count.in_h1;
      if (h2.contains(e)) ++count.in_h2;
    }
    if (count.in_h1 != count.in_h2) report.holds = false;
    report.classes.push_back(count);
  }
  return report;
}

bool induction_condition(const SubgroupPair& pair, double tolerance) {
  if (pair.h1.parent == nullptr || pair.h2.parent == nullptr ||
      !same_group(*pair.h1.parent, *pair.h2.parent))
    throw Error(errc::not_a_subgroup,
                "H1 and H2 must be subgroups of the same group");
  Representation ind1 = induce(pair.sigma1, pair.h1);
  Representation ind2 = induce(pair.sigma2, pair.h2);
  const int n = ind1.group().size();
  for (int g = 0; g < n; ++g)
    if (std::abs(ind1.character(g) - ind2.character(g)) > tolerance)
      return false;
  return true;
}

IsospectralReport certify_isospectral(const Matrix& op,
                                      const Representation& pi,
                                      const SubgroupPair& pair,
                                      double spec_tol,
                                      bool require_condition) {
  check_parent(pi.group(), pair.h1, "H1");
  check_parent(pi.group(), pair.h2, "H2");

  IsospectralReport report;
  report.condition_holds = induction_condition(pair);
  if (require_condition && !report.condition_holds)
    throw Error(errc::condition_not_met,
                "induced characters of the two subgroup representations "
                "differ; the pair carries no isospectrality guarantee");

  QuotientResult q1 =
      quotient(op, kernel_space(pair.sigma1, restrict_to(pi, pair.h1)));
  QuotientResult q2 =
      quotient(op, kernel_space(pair.sigma2, restrict_to(pi, pair.h2)));

  report.hermitian = q1.hermitian && q2.hermitian;
  report.quotient1 = q1.matrix;
  report.quotient2 = q2.matrix;
  report.spectrum1 = sorted_eigenvalues(q1.matrix, q1.hermitian);
  report.spectrum2 = sorted_eigenvalues(q2.matrix, q2.hermitian);

  report.spectra_match = report.spectrum1.size() == report.spectrum2.size();
  if (report.spectra_match) {
    for (size_t k = 0; k < report.spectrum1.size(); ++k)
      report.max_pairing_distance =
          std::max(report.max_pairing_distance,
                   std::abs(report.spectrum1[k] - report.spectrum2[k]));
    report.spectra_match = report.max_pairing_distance <= spec_tol;
  }

  // Hermitian quotients with equal spectra are unitarily equivalent outright;
  // otherwise compare the full generalized eigenspace profile as well.
  if (!report.hermitian && report.spectra_match) {
    const int d = static_cast<int>(report.quotient1.rows());
    Spectrum s1 = eig(report.quotient1, false, spec_tol);
    for (Complex lambda : s1.eigenvalues)
      for (int k = 1; k <= d; ++k)
        if (generalized_eigenspace_dim(report.quotient1, lambda, k) !=
            generalized_eigenspace_dim(report.quotient2, lambda, k))
          report.jordan_match = false;
  }

  report.pass = report.condition_holds && report.spectra_match &&
                report.jordan_match;
  return report;
}

}  // namespace symq
