#pragma once

#include <vector>

#include "symq/group.hpp"
#include "symq/linalg.hpp"
#include "symq/representation.hpp"

namespace symq {

/// Conjugacy-class counting condition: H1 and H2 intersect every conjugacy
/// class of the parent group in the same number of elements.
struct SunadaReport {
  struct ClassCount {
    int class_size = 0;
    int in_h1 = 0;
    int in_h2 = 0;
  };
  std::vector<ClassCount> classes;  ///< in conjugacy_classes() order
  bool holds = false;
};
SunadaReport sunada_condition(const PermGroup& group, const Subgroup& h1,
                              const Subgroup& h2);

/// Two subgroups of a common parent together with a representation of each
/// (living on the respective Subgroup::as_group() groups).
struct SubgroupPair {
  Subgroup h1;
  Subgroup h2;
  Representation sigma1;
  Representation sigma2;
};

/// True when Ind sigma1 and Ind sigma2 have equal characters on the parent
/// group (pointwise within `tolerance`), i.e. the induced representations are
/// unitarily equivalent.  With trivial sigmas this reduces to the conjugacy
/// counting condition above.
bool induction_condition(const SubgroupPair& pair, double tolerance = 1e-10);

/// Quotients of one symmetric operator by the two subgroup representations;
/// equal induced characters force the two quotients to be isospectral.
struct IsospectralReport {
  bool condition_holds = false;
  bool hermitian = false;       ///< both quotient matrices Hermitian
  bool spectra_match = false;
  bool jordan_match = true;     ///< generalized eigenspace dims; checked only
                                ///< when the quotients are not Hermitian
  double max_pairing_distance = 0.0;
  Matrix quotient1;
  Matrix quotient2;
  std::vector<Complex> spectrum1;  ///< sorted by (re, im)
  std::vector<Complex> spectrum2;
  bool pass = false;
};

/// Computes both quotients of `op` (under the restrictions of `pi` to H1 and
/// H2) and compares their spectra.  When `require_condition` is set (the
/// default) a pair with unequal induced characters is refused with
/// Error(errc::condition_not_met); pass with require_condition=false to get
/// the full report for such pairs instead.
IsospectralReport certify_isospectral(const Matrix& op,
                                      const Representation& pi,
                                      const SubgroupPair& pair,
                                      double spec_tol = tol::spectrum,
                                      bool require_condition = true);

}  // namespace symq
