#pragma once

#include <stdexcept>
#include <string>

namespace symq {

/// Stable error conditions surfaced by the library.  The CLI maps each class
/// to a process exit code (see tools/symq.cpp): symmetry violations (2),
/// input/shape errors (3) and numerical failures (4).
enum class errc {
  bad_shape,
  eig_fail,
  group_too_large,
  not_a_homomorphism,
  not_unitary,
  not_a_subgroup,
  bad_index,
  not_pi_symmetric,
  incomplete_irrep_list,
  bad_vertex_partition,
  singular_a_ib,
  singular_a_ikb,
  grid_too_coarse,
  potential_unsupported,
  reversal_edge,
  condition_not_met,
  bad_partition,
  parse_error,
};

/// Short stable name of an error condition, e.g. "NotPiSymmetric".
const char* errc_name(errc code);

/// Exception carrying an error condition plus a human-readable message,
/// formatted "Name: context message".
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace symq
