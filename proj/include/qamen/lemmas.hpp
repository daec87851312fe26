#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qamen/euler.hpp"

namespace qamen {

/// Outcome of a numerical identity sweep.
struct IdentityCheck {
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Instances where the sign-as-printed variant of the chain differs.
  std::size_t printed_sign_mismatches = 0;
  std::string first_failure;
  bool ok() const noexcept { return failed == 0; }
};

/// Every simple regular orbit sums to h_Q.
IdentityCheck check_orbit_sums(const EulerData& e);
/// <T_i, T_j> is 1 for i = j, -1 for i = j + 1 (mod m), 0 otherwise, where
/// T_{k+1} = C^{-1} T_k along each orbit.
IdentityCheck check_orbit_pattern(const EulerData& e);
/// x = C^{-r} dimv P(i): <S_j, x> = -<x, C S_j> = -<P(i), C^{r+1} S_j> = -(S_{j-r-1})_i.
IdentityCheck check_perpendicular_chain(const EulerData& e, int r_max);
/// <x, S_j> = <P(i), S_{j-r}> = (S_{j-r})_i and sum_j (S_j)_i = (h_Q)_i.
IdentityCheck check_hom_dims(const EulerData& e, int r_max);

}  // namespace qamen
