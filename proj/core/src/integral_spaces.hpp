#pragma once

#include "hopf_forge/hopf.hpp"

namespace hopf_forge::detail {

/// {L : e_i L = eps(e_i) L for all i}
Subspace left_integral_space(const HopfPresentation& h);
/// {l : sum l(a_1) a_2 = l(a) 1 for all basis a}, as covectors.
Subspace right_integral_space_dual(const HopfPresentation& h);

/// Scales v so its first nonzero coordinate is 1.
Vec canonical_scaling(Vec v);

}  // namespace hopf_forge::detail
