#pragma once

#include <vector>

#include "hopf_forge/cyclofield.hpp"

namespace hopf_forge::detail {

/// Inverse of the integer polynomial a modulo the monic irreducible integer
/// polynomial m, as rational coefficients of length deg(m). Works prime by
/// prime, recombines by CRT and rational reconstruction, and accepts a
/// candidate only after an exact product check. a must be nonzero mod m.
std::vector<Rational> inverse_mod_irreducible(const std::vector<Integer>& a,
                                              const std::vector<Integer>& m);

}  // namespace hopf_forge::detail
