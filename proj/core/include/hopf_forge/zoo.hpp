#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf_forge/hopf.hpp"

namespace hopf_forge {

/// Group algebra k[G] from a Cayley table (table[a][b] = index of a*b).
/// The cyclotomic order defaults to the exponent of G. Throws NotAGroup.
HopfPresentation build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                                     std::optional<int> order = std::nullopt,
                                     std::string name = "",
                                     std::vector<std::string> labels = {});

/// k[Z_n1 x Z_n2 x ...]; element (t1, t2, ...) has mixed-radix index with
/// the first factor most significant.
HopfPresentation build_abelian_group_algebra(const std::vector<int>& cyclic_orders,
                                             std::optional<int> order = std::nullopt);
HopfPresentation build_cyclic_group_algebra(int n, std::optional<int> order = std::nullopt);

/// Taft algebra T_n with w = zeta_n^root_power:
///   g^n = 1, x^n = 0, x g = w g x,
///   Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g,
///   S(g) = g^{-1}, S(x) = -x g^{-1}.
/// Basis g^i x^j at index i * n + j. The order defaults to n and must be a
/// multiple of n. Throws BadParameters.
HopfPresentation build_taft(int n, int root_power = 1, std::optional<int> order = std::nullopt);

/// Sweedler's four-dimensional algebra, i.e. T_2.
HopfPresentation build_sweedler();

/// h1 (x) h2 with componentwise structure; basis a (x) b at index
/// a * dim(h2) + b. Both inputs must share the cyclotomic order
/// (OrderMismatch otherwise; lift explicitly with lift_order).
HopfPresentation build_tensor(const HopfPresentation& h1, const HopfPresentation& h2);

/// Same as dual(h); named for the zoo family list.
HopfPresentation build_dual_spec(const HopfPresentation& h);

/// The monoid bialgebra k[{1, z}] with z^2 = z. A bialgebra with no
/// antipode, used to exercise the NoAntipode path.
HopfPresentation build_idempotent_monoid_bialgebra();

}  // namespace hopf_forge
