#pragma once

#include "hopf_forge/hopf.hpp"

namespace hopf_forge::detail {

/// T(b, c) = Tr(L_{bc}) on H*, in the dual basis.
Mat dual_trace_form(const HopfPresentation& h);
/// Radical of the trace form, i.e. Jac(H*) in characteristic 0 (rows are covectors).
Subspace dual_jacobson_radical(const HopfPresentation& h);
/// Annihilator in H of Jac(H*).
Subspace coradical_subspace(const HopfPresentation& h);

}  // namespace hopf_forge::detail
