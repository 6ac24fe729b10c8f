#pragma once

#include "hopf_forge/hopf.hpp"

namespace hopf_forge {

/// A left integral of H, a right integral of H*, and the distinguished
/// grouplikes they determine.
///   a L = eps(a) L,  L a = alpha(a) L,  b l = b(g) l,  l b = b(1) l.
struct IntegralPair {
  HopfElement left_integral;
  Functional right_integral;
  bool normalized = false;
  HopfElement distinguished_g;
  Functional distinguished_alpha;
};

/// Nonzero left integral, first nonzero coordinate scaled to 1. Throws
/// IntegralSpaceNotOneDim when the solution space is not a line.
HopfElement left_integral(const HopfPresentation& h);
/// Nonzero right integral of H*, first nonzero coordinate scaled to 1.
Functional right_integral_dual(const HopfPresentation& h);

/// Rescales the right integral so that it takes the value 1 on the left
/// integral. Throws DegeneratePairing when the pairing vanishes.
IntegralPair normalize(IntegralPair pair);

/// g with b l = b(g) l for all b in H*. Throws NotProportional.
HopfElement distinguished_g(const HopfPresentation& h, const IntegralPair& pair);
/// alpha with L a = alpha(a) L. Throws NotProportional.
Functional distinguished_alpha(const HopfPresentation& h, const IntegralPair& pair);

/// Integrals in canonical scaling, normalized, with g and alpha filled in.
IntegralPair make_integral_pair(const HopfPresentation& h);

bool is_unimodular(const HopfPresentation& h, const IntegralPair& pair);
/// eps(L) != 0
bool is_semisimple(const HopfPresentation& h, const IntegralPair& pair);
/// l(1) != 0
bool is_cosemisimple(const HopfPresentation& h, const IntegralPair& pair);

enum class TraceVariant {
  AntipodeOnSecondLeg = 1,   // sum l(S(L_2) f(L_1))
  AntipodeAfterF = 2,        // sum l((S o f)(L_2) L_1)
  AntipodeBeforeF = 3,       // sum l((f o S)(L_2) L_1)
};

/// Trace of f obtained from the normalized integrals by contracting
/// Delta(L) with f, S, the multiplication and l. Throws NotNormalized.
CycNumber radford_trace(const HopfPresentation& h, const IntegralPair& pair, const Mat& f,
                        TraceVariant variant);

/// Checks S^4(a) = g (alpha -> a <- alpha^{-1}) g^{-1} on every basis
/// element, with alpha^{-1} = alpha o S.
bool verify_s4_formula(const HopfPresentation& h, const IntegralPair& pair);

}  // namespace hopf_forge
