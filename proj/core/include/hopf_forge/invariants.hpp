#pragma once

// Invariants built on the pair (S^2, r(g)): the index, the eigenspace
// decomposition H = sum H_{a,i,j}, the normal form of Delta(L), the
// bilinear form (f, h) = (f (x) h) Delta(L), H_+/H_-, Tr(S^{2p}) and the
// coradical traces.
//
// Keys (a, i, j) range over Z_2 x Z_n x Z_n with
//   H_{a,i,j} = { u : S^2(u) = (-1)^a w^i u,  u g = w^j u },
// and x = (0, -x(w,H), x(w,H)) where alpha(g) = w^{x(w,H)}.

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "hopf_forge/integrals.hpp"

namespace hopf_forge {

struct IndexData {
  long n = 1;
  long s4_order = 1;
  long g_order = 1;
};

/// n = lcm(order(S^4), order(r(g))). Operator orders are searched up to
/// 4 * dim * N; OrderExceedsBound beyond that.
IndexData compute_index(const HopfPresentation& h, const IntegralPair& pair);

struct EigenKey {
  int a = 0;
  long i = 0;
  long j = 0;

  auto operator<=>(const EigenKey&) const = default;
  std::string to_string() const;
};

struct EigenTable {
  long n = 1;
  long omega_power = 1;  // w = zeta_n^omega_power
  CycNumber omega;
  long x_exp = 0;
  std::map<EigenKey, Subspace> spaces;
  std::map<EigenKey, std::size_t> dims;
  /// Columns are the bases of the spaces, concatenated in key order.
  Mat basis_change;
  Mat basis_change_inverse;
  /// First column of each nonzero space in basis_change.
  std::map<EigenKey, std::size_t> offsets;

  EigenKey x_vec() const { return {0, (n - x_exp) % n, x_exp}; }
  /// -k + x
  EigenKey partner(const EigenKey& k) const;
  std::size_t dim_of(const EigenKey& k) const;
};

/// w = zeta_n^power inside Q(zeta_N). Throws BadParameters when
/// gcd(power, n) != 1 and NonSplitting when w is not in the field.
CycNumber omega_from_power(int order, long n, long power);

/// The unique t in Z_n with alpha(g) = w^t. Throws NotARootPower.
long x_exponent(const HopfPresentation& h, const IntegralPair& pair, const CycNumber& omega,
                long n);

/// Joint eigenspaces of S^2 and r(g). Throws IndexOne (n = 1), IndexEven
/// (the pairs (a, i) stop labelling distinct S^2 eigenvalues), NonCommuting
/// and NonSplitting.
EigenTable eigen_decomposition(const HopfPresentation& h, const IntegralPair& pair,
                               const IndexData& index, long omega_power);

struct CheckWitness {
  bool ok = true;
  std::string witness;  // first violation, empty when ok
};

/// dims[k] = dims[x - k] for every key.
CheckWitness check_dim_symmetry(const EigenTable& t);

/// E_k: projection onto H_k along the other spaces.
Mat projection(const EigenTable& t, const EigenKey& k);

struct NormalForm {
  EigenKey x_vec;
  /// k -> component of Delta(L) in H_k (x) H_{-k+x}; only nonzero blocks.
  std::map<EigenKey, Mat> components;
  /// Delta(L) in eigen coordinates: B^{-1} Delta(L) B^{-T}.
  Mat eigen_coordinates;
};

/// Splits Delta(L) into blocks H_k (x) H_m. Throws OffPatternBlock when a
/// block with m != -k + x is nonzero.
NormalForm normal_form(const HopfPresentation& h, const IntegralPair& pair, const EigenTable& t);

/// Sum of the components equals Delta(L), and each component is fixed by
/// E_k (x) E_{-k+x}.
CheckWitness check_reconstruction(const HopfPresentation& h, const IntegralPair& pair,
                                  const EigenTable& t, const NormalForm& nf);

struct ProjectionTrace {
  CycNumber direct;
  CycNumber via_integrals;
};

/// Tr(E_k) by mat_trace and by radford_trace, for every key.
std::map<EigenKey, ProjectionTrace> projection_traces(const HopfPresentation& h,
                                                      const IntegralPair& pair,
                                                      const EigenTable& t);

struct GramAnalysis {
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool antisymmetric = true;
  bool zero_diagonal = true;

  bool nondegenerate() const { return rank == dim; }
  bool alternating() const { return antisymmetric && zero_diagonal; }
  bool even_dim() const { return dim % 2 == 0; }
};

GramAnalysis analyze_gram(const Mat& gram);

struct AlternatingFormReport {
  long ell = 0;
  EigenKey v_key;           // (1, -ell, ell)
  GramAnalysis global;      // the form on all of H*
  GramAnalysis restricted;  // the form on V
  CheckWitness delta_op;    // Delta^op(L) = sum (-1)^a w^{-i-j} (blocks)
};

/// Requires odd n > 1 (IndexEven / IndexOne otherwise).
AlternatingFormReport alternating_form_check(const HopfPresentation& h, const IntegralPair& pair,
                                             const EigenTable& t, const NormalForm& nf);

struct PlusMinus {
  std::size_t plus = 0;
  std::size_t minus = 0;
};

/// Dimensions of the +1 and -1 eigenspaces of S^{2n}. Throws
/// SpectrumNotPlusMinusOne when they do not fill H.
PlusMinus h_plus_minus(const HopfPresentation& h, long n);

struct TraceS2pReport {
  long p = 0;
  long q = 0;
  CycNumber trace;
  CycNumber trace_via_integrals;
  bool divisible = false;  // rational integer divisible by p^2
  std::optional<Integer> d;
  bool d_odd = false;
  bool congruence_mod4 = false;  // d = pq (mod 4)
  long expected_h_minus = 0;     // p (q - p d) / 2
  bool h_minus_matches = false;
};

/// Tr(S^{2p}) for dim H = pq, H not semisimple, index p. Throws
/// PreconditionFailed naming the failed hypothesis.
TraceS2pReport trace_s2p_report(const HopfPresentation& h, const IntegralPair& pair, long p,
                                long q);

struct DimensionIdentities {
  CheckWitness difference;      // dims(0,i,j) - dims(1,i,j) = d
  std::optional<CheckWitness> j_independence;  // only when alpha != eps
};

/// Throws PreconditionFailed when the distinguished g is 1.
DimensionIdentities check_dimension_identities(const HopfPresentation& h,
                                               const IntegralPair& pair, const EigenTable& t,
                                               const Integer& d);

/// Annihilator of Jac(H*), the coradical.
Subspace coradical(const HopfPresentation& h);

/// Delta(C) lies in C (x) C.
bool is_subcoalgebra(const HopfPresentation& h, const Subspace& c);

struct CoradicalTraces {
  CycNumber on_c;
  CycNumber on_quotient;
  bool sum_matches = false;
  std::size_t grouplikes = 0;
  bool pointed = false;
  bool at_least_p = false;  // Tr(S^{2p}|_C) is rational and >= p
};

/// Traces of S^{2p} on C and on H/C via a basis of C extended to H.
/// Throws NotInvariant when S^{2p}(C) is not inside C.
CoradicalTraces coradical_traces(const HopfPresentation& h, const Subspace& c, long p);

}  // namespace hopf_forge
