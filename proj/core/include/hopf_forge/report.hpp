#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf_forge/invariants.hpp"

namespace hopf_forge {

struct ReportOptions {
  long omega_power = 1;
  /// Check names or prefixes ("trace-s2p" selects every trace-s2p:* check).
  /// Empty selects everything.
  std::vector<std::string> checks;
};

/// Everything the lab computes for one algebra. Optional fields are empty
/// when the corresponding hypothesis does not hold (see the matching
/// skipped check for the reason).
struct InvariantReport {
  std::string name;
  std::size_t dim = 0;
  int order = 1;
  long omega_power = 1;

  bool semisimple = false;
  bool cosemisimple = false;
  bool unimodular = false;
  CycNumber trace_s2;

  IndexData index;
  std::optional<long> x_exp;
  std::map<EigenKey, std::size_t> eigen_dims;

  std::size_t dim_h_plus = 0;
  std::size_t dim_h_minus = 0;
  CycNumber trace_s2n;  // Tr(S^{2n}), n the index

  std::optional<long> p;
  std::optional<long> q;
  std::optional<CycNumber> trace_s2p;
  std::optional<Integer> d;
  bool congruence_mod4_ok = false;

  long coradical_exponent = 1;  // the p of Tr(S^{2p}|_C)
  std::size_t coradical_dim = 0;
  CycNumber trace_s2p_on_c;
  CycNumber trace_s2p_on_quotient;
  std::size_t grouplike_count = 0;
  bool pointed = false;

  Checklist checks;
};

/// (p, q) with p <= q odd primes and p q = dim, if any.
std::optional<std::pair<long, long>> odd_prime_pair(std::size_t dim);

/// Runs the whole lab. h must carry an antipode. Throws
/// EigenvalueNotInField / NonSplitting when the field is too small, and
/// BadParameters for an omega power not coprime to the index.
InvariantReport make_report(const HopfPresentation& h, const ReportOptions& options = {});

std::string report_text(const InvariantReport& r);
/// Stable key order; identical reports give identical bytes.
std::string report_json(const InvariantReport& r);

}  // namespace hopf_forge
