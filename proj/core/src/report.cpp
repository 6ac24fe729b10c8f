#include "hopf_forge/report.hpp"

#include <algorithm>
#include <sstream>

#include "hopf_forge/errors.hpp"
#include "json_scalar.hpp"

namespace hopf_forge {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

class CheckSink {
 public:
  CheckSink(Checklist& list, const std::vector<std::string>& selection)
      : list_(list), selection_(selection) {}

  void pass_if(const std::string& name, bool ok, const std::string& failure_detail = "") {
    if (!selected(name)) return;
    list_.results.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail,
                             ok ? std::string() : failure_detail});
  }
  void witness(const std::string& name, const CheckWitness& w) { pass_if(name, w.ok, w.witness); }
  void skip(const std::string& name, const std::string& reason) {
    if (!selected(name)) return;
    list_.results.push_back({name, CheckStatus::Skipped, reason});
  }
  void skip_all(const std::vector<std::string>& names, const std::string& reason) {
    for (const auto& n : names) skip(n, reason);
  }

 private:
  bool selected(const std::string& name) const {
    if (selection_.empty()) return true;
    for (const auto& s : selection_) {
      if (name == s || name.rfind(s + ":", 0) == 0) return true;
    }
    return false;
  }

  Checklist& list_;
  const std::vector<std::string>& selection_;
};

const std::vector<std::string> kEigenChecks{
    "eigen:partition",          "eigen:dim-symmetry",         "normal-form:pattern",
    "normal-form:reconstruction", "normal-form:projection-traces", "bilinear-form:nondegenerate",
    "bilinear-form:delta-op",   "bilinear-form:alternating-even"};
const std::vector<std::string> kTraceChecks{"trace-s2p:integrals-agree", "trace-s2p:divisible",
                                            "trace-s2p:d-odd", "trace-s2p:congruence-mod4",
                                            "trace-s2p:h-minus-formula"};
const std::vector<std::string> kDimChecks{"dims:difference-equals-d", "dims:j-independence"};

std::string status_label(const CheckResult& c) {
  switch (c.status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped:" + c.detail;
  }
  return "?";
}

void eigen_checks(const HopfPresentation& h, const IntegralPair& pair, InvariantReport& r,
                  CheckSink& sink, std::optional<EigenTable>& table) {
  try {
    table = eigen_decomposition(h, pair, r.index, r.omega_power);
  } catch (const Error& e) {
    if (e.code() != Errc::IndexOne && e.code() != Errc::IndexEven) throw;
    sink.skip_all(kEigenChecks, std::string(to_string(e.code())));
    return;
  }
  const EigenTable& t = *table;
  r.x_exp = t.x_exp;
  r.eigen_dims = t.dims;
  std::size_t total = 0;
  for (const auto& [key, dim] : t.dims) total += dim;
  sink.pass_if("eigen:partition", total == h.dim(),
               "dims sum to " + std::to_string(total) + ", not " + std::to_string(h.dim()));
  sink.witness("eigen:dim-symmetry", check_dim_symmetry(t));

  std::optional<NormalForm> nf;
  try {
    nf = normal_form(h, pair, t);
    sink.pass_if("normal-form:pattern", true);
  } catch (const Error& e) {
    if (e.code() != Errc::OffPatternBlock) throw;
    sink.pass_if("normal-form:pattern", false, e.what());
    sink.skip_all({"normal-form:reconstruction", "normal-form:projection-traces",
                   "bilinear-form:nondegenerate", "bilinear-form:delta-op",
                   "bilinear-form:alternating-even"},
                  "OffPatternBlock");
    return;
  }
  sink.witness("normal-form:reconstruction", check_reconstruction(h, pair, t, *nf));
  CheckWitness traces;
  for (const auto& [key, pt] : projection_traces(h, pair, t)) {
    const CycNumber expected(h.order(), static_cast<long>(t.dim_of(key)));
    if (pt.direct != expected || pt.via_integrals != expected) {
      traces = {false, "Tr(E" + key.to_string() + ") = " + pt.direct.to_string() + " / " +
                           pt.via_integrals.to_string() + ", dim " +
                           std::to_string(t.dim_of(key))};
      break;
    }
  }
  sink.witness("normal-form:projection-traces", traces);

  const AlternatingFormReport alt = alternating_form_check(h, pair, t, *nf);
  sink.pass_if("bilinear-form:nondegenerate", alt.global.nondegenerate(),
               "Gram rank " + std::to_string(alt.global.rank) + " < " +
                   std::to_string(alt.global.dim));
  sink.witness("bilinear-form:delta-op", alt.delta_op);
  const auto& v = alt.restricted;
  sink.pass_if("bilinear-form:alternating-even",
               v.alternating() && v.nondegenerate() && v.even_dim(),
               "form on H" + alt.v_key.to_string() + ": dim " + std::to_string(v.dim) + ", rank " +
                   std::to_string(v.rank) + (v.alternating() ? "" : ", not alternating"));
}

}  // namespace

std::optional<std::pair<long, long>> odd_prime_pair(std::size_t dim) {
  const long n = static_cast<long>(dim);
  for (long p = 3; p * p <= n; p += 2) {
    if (n % p == 0 && is_prime(p) && is_prime(n / p)) return std::make_pair(p, n / p);
  }
  return std::nullopt;
}

InvariantReport make_report(const HopfPresentation& h, const ReportOptions& options) {
  InvariantReport r;
  r.name = h.name();
  r.dim = h.dim();
  r.order = h.order();
  r.omega_power = options.omega_power;
  CheckSink sink(r.checks, options.checks);

  const IntegralPair pair = make_integral_pair(h);
  r.semisimple = is_semisimple(h, pair);
  r.cosemisimple = is_cosemisimple(h, pair);
  r.unimodular = is_unimodular(h, pair);
  const Mat s2 = antipode_power(h, 2);
  r.trace_s2 = mat_trace(s2);

  r.index = compute_index(h, pair);
  const long n = r.index.n;
  {
    const Mat id = Mat::identity(h.dim(), h.order());
    const Mat rg = h.right_mult_matrix(pair.distinguished_g.coords);
    sink.pass_if("index", mat_pow(antipode_power(h, 4), n) == id && mat_pow(rg, n) == id,
                 "S^{4n} or g^n differs from the identity");
  }
  sink.pass_if("s4-formula", verify_s4_formula(h, pair));
  {
    bool ok = true;
    for (int v = 1; v <= 3; ++v) {
      ok = ok && radford_trace(h, pair, s2, static_cast<TraceVariant>(v)) == r.trace_s2;
    }
    sink.pass_if("trace-formula", ok, "a trace-formula variant differs from Tr(S^2)");
  }
  sink.pass_if("semisimplicity:consistency",
               r.semisimple == r.cosemisimple && r.semisimple == !r.trace_s2.is_zero(),
               "eps(L), l(1) and Tr(S^2) disagree on vanishing");

  const PlusMinus pm = h_plus_minus(h, n);
  r.dim_h_plus = pm.plus;
  r.dim_h_minus = pm.minus;
  r.trace_s2n = mat_trace(antipode_power(h, 2 * n));
  sink.pass_if("h-plus-minus:trace",
               r.trace_s2n == CycNumber(h.order(), static_cast<long>(pm.plus) -
                                                       static_cast<long>(pm.minus)),
               "Tr(S^{2n}) != dim H+ - dim H-");
  if (n == 1) {
    sink.skip("h-minus:even", "IndexOne");
  } else if (n % 2 == 0) {
    sink.skip("h-minus:even", "IndexEven");
  } else {
    sink.pass_if("h-minus:even", pm.minus % 2 == 0, "dim H- = " + std::to_string(pm.minus));
  }

  std::optional<EigenTable> table;
  eigen_checks(h, pair, r, sink, table);

  // Hypotheses shared by the pq statements.
  std::string pq_skip;
  const auto pq = odd_prime_pair(h.dim());
  if (!pq) {
    pq_skip = "NotPQ";
  } else if (r.semisimple) {
    pq_skip = "Semisimple";
  }
  if (pq && !r.semisimple) {
    r.p = pq->first;
    r.q = pq->second;
    sink.pass_if("index:equals-p", n == pq->first && r.index.s4_order == pq->first,
                 "index " + std::to_string(n) + ", order(S^4) " +
                     std::to_string(r.index.s4_order) + ", p " + std::to_string(pq->first));
    if (n != pq->first) pq_skip = "PreconditionFailed:index";
  } else {
    sink.skip("index:equals-p", pq_skip);
  }

  if (pq_skip.empty()) {
    const TraceS2pReport tr = trace_s2p_report(h, pair, pq->first, pq->second);
    r.trace_s2p = tr.trace;
    r.d = tr.d;
    r.congruence_mod4_ok = tr.congruence_mod4;
    sink.pass_if("trace-s2p:integrals-agree", tr.trace == tr.trace_via_integrals,
                 "direct " + tr.trace.to_string() + " vs " + tr.trace_via_integrals.to_string());
    sink.pass_if("trace-s2p:divisible", tr.divisible,
                 "Tr(S^2p) = " + tr.trace.to_string() + " is not an integer multiple of p^2");
    if (tr.d) {
      sink.pass_if("trace-s2p:d-odd", tr.d_odd, "d = " + tr.d->get_str());
      sink.pass_if("trace-s2p:congruence-mod4", tr.congruence_mod4,
                   "d = " + tr.d->get_str() + ", pq = " + std::to_string(tr.p * tr.q));
      sink.pass_if("trace-s2p:h-minus-formula", tr.h_minus_matches,
                   "dim H- = " + std::to_string(pm.minus) + ", p(q - pd)/2 = " +
                       std::to_string(tr.expected_h_minus));
    } else {
      sink.skip_all({"trace-s2p:d-odd", "trace-s2p:congruence-mod4", "trace-s2p:h-minus-formula"},
                    "NoD");
    }
  } else {
    sink.skip_all(kTraceChecks, pq_skip);
  }

  if (!pq_skip.empty()) {
    sink.skip_all(kDimChecks, pq_skip);
  } else if (!r.d) {
    sink.skip_all(kDimChecks, "NoD");
  } else if (!table) {
    sink.skip_all(kDimChecks, "NoEigenTable");
  } else if (pair.distinguished_g.coords == h.unit()) {
    sink.skip_all(kDimChecks, "TrivialG");
  } else {
    const DimensionIdentities ids = check_dimension_identities(h, pair, *table, *r.d);
    sink.witness("dims:difference-equals-d", ids.difference);
    if (ids.j_independence) {
      sink.witness("dims:j-independence", *ids.j_independence);
    } else {
      sink.skip("dims:j-independence", "TrivialAlpha");
    }
  }

  const Subspace c = coradical(h);
  r.coradical_exponent = pq_skip.empty() ? pq->first : n;
  r.coradical_dim = c.dim();
  sink.pass_if("coradical:subcoalgebra", is_subcoalgebra(h, c), "Delta(C) is not in C (x) C");
  const CoradicalTraces ct = coradical_traces(h, c, r.coradical_exponent);
  r.trace_s2p_on_c = ct.on_c;
  r.trace_s2p_on_quotient = ct.on_quotient;
  r.grouplike_count = ct.grouplikes;
  r.pointed = ct.pointed;
  sink.pass_if("coradical:trace-split", ct.sum_matches, "Tr|_C + Tr|_{H/C} != Tr");
  if (pq_skip.empty()) {
    sink.pass_if("coradical:trace-lower-bound", ct.at_least_p,
                 "Tr(S^2p|_C) = " + ct.on_c.to_string() + " < " + std::to_string(pq->first));
    sink.pass_if("coradical:pointed", ct.pointed,
                 "dim C = " + std::to_string(c.dim()) + ", |G(H)| = " +
                     std::to_string(ct.grouplikes));
  } else {
    sink.skip_all({"coradical:trace-lower-bound", "coradical:pointed"}, pq_skip);
  }
  return r;
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "true" : "false"; };
  const long n = r.index.n;
  out << "report: " << r.name << "\n";
  out << "  dim " << r.dim << ", cyclotomic order " << r.order << ", omega = zeta_" << n << "^"
      << r.omega_power << "\n";
  out << "  semisimple " << yes(r.semisimple) << ", cosemisimple " << yes(r.cosemisimple)
      << ", unimodular " << yes(r.unimodular) << ", Tr(S^2) = " << r.trace_s2.to_string() << "\n";
  out << "  index " << n << " (order of S^4 " << r.index.s4_order << ", order of g "
      << r.index.g_order << ")";
  if (r.x_exp) out << ", x(omega) = " << *r.x_exp;
  out << "\n";
  out << "  dim H+ " << r.dim_h_plus << ", dim H- " << r.dim_h_minus << ", Tr(S^" << 2 * n
      << ") = " << r.trace_s2n.to_string() << "\n";
  if (r.p) {
    out << "  p = " << *r.p << ", q = " << *r.q;
    if (r.trace_s2p) out << ", Tr(S^" << 2 * *r.p << ") = " << r.trace_s2p->to_string();
    if (r.d) out << ", d = " << r.d->get_str() << ", d = pq mod 4: " << yes(r.congruence_mod4_ok);
    out << "\n";
  }
  out << "  coradical dim " << r.coradical_dim << ", Tr(S^" << 2 * r.coradical_exponent
      << "|C) = " << r.trace_s2p_on_c.to_string() << ", Tr(S^" << 2 * r.coradical_exponent
      << "|H/C) = " << r.trace_s2p_on_quotient.to_string() << ", |G(H)| = " << r.grouplike_count
      << ", pointed " << yes(r.pointed) << "\n";
  if (!r.eigen_dims.empty()) {
    out << "  nonzero eigenspaces (a,i,j):";
    for (const auto& [key, dim] : r.eigen_dims) {
      if (dim > 0) out << " " << key.to_string() << "=" << dim;
    }
    out << "\n";
  }
  out << "checks:\n";
  std::size_t width = 0;
  for (const auto& c : r.checks.results) width = std::max(width, c.name.size());
  for (const auto& c : r.checks.results) {
    out << "  " << c.name << std::string(width + 2 - c.name.size(), ' ') << status_label(c);
    if (c.status == CheckStatus::Fail && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string report_json(const InvariantReport& r) {
  using nlohmann::ordered_json;
  using detail::scalar_to_json;
  ordered_json doc;
  doc["name"] = r.name;
  doc["dim"] = r.dim;
  doc["cyclotomic_order"] = r.order;
  doc["omega_power"] = r.omega_power;
  doc["semisimple"] = r.semisimple;
  doc["cosemisimple"] = r.cosemisimple;
  doc["unimodular"] = r.unimodular;
  doc["trace_s2"] = scalar_to_json(r.trace_s2);
  doc["index"] = {{"n", r.index.n}, {"s4_order", r.index.s4_order}, {"g_order", r.index.g_order}};
  doc["x_exponent"] = r.x_exp ? ordered_json(*r.x_exp) : ordered_json();
  ordered_json dims = ordered_json::array();
  for (const auto& [key, dim] : r.eigen_dims) dims.push_back({key.a, key.i, key.j, dim});
  doc["eigen_dims"] = std::move(dims);
  doc["dim_h_plus"] = r.dim_h_plus;
  doc["dim_h_minus"] = r.dim_h_minus;
  doc["trace_s2n"] = scalar_to_json(r.trace_s2n);
  doc["p"] = r.p ? ordered_json(*r.p) : ordered_json();
  doc["q"] = r.q ? ordered_json(*r.q) : ordered_json();
  doc["trace_s2p"] = r.trace_s2p ? scalar_to_json(*r.trace_s2p) : ordered_json();
  doc["d"] = r.d ? scalar_to_json(CycNumber(r.order, Rational(*r.d))) : ordered_json();
  doc["congruence_mod4_ok"] = r.congruence_mod4_ok;
  doc["coradical"] = {{"exponent", r.coradical_exponent},
                      {"dim", r.coradical_dim},
                      {"trace_on_c", scalar_to_json(r.trace_s2p_on_c)},
                      {"trace_on_quotient", scalar_to_json(r.trace_s2p_on_quotient)},
                      {"grouplikes", r.grouplike_count},
                      {"pointed", r.pointed}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks.results) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = status_label(c);
    if (c.status == CheckStatus::Fail) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace hopf_forge
