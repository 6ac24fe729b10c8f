#include "hopf_forge/invariants.hpp"

#include <numeric>

#include "coradical.hpp"
#include "hopf_forge/errors.hpp"

namespace hopf_forge {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

Mat submatrix(const Mat& m, std::size_t r0, std::size_t rows, std::size_t c0, std::size_t cols) {
  Mat out(rows, cols, m.order());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
  }
  return out;
}

std::string key_list(const EigenKey& a, const EigenKey& b) {
  return a.to_string() + " x " + b.to_string();
}

}  // namespace

std::string EigenKey::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
}

EigenKey EigenTable::partner(const EigenKey& k) const {
  return {k.a, mod(-k.i - x_exp, n), mod(x_exp - k.j, n)};
}

std::size_t EigenTable::dim_of(const EigenKey& k) const {
  auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

IndexData compute_index(const HopfPresentation& h, const IntegralPair& pair) {
  const long bound = 4L * static_cast<long>(h.dim()) * h.order();
  IndexData out;
  out.s4_order = operator_order(antipode_power(h, 4), bound);
  out.g_order = operator_order(h.right_mult_matrix(pair.distinguished_g.coords), bound);
  out.n = std::lcm(out.s4_order, out.g_order);
  return out;
}

CycNumber omega_from_power(int order, long n, long power) {
  if (n < 1 || std::gcd(mod(power, n), n) != 1) {
    throw Error(Errc::BadParameters, "omega power " + std::to_string(power) +
                                         " is not coprime to " + std::to_string(n));
  }
  auto w = root_of_unity_in(order, static_cast<int>(n), mod(power, n));
  if (!w) {
    throw Error(Errc::NonSplitting, "a primitive " + std::to_string(n) +
                                        "-th root of unity is not in Q(zeta_" +
                                        std::to_string(order) + "); raise cyclotomic_order to " +
                                        std::to_string(std::lcm(static_cast<long>(order), 2 * n)));
  }
  return *w;
}

long x_exponent(const HopfPresentation& h, const IntegralPair& pair, const CycNumber& omega,
                long n) {
  const CycNumber alpha_g = pair.distinguished_alpha(pair.distinguished_g);
  CycNumber power = CycNumber::one(h.order());
  for (long t = 0; t < n; ++t) {
    if (power == alpha_g) return t;
    power *= omega;
  }
  throw Error(Errc::NotARootPower, "alpha(g) = " + alpha_g.to_string() + " is no power of omega");
}

EigenTable eigen_decomposition(const HopfPresentation& h, const IntegralPair& pair,
                               const IndexData& index, long omega_power) {
  const long n = index.n;
  if (n == 1) throw Error(Errc::IndexOne, h.name() + " has index 1");
  if (n % 2 == 0) {
    throw Error(Errc::IndexEven, h.name() + " has even index " + std::to_string(n) +
                                     "; (a, i) no longer separates S^2 eigenvalues");
  }
  const int order = h.order();
  EigenTable t;
  t.n = n;
  t.omega_power = mod(omega_power, n);
  t.omega = omega_from_power(order, n, omega_power);
  t.x_exp = x_exponent(h, pair, t.omega, n);

  const Mat s2 = antipode_power(h, 2);
  const Mat rg = h.right_mult_matrix(pair.distinguished_g.coords);
  if (s2 * rg != rg * s2) throw Error(Errc::NonCommuting, "S^2 and r(g) do not commute");

  std::vector<CycNumber> powers{CycNumber::one(order)};
  for (long i = 1; i < n; ++i) powers.push_back(powers.back() * t.omega);

  std::vector<Subspace> g_spaces;
  for (long j = 0; j < n; ++j) g_spaces.push_back(eigenspace(rg, powers[j]));

  std::vector<Vec> columns;
  for (int a = 0; a < 2; ++a) {
    for (long i = 0; i < n; ++i) {
      const CycNumber value = a == 0 ? powers[i] : -powers[i];
      const Subspace s_space = eigenspace(s2, value);
      for (long j = 0; j < n; ++j) {
        const EigenKey key{a, i, j};
        Subspace joint = (s_space.dim() == 0 || g_spaces[j].dim() == 0)
                             ? Subspace(h.dim(), order)
                             : intersect(s_space, g_spaces[j]);
        t.dims[key] = joint.dim();
        if (joint.dim() > 0) {
          t.offsets[key] = columns.size();
          for (auto& v : joint.vectors()) columns.push_back(std::move(v));
        }
        t.spaces.emplace(key, std::move(joint));
      }
    }
  }
  if (columns.size() != h.dim()) {
    throw Error(Errc::NonSplitting,
                "eigenspaces span " + std::to_string(columns.size()) + " of " +
                    std::to_string(h.dim()) + " dimensions; raise cyclotomic_order to " +
                    std::to_string(std::lcm(static_cast<long>(order), 2 * n)));
  }
  t.basis_change = Mat::from_columns(columns, h.dim(), order);
  t.basis_change_inverse = inverse(t.basis_change);
  return t;
}

CheckWitness check_dim_symmetry(const EigenTable& t) {
  for (const auto& [key, dim] : t.dims) {
    const EigenKey x = t.x_vec();
    const EigenKey other{mod(x.a - key.a, 2) == 0 ? 0 : 1, mod(x.i - key.i, t.n),
                         mod(x.j - key.j, t.n)};
    if (dim != t.dim_of(other)) {
      return {false, "dim H" + key.to_string() + " = " + std::to_string(dim) + " but dim H" +
                         other.to_string() + " = " + std::to_string(t.dim_of(other))};
    }
  }
  return {};
}

Mat projection(const EigenTable& t, const EigenKey& k) {
  const std::size_t n = t.basis_change.rows();
  Mat selector(n, n, t.basis_change.order());
  auto it = t.offsets.find(k);
  if (it != t.offsets.end()) {
    for (std::size_t r = 0; r < t.dim_of(k); ++r) {
      selector(it->second + r, it->second + r) = CycNumber::one(selector.order());
    }
  }
  return t.basis_change * selector * t.basis_change_inverse;
}

NormalForm normal_form(const HopfPresentation& h, const IntegralPair& pair, const EigenTable& t) {
  const Mat d = h.comultiply(pair.left_integral.coords);
  NormalForm nf;
  nf.x_vec = t.x_vec();
  nf.eigen_coordinates = t.basis_change_inverse * d * t.basis_change_inverse.transpose();
  const Mat& dp = nf.eigen_coordinates;
  for (const auto& [ka, oa] : t.offsets) {
    const std::size_t da = t.dim_of(ka);
    for (const auto& [kb, ob] : t.offsets) {
      const Mat block = submatrix(dp, oa, da, ob, t.dim_of(kb));
      if (block.is_zero()) continue;
      if (kb != t.partner(ka)) {
        throw Error(Errc::OffPatternBlock, "nonzero block " + key_list(ka, kb));
      }
      // Back to the standard basis: B_a block B_b^T.
      const Mat left = submatrix(t.basis_change, 0, h.dim(), oa, da);
      const Mat right = submatrix(t.basis_change, 0, h.dim(), ob, t.dim_of(kb));
      nf.components.emplace(ka, left * block * right.transpose());
    }
  }
  return nf;
}

CheckWitness check_reconstruction(const HopfPresentation& h, const IntegralPair& pair,
                                  const EigenTable& t, const NormalForm& nf) {
  const std::size_t n = h.dim();
  Mat sum(n, n, h.order());
  for (const auto& [key, component] : nf.components) {
    const Mat ea = projection(t, key);
    const Mat eb = projection(t, t.partner(key));
    if (ea * component * eb.transpose() != component) {
      return {false, "component " + key.to_string() + " is not fixed by E_a (x) E_b"};
    }
    sum += component;
  }
  if (sum != h.comultiply(pair.left_integral.coords)) {
    return {false, "components do not sum to Delta(L)"};
  }
  return {};
}

std::map<EigenKey, ProjectionTrace> projection_traces(const HopfPresentation& h,
                                                      const IntegralPair& pair,
                                                      const EigenTable& t) {
  std::map<EigenKey, ProjectionTrace> out;
  for (const auto& [key, dim] : t.dims) {
    const Mat e = projection(t, key);
    out.emplace(key, ProjectionTrace{mat_trace(e),
                                     radford_trace(h, pair, e, TraceVariant::AntipodeOnSecondLeg)});
  }
  return out;
}

GramAnalysis analyze_gram(const Mat& gram) {
  if (!gram.is_square()) throw Error(Errc::NotSquare, "Gram matrix must be square");
  GramAnalysis out;
  out.dim = gram.rows();
  out.rank = rank(gram);
  for (std::size_t r = 0; r < out.dim; ++r) {
    if (!gram(r, r).is_zero()) out.zero_diagonal = false;
    for (std::size_t c = r + 1; c < out.dim; ++c) {
      if (gram(r, c) != -gram(c, r)) out.antisymmetric = false;
    }
  }
  return out;
}

AlternatingFormReport alternating_form_check(const HopfPresentation& h, const IntegralPair& pair,
                                             const EigenTable& t, const NormalForm& nf) {
  const long n = t.n;
  if (n == 1) throw Error(Errc::IndexOne, "alternating form needs index > 1");
  if (n % 2 == 0) throw Error(Errc::IndexEven, "alternating form needs odd index");
  AlternatingFormReport out;
  out.ell = mod(t.x_exp * ((n + 1) / 2), n);
  out.v_key = {1, mod(-out.ell, n), out.ell};

  // In the dual basis the Gram matrix of (f, h) is Delta(L) itself; in the
  // basis dual to the eigenbasis it is B^{-1} Delta(L) B^{-T}.
  out.global = analyze_gram(h.comultiply(pair.left_integral.coords));
  const std::size_t dv = t.dim_of(out.v_key);
  if (dv == 0) {
    out.restricted = analyze_gram(Mat(0, 0, h.order()));
  } else {
    const std::size_t o = t.offsets.at(out.v_key);
    out.restricted = analyze_gram(submatrix(nf.eigen_coordinates, o, dv, o, dv));
  }

  // Delta^op(L) in eigen coordinates is the transpose of the normal form;
  // the block at (k, -k + x) must be (-1)^a w^{-i-j} times the original.
  const Mat op = delta_op(h, pair.left_integral);
  const Mat op_eigen = t.basis_change_inverse * op * t.basis_change_inverse.transpose();
  const Mat& dp = nf.eigen_coordinates;
  std::vector<CycNumber> powers{CycNumber::one(h.order())};
  for (long i = 1; i < n; ++i) powers.push_back(powers.back() * t.omega);
  for (const auto& [ka, oa] : t.offsets) {
    const std::size_t da = t.dim_of(ka);
    for (const auto& [kb, ob] : t.offsets) {
      const std::size_t db = t.dim_of(kb);
      const Mat actual = submatrix(op_eigen, oa, da, ob, db);
      Mat expected(da, db, h.order());
      if (kb == t.partner(ka)) {
        CycNumber coef = powers[mod(-ka.i - ka.j, n)];
        if (ka.a == 1) coef = -coef;
        expected = coef * submatrix(dp, oa, da, ob, db);
      }
      if (actual != expected) {
        out.delta_op = {false, "Delta^op(L) block " + key_list(ka, kb) + " differs"};
        return out;
      }
    }
  }
  return out;
}

PlusMinus h_plus_minus(const HopfPresentation& h, long n) {
  const Mat s2n = antipode_power(h, 2 * n);
  PlusMinus out;
  out.plus = eigenspace(s2n, CycNumber::one(h.order())).dim();
  out.minus = eigenspace(s2n, CycNumber(h.order(), -1L)).dim();
  if (out.plus + out.minus != h.dim()) {
    throw Error(Errc::SpectrumNotPlusMinusOne,
                "S^" + std::to_string(2 * n) + " has eigenvalues other than +-1");
  }
  return out;
}

TraceS2pReport trace_s2p_report(const HopfPresentation& h, const IntegralPair& pair, long p,
                                long q) {
  if (static_cast<long>(h.dim()) != p * q) {
    throw Error(Errc::PreconditionFailed, "dim H = " + std::to_string(h.dim()) + " is not " +
                                              std::to_string(p) + "*" + std::to_string(q));
  }
  if (is_semisimple(h, pair)) throw Error(Errc::PreconditionFailed, "H is semisimple");
  const IndexData index = compute_index(h, pair);
  if (index.n != p) {
    throw Error(Errc::PreconditionFailed,
                "index " + std::to_string(index.n) + " differs from p = " + std::to_string(p));
  }
  TraceS2pReport out;
  out.p = p;
  out.q = q;
  const Mat s2p = antipode_power(h, 2 * p);
  out.trace = mat_trace(s2p);
  out.trace_via_integrals = radford_trace(h, pair, s2p, TraceVariant::AntipodeOnSecondLeg);
  const auto rational = out.trace.to_rational();
  const Integer p2 = Integer(p) * p;
  if (rational && rational->get_den() == 1 && rational->get_num() % p2 == 0) {
    out.divisible = true;
    const Integer d = rational->get_num() / p2;
    out.d = d;
    out.d_odd = mpz_odd_p(d.get_mpz_t()) != 0;
    Integer diff = d - Integer(p) * q;
    out.congruence_mod4 = mpz_divisible_ui_p(diff.get_mpz_t(), 4) != 0;
    const Integer expected = Integer(p) * (Integer(q) - Integer(p) * d) / 2;
    out.expected_h_minus = expected.get_si();
    out.h_minus_matches = expected == static_cast<long>(h_plus_minus(h, index.n).minus);
  }
  return out;
}

DimensionIdentities check_dimension_identities(const HopfPresentation& h,
                                               const IntegralPair& pair, const EigenTable& t,
                                               const Integer& d) {
  if (pair.distinguished_g.coords == h.unit()) {
    throw Error(Errc::PreconditionFailed, "distinguished grouplike is 1");
  }
  DimensionIdentities out;
  for (long i = 0; i < t.n && out.difference.ok; ++i) {
    for (long j = 0; j < t.n; ++j) {
      const Integer diff = Integer(static_cast<long>(t.dim_of({0, i, j}))) -
                           static_cast<long>(t.dim_of({1, i, j}));
      if (diff != d) {
        out.difference = {false, "dim H(0," + std::to_string(i) + "," + std::to_string(j) +
                                     ") - dim H(1," + std::to_string(i) + "," +
                                     std::to_string(j) + ") = " + diff.get_str()};
        break;
      }
    }
  }
  if (!is_unimodular(h, pair)) {
    CheckWitness w;
    for (int a = 0; a < 2 && w.ok; ++a) {
      for (long i = 0; i < t.n && w.ok; ++i) {
        for (long j = 1; j < t.n; ++j) {
          if (t.dim_of({a, i, j}) != t.dim_of({a, i, 0})) {
            w = {false, "dim H" + EigenKey{a, i, j}.to_string() + " != dim H" +
                            EigenKey{a, i, 0}.to_string()};
            break;
          }
        }
      }
    }
    out.j_independence = w;
  }
  return out;
}

Subspace coradical(const HopfPresentation& h) { return detail::coradical_subspace(h); }

bool is_subcoalgebra(const HopfPresentation& h, const Subspace& c) {
  for (const auto& v : c.vectors()) {
    const Mat d = h.comultiply(v);
    for (std::size_t r = 0; r < h.dim(); ++r) {
      if (!c.contains(d.row(r)) || !c.contains(d.column(r))) return false;
    }
  }
  return true;
}

CoradicalTraces coradical_traces(const HopfPresentation& h, const Subspace& c, long p) {
  const std::size_t n = h.dim();
  const Mat s2p = antipode_power(h, 2 * p);
  std::vector<Vec> columns = c.vectors();
  for (const auto& v : columns) {
    if (!c.contains(s2p * v)) {
      throw Error(Errc::NotInvariant, "S^" + std::to_string(2 * p) + " does not preserve C");
    }
  }
  // Extend a basis of C by standard vectors.
  for (std::size_t r = 0; r < n && columns.size() < n; ++r) {
    std::vector<Vec> trial = columns;
    trial.push_back(unit_vec(n, r, h.order()));
    if (Subspace::span_of_vectors(trial, n, h.order()).dim() == trial.size()) columns = trial;
  }
  const Mat q = Mat::from_columns(columns, n, h.order());
  const Mat block = inverse(q) * s2p * q;
  CoradicalTraces out;
  out.on_c = CycNumber(h.order());
  out.on_quotient = CycNumber(h.order());
  for (std::size_t r = 0; r < n; ++r) (r < c.dim() ? out.on_c : out.on_quotient) += block(r, r);
  out.sum_matches = out.on_c + out.on_quotient == mat_trace(s2p);
  out.grouplikes = find_grouplikes(h).size();
  out.pointed = out.grouplikes == c.dim();
  const auto rational = out.on_c.to_rational();
  out.at_least_p = rational && *rational >= p;
  return out;
}

}  // namespace hopf_forge
