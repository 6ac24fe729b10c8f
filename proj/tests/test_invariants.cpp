#include <gtest/gtest.h>

#include "hopf_forge/errors.hpp"
#include "hopf_forge/integrals.hpp"
#include "hopf_forge/invariants.hpp"
#include "hopf_forge/report.hpp"
#include "hopf_forge/zoo.hpp"
#include "test_support.hpp"

using namespace hopf_forge;
using hopf_forge::fixtures::corpus;

namespace {

Errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::ParseError;
}

Mat int_mat(const std::vector<std::vector<long>>& rows) {
  Mat m(rows.size(), rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = CycNumber(1, rows[r][c]);
  }
  return m;
}

struct Lab {
  HopfPresentation h;
  IntegralPair pair;
  IndexData index;
  EigenTable table;
};

Lab taft_lab(int n) {
  auto h = build_taft(n);
  auto pair = make_integral_pair(h);
  auto index = compute_index(h, pair);
  auto table = eigen_decomposition(h, pair, index, 1);
  return {std::move(h), std::move(pair), index, std::move(table)};
}

}  // namespace

TEST(Index, MatchesOrdersComputedDirectly) {
  for (const auto& [label, h] : corpus()) {
    const auto pair = make_integral_pair(h);
    const auto idx = compute_index(h, pair);
    const long s4 = operator_order(antipode_power(h, 4), 1000);
    const long g = operator_order(h.left_mult_matrix(pair.distinguished_g.coords), 1000);
    EXPECT_EQ(idx.s4_order, s4) << label;
    EXPECT_EQ(idx.g_order, g) << label;
    EXPECT_EQ(idx.n, std::lcm(s4, g)) << label;
  }
  const auto t5 = build_taft(5);
  EXPECT_EQ(compute_index(t5, make_integral_pair(t5)).n, 5);
}

TEST(Omega, PowersAndFieldMembership) {
  EXPECT_EQ(omega_from_power(15, 3, 2), root_of_unity(15, 10));
  EXPECT_EQ(code_of([] { omega_from_power(15, 3, 3); }), Errc::BadParameters);
  EXPECT_EQ(code_of([] { omega_from_power(4, 3, 1); }), Errc::NonSplitting);
}

TEST(XExponent, DefinedByAlphaOfG) {
  for (int n : {3, 5}) {
    const auto lab = taft_lab(n);
    const CycNumber alpha_g = lab.pair.distinguished_alpha(lab.pair.distinguished_g);
    EXPECT_EQ(alpha_g, root_of_unity(n, lab.table.x_exp)) << n;
    EXPECT_EQ(lab.table.x_exp, n - 1) << n;
  }
  // w = zeta_3^2 turns w^x = zeta_3^2 into x = 1.
  const auto h = build_taft(3);
  const auto pair = make_integral_pair(h);
  EXPECT_EQ(x_exponent(h, pair, omega_from_power(3, 3, 2), 3), 1);
}

TEST(Eigen, SpacesAreJointEigenspaces) {
  for (int n : {3, 5}) {
    const auto lab = taft_lab(n);
    const Mat s2 = antipode_power(lab.h, 2);
    const Mat rg = lab.h.right_mult_matrix(lab.pair.distinguished_g.coords);
    std::size_t total = 0;
    for (int a = 0; a < 2; ++a) {
      for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
          CycNumber lambda = root_of_unity(n, i);
          if (a == 1) lambda = -lambda;
          const auto expected =
              intersect(eigenspace(s2, lambda), eigenspace(rg, root_of_unity(n, j)));
          const EigenKey key{a, i, j};
          EXPECT_EQ(lab.table.dim_of(key), expected.dim()) << key.to_string();
          if (expected.dim() > 0) EXPECT_EQ(lab.table.spaces.at(key), expected);
          total += expected.dim();
        }
      }
    }
    EXPECT_EQ(total, lab.h.dim());
    EXPECT_TRUE(check_dim_symmetry(lab.table).ok);
    EXPECT_EQ(lab.table.basis_change * lab.table.basis_change_inverse,
              Mat::identity(lab.h.dim(), n));
  }
}

TEST(Eigen, TaftSpacesAreLines) {
  const auto lab = taft_lab(3);
  EXPECT_EQ(lab.table.dims.size(), 18u);
  for (const auto& [key, d] : lab.table.dims) EXPECT_EQ(d, key.a == 0 ? 1u : 0u) << key.to_string();
  EXPECT_EQ(lab.table.x_vec(), (EigenKey{0, 1, 2}));
  EXPECT_EQ(lab.table.partner({0, 1, 1}), (EigenKey{0, 0, 1}));
}

TEST(Eigen, RejectsIndexOneAndEvenIndex) {
  const auto z3 = build_cyclic_group_algebra(3);
  const auto pz = make_integral_pair(z3);
  EXPECT_EQ(code_of([&] { eigen_decomposition(z3, pz, compute_index(z3, pz), 1); }), Errc::IndexOne);
  for (int n : {2, 4}) {
    const auto t = build_taft(n);
    const auto p = make_integral_pair(t);
    EXPECT_EQ(code_of([&] { eigen_decomposition(t, p, compute_index(t, p), 1); }), Errc::IndexEven)
        << n;
  }
}

TEST(Projection, IdempotentAndComplete) {
  const auto lab = taft_lab(3);
  Mat sum(9, 9, 3);
  for (const auto& [key, d] : lab.table.dims) {
    const Mat e = projection(lab.table, key);
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(mat_trace(e), CycNumber(3, static_cast<long>(d)));
    sum += e;
  }
  EXPECT_EQ(sum, Mat::identity(9, 3));
}

TEST(NormalForm, ReconstructsAndMatchesTraces) {
  for (int n : {3, 5}) {
    const auto lab = taft_lab(n);
    const auto nf = normal_form(lab.h, lab.pair, lab.table);
    EXPECT_TRUE(check_reconstruction(lab.h, lab.pair, lab.table, nf).ok);
    Mat total(lab.h.dim(), lab.h.dim(), n);
    for (const auto& [key, block] : nf.components) total += block;
    EXPECT_EQ(total, lab.h.comultiply(lab.pair.left_integral.coords));
    for (const auto& [key, tr] : projection_traces(lab.h, lab.pair, lab.table)) {
      EXPECT_EQ(tr.direct, CycNumber(n, static_cast<long>(lab.table.dim_of(key))));
      EXPECT_EQ(tr.via_integrals, tr.direct);
    }
  }
}

TEST(Gram, SyntheticForms) {
  const auto symplectic = analyze_gram(int_mat({{0, 1}, {-1, 0}}));
  EXPECT_TRUE(symplectic.nondegenerate());
  EXPECT_TRUE(symplectic.alternating());
  EXPECT_TRUE(symplectic.even_dim());

  const auto swap = analyze_gram(int_mat({{0, 1}, {1, 0}}));
  EXPECT_TRUE(swap.nondegenerate());
  EXPECT_FALSE(swap.antisymmetric);
  EXPECT_TRUE(swap.zero_diagonal);

  const auto degenerate = analyze_gram(int_mat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(degenerate.rank, 2u);
  EXPECT_FALSE(degenerate.nondegenerate());
  EXPECT_TRUE(degenerate.alternating());
  EXPECT_FALSE(degenerate.even_dim());

  const auto empty = analyze_gram(Mat(0, 0, 1));
  EXPECT_TRUE(empty.nondegenerate());
  EXPECT_TRUE(empty.even_dim());
}

TEST(AlternatingForm, TaftInstances) {
  for (int n : {3, 5}) {
    const auto lab = taft_lab(n);
    const auto nf = normal_form(lab.h, lab.pair, lab.table);
    const auto r = alternating_form_check(lab.h, lab.pair, lab.table, nf);
    EXPECT_EQ(r.ell, (lab.table.x_exp * (n + 1) / 2) % n);
    EXPECT_EQ(r.v_key, (EigenKey{1, (n - r.ell) % n, r.ell}));
    EXPECT_EQ(r.global.rank, lab.h.dim());
    EXPECT_EQ(r.restricted.dim, 0u);
    EXPECT_TRUE(r.delta_op.ok) << r.delta_op.witness;
  }
}

TEST(PlusMinus, SpectrumOfS2n) {
  for (const auto& [label, h] : corpus()) {
    const auto pair = make_integral_pair(h);
    const long n = compute_index(h, pair).n;
    const auto pm = h_plus_minus(h, n);
    EXPECT_EQ(pm.plus + pm.minus, h.dim()) << label;
    EXPECT_EQ(CycNumber(h.order(), static_cast<long>(pm.plus) - static_cast<long>(pm.minus)),
              mat_trace(antipode_power(h, 2 * n)))
        << label;
  }
}

TEST(TraceS2p, TaftThree) {
  const auto h = build_taft(3);
  const auto r = trace_s2p_report(h, make_integral_pair(h), 3, 3);
  // S^6 = id on T3, so the trace is dim = 9 = 3^2 * 1.
  EXPECT_EQ(mat_pow(h.antipode(), 6), Mat::identity(9, 3));
  EXPECT_EQ(r.trace, CycNumber(3, 9L));
  EXPECT_EQ(r.trace_via_integrals, r.trace);
  EXPECT_TRUE(r.divisible);
  ASSERT_TRUE(r.d.has_value());
  EXPECT_EQ(*r.d, 1);
  EXPECT_TRUE(r.d_odd);
  EXPECT_TRUE(r.congruence_mod4);
  EXPECT_EQ(r.expected_h_minus, 0);
  EXPECT_TRUE(r.h_minus_matches);
}

TEST(TraceS2p, PreconditionsEnforced) {
  const auto h = build_taft(3);
  EXPECT_EQ(code_of([&] { trace_s2p_report(h, make_integral_pair(h), 3, 5); }),
            Errc::PreconditionFailed);
}

TEST(DimensionIdentities, TaftThreeAndFive) {
  for (int n : {3, 5}) {
    const auto lab = taft_lab(n);
    const auto r = check_dimension_identities(lab.h, lab.pair, lab.table, Integer(1));
    EXPECT_TRUE(r.difference.ok) << r.difference.witness;
    ASSERT_TRUE(r.j_independence.has_value());
    EXPECT_TRUE(r.j_independence->ok) << r.j_independence->witness;
    const auto wrong = check_dimension_identities(lab.h, lab.pair, lab.table, Integer(3));
    EXPECT_FALSE(wrong.difference.ok);
  }
}

TEST(Coradical, TaftIsSpannedByPowersOfG) {
  const auto h = build_taft(3);
  const auto c = coradical(h);
  const auto expected = Subspace::span_of_vectors(
      {h.basis_vector(0), h.basis_vector(3), h.basis_vector(6)}, 9, 3);
  EXPECT_EQ(c, expected);
  EXPECT_TRUE(is_subcoalgebra(h, c));
  const auto tr = coradical_traces(h, c, 3);
  EXPECT_EQ(tr.on_c, CycNumber(3, 3L));
  EXPECT_EQ(tr.on_quotient, CycNumber(3, 6L));
  EXPECT_TRUE(tr.sum_matches);
  EXPECT_EQ(tr.grouplikes, 3u);
  EXPECT_TRUE(tr.pointed);
  EXPECT_TRUE(tr.at_least_p);
}

TEST(Coradical, CosemisimpleAlgebraIsItsOwnCoradical) {
  const auto h = build_cyclic_group_algebra(5);
  EXPECT_EQ(coradical(h).dim(), 5u);
  EXPECT_EQ(coradical(dual(build_taft(3))).dim(), 3u);
}

TEST(Coradical, NonInvariantSubspaceRejected) {
  const auto h = build_taft(3);
  Vec v = h.basis_vector(1);
  v[3] = CycNumber::one(3);
  const auto s = Subspace::span_of_vectors({v}, 9, 3);
  EXPECT_FALSE(is_subcoalgebra(h, s));
  // S^6 = id on T3, so use S^2, which scales x but fixes g.
  EXPECT_EQ(code_of([&] { coradical_traces(h, s, 1); }), Errc::NotInvariant);
}

TEST(OddPrimePair, Factorizations) {
  EXPECT_EQ(odd_prime_pair(9), (std::pair<long, long>{3, 3}));
  EXPECT_EQ(odd_prime_pair(15), (std::pair<long, long>{3, 5}));
  EXPECT_EQ(odd_prime_pair(21), (std::pair<long, long>{3, 7}));
  EXPECT_EQ(odd_prime_pair(25), (std::pair<long, long>{5, 5}));
  EXPECT_FALSE(odd_prime_pair(45).has_value());
  EXPECT_FALSE(odd_prime_pair(6).has_value());
  EXPECT_FALSE(odd_prime_pair(3).has_value());
}
