#include <gtest/gtest.h>

#include <random>

#include "hopf_forge/errors.hpp"
#include "hopf_forge/integrals.hpp"
#include "hopf_forge/linalg.hpp"
#include "hopf_forge/zoo.hpp"
#include "test_support.hpp"

using namespace hopf_forge;
using hopf_forge::fixtures::corpus;

namespace {

/// k[M] for M = {1, z1, z2} with z_i z_j = z_j: two independent left integrals.
HopfPresentation right_zero_monoid() {
  const int o = 1;
  const auto one = CycNumber::one(o);
  std::vector<StructureEntry> mult, comult;
  const std::size_t table[3][3] = {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) mult.push_back({a, b, table[a][b], one});
    comult.push_back({a, a, a, one});
  }
  return HopfPresentation("monoid{1,z1,z2}", o, {"1", "z1", "z2"}, mult, comult,
                          unit_vec(3, 0, o), Vec(3, one), std::nullopt);
}

Errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::ParseError;
}

}  // namespace

TEST(Integrals, DefiningIdentitiesHold) {
  for (const auto& [label, h] : corpus()) {
    const auto pair = make_integral_pair(h);
    ASSERT_TRUE(pair.normalized) << label;
    const Vec& L = pair.left_integral.coords;
    EXPECT_EQ(pair.right_integral(L), CycNumber::one(h.order())) << label;
    for (std::size_t a = 0; a < h.dim(); ++a) {
      const Vec ea = h.basis_vector(a);
      // a L = eps(a) L and L a = alpha(a) L
      Vec scaled = L;
      for (auto& c : scaled) c *= h.counit_of(ea);
      EXPECT_EQ(h.multiply(ea, L), scaled) << label << " a=" << a;
      scaled = L;
      for (auto& c : scaled) c *= pair.distinguished_alpha(ea);
      EXPECT_EQ(h.multiply(L, ea), scaled) << label << " a=" << a;
      // l b = b(1) l for the coordinate functionals b
      const Functional b{ea};
      Vec expected = pair.right_integral.coords;
      for (auto& c : expected) c *= b(h.unit());
      EXPECT_EQ(convolve(h, pair.right_integral, b).coords, expected) << label;
    }
    EXPECT_TRUE(is_grouplike(h, pair.distinguished_g)) << label;
  }
}

TEST(Integrals, GroupAlgebraValues) {
  const auto h = build_cyclic_group_algebra(3);
  const auto L = left_integral(h);
  const auto l = right_integral_dual(h);
  const auto one = CycNumber::one(3);
  EXPECT_EQ(L.coords, (Vec{one, one, one}));
  EXPECT_EQ(l.coords, (Vec{one, CycNumber(3), CycNumber(3)}));
  // The canonical scalings already pair to 1 here.
  EXPECT_EQ(l(L), one);
  const auto pair = make_integral_pair(h);
  EXPECT_TRUE(is_unimodular(h, pair));
  EXPECT_TRUE(is_semisimple(h, pair));
  EXPECT_TRUE(is_cosemisimple(h, pair));
}

TEST(Integrals, TaftIsNeitherSemisimpleNorUnimodular) {
  for (int n : {2, 3, 5}) {
    const auto h = build_taft(n);
    const auto pair = make_integral_pair(h);
    EXPECT_FALSE(is_unimodular(h, pair)) << n;
    EXPECT_FALSE(is_semisimple(h, pair)) << n;
    EXPECT_FALSE(is_cosemisimple(h, pair)) << n;
    // The distinguished grouplike is a power of g of full order n.
    const Mat r = h.left_mult_matrix(pair.distinguished_g.coords);
    EXPECT_EQ(operator_order(r, 4L * n), n);
  }
}

TEST(Integrals, TaftRightIntegralLivesOnTopDegree) {
  // Basis index i * 3 + j is g^i x^j; only j = 2 may carry weight.
  const auto h = build_taft(3);
  const auto l = right_integral_dual(h);
  for (std::size_t t = 0; t < h.dim(); ++t) {
    if (t % 3 != 2) EXPECT_TRUE(l.coords[t].is_zero()) << h.basis()[t];
  }
  EXPECT_FALSE(is_zero(l.coords));
}

TEST(Integrals, SemisimplicityCriteriaAgreeWithTraceOfS2) {
  for (const auto& [label, h] : corpus()) {
    const auto pair = make_integral_pair(h);
    const bool trace_nonzero = !mat_trace(antipode_power(h, 2)).is_zero();
    EXPECT_EQ(is_semisimple(h, pair), trace_nonzero) << label;
    EXPECT_EQ(is_cosemisimple(h, pair), trace_nonzero) << label;
  }
}

TEST(Integrals, DistinguishedAlphaIsAnAlgebraMap) {
  const auto h = build_taft(3);
  const auto pair = make_integral_pair(h);
  const auto& alpha = pair.distinguished_alpha;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    for (std::size_t b = 0; b < h.dim(); ++b) {
      EXPECT_EQ(alpha(h.multiply(h.basis_vector(a), h.basis_vector(b))),
                alpha(h.basis_vector(a)) * alpha(h.basis_vector(b)));
    }
  }
}

TEST(Integrals, TwoDimensionalIntegralSpaceRejected) {
  const auto m = right_zero_monoid();
  ASSERT_TRUE(check_axioms(m).all_passed());
  EXPECT_EQ(code_of([&] { left_integral(m); }), Errc::IntegralSpaceNotOneDim);
}

TEST(Integrals, DegeneratePairingOnNonHopfBialgebra) {
  const auto m = build_idempotent_monoid_bialgebra();
  EXPECT_EQ(code_of([&] { make_integral_pair(m); }), Errc::DegeneratePairing);
}

TEST(TraceFormula, AllVariantsEqualMatrixTrace) {
  std::mt19937 rng(77);
  for (const auto& [label, h] : corpus()) {
    if (h.dim() > 25) continue;
    const auto pair = make_integral_pair(h);
    for (int trial = 0; trial < 3; ++trial) {
      const Mat f = fixtures::random_mat(rng, h.dim(), h.order(), 1);
      const auto tr = mat_trace(f);
      for (auto v : {TraceVariant::AntipodeOnSecondLeg, TraceVariant::AntipodeAfterF,
                     TraceVariant::AntipodeBeforeF}) {
        EXPECT_EQ(radford_trace(h, pair, f, v), tr) << label << " variant " << static_cast<int>(v);
      }
    }
  }
}

TEST(TraceFormula, RequiresNormalizedPair) {
  const auto h = build_taft(3);
  IntegralPair raw{left_integral(h), right_integral_dual(h), false, {}, {}};
  EXPECT_EQ(code_of([&] {
              radford_trace(h, raw, Mat::identity(9, 3), TraceVariant::AntipodeOnSecondLeg);
            }),
            Errc::NotNormalized);
  const auto pair = make_integral_pair(h);
  EXPECT_EQ(code_of([&] {
              radford_trace(h, pair, Mat::identity(4, 3), TraceVariant::AntipodeOnSecondLeg);
            }),
            Errc::DimensionMismatch);
}

TEST(S4Formula, HoldsOnCorpusAndDetectsWrongModularData) {
  for (const auto& [label, h] : corpus()) {
    EXPECT_TRUE(verify_s4_formula(h, make_integral_pair(h))) << label;
  }
  const auto h = build_taft(3);
  auto pair = make_integral_pair(h);
  pair.distinguished_g = HopfElement{h.unit()};
  EXPECT_FALSE(verify_s4_formula(h, pair));
}
