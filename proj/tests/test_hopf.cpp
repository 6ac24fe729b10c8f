#include <gtest/gtest.h>

#include <random>

#include "hopf_forge/errors.hpp"
#include "hopf_forge/hopf.hpp"
#include "hopf_forge/zoo.hpp"
#include "test_support.hpp"

using namespace hopf_forge;
using hopf_forge::fixtures::corpus;

namespace {

HopfPresentation with_tables(const HopfPresentation& h, std::vector<StructureEntry> mult,
                             std::vector<StructureEntry> comult, std::optional<Mat> antipode) {
  return HopfPresentation(h.name(), h.order(), h.basis(), std::move(mult), std::move(comult),
                          h.unit(), h.counit(), std::move(antipode));
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

TEST(Axioms, HoldOnEveryCorpusAlgebra) {
  for (const auto& [label, h] : corpus()) {
    const auto list = check_axioms(h);
    EXPECT_TRUE(list.all_passed()) << label << ": " << ::testing::PrintToString(list.failures());
    EXPECT_EQ(list.results.size(), 7u) << label;
  }
  EXPECT_TRUE(check_axioms(build_sweedler()).all_passed());
  EXPECT_TRUE(check_axioms(build_taft(3, 2)).all_passed());
  EXPECT_TRUE(check_axioms(build_taft(4)).all_passed());
}

TEST(Axioms, PerturbedMultiplicationIsCaught) {
  const auto t3 = build_taft(3);
  auto mult = t3.mult();
  // x * x = x^2 becomes 2 x^2.
  for (auto& e : mult) {
    if (e.i == 1 && e.j == 1) e.value = CycNumber(3, 2L);
  }
  const auto list = check_axioms(with_tables(t3, mult, t3.comult(), t3.antipode()));
  EXPECT_FALSE(list.all_passed());
  EXPECT_EQ(list.find("associativity")->status, CheckStatus::Fail);
}

TEST(Axioms, PerturbedComultiplicationIsCaught) {
  const auto t3 = build_taft(3);
  auto comult = t3.comult();
  comult.push_back({1, 1, 1, CycNumber::one(3)});
  const auto list = check_axioms(with_tables(t3, t3.mult(), comult, t3.antipode()));
  EXPECT_EQ(list.find("coassociativity")->status, CheckStatus::Fail);
  EXPECT_EQ(list.find("counit")->status, CheckStatus::Pass);
}

TEST(Axioms, PerturbedAntipodeIsCaught) {
  const auto t3 = build_taft(3);
  Mat s = t3.antipode();
  s(1, 1) = -s(1, 1) + CycNumber::one(3);
  const auto list = check_axioms(t3.with_antipode(s));
  EXPECT_EQ(list.find("antipode")->status, CheckStatus::Fail);
  EXPECT_EQ(list.find("associativity")->status, CheckStatus::Pass);
}

TEST(Axioms, MissingAntipodeIsSkipped) {
  const auto list = check_axioms(build_idempotent_monoid_bialgebra());
  EXPECT_EQ(list.find("antipode")->status, CheckStatus::Skipped);
  EXPECT_TRUE(list.all_passed());
}

TEST(Antipode, IntegralFormulaMatchesStoredAndLinearSystem) {
  for (const auto& [label, h] : corpus()) {
    const Mat s = compute_antipode(h);
    EXPECT_EQ(s, h.antipode()) << label;
    if (h.dim() <= 25) EXPECT_EQ(antipode_by_linear_system(h), s) << label;
  }
}

TEST(Antipode, IsAntiMultiplicative) {
  const auto t5 = build_taft(5);
  const Mat& s = t5.antipode();
  for (std::size_t a = 0; a < t5.dim(); a += 3) {
    for (std::size_t b = 0; b < t5.dim(); b += 4) {
      const Vec ea = t5.basis_vector(a), eb = t5.basis_vector(b);
      EXPECT_EQ(s * t5.multiply(ea, eb), t5.multiply(s * eb, s * ea));
    }
  }
}

TEST(Antipode, BialgebraWithoutOneIsRejected) {
  const auto m = build_idempotent_monoid_bialgebra();
  EXPECT_EQ(code_of([&] { compute_antipode(m); }), Errc::NoAntipode);
  EXPECT_EQ(code_of([&] { antipode_by_linear_system(m); }), Errc::NoAntipode);
  EXPECT_EQ(code_of([&] { (void)m.antipode(); }), Errc::NoAntipode);
}

TEST(Dual, DoubleDualIsIdentity) {
  for (const auto& [label, h] : corpus()) {
    if (h.dim() > 25) continue;
    EXPECT_EQ(dual(dual(h)), h) << label;
  }
}

TEST(Dual, SwapsTablesAndTransposesAntipode) {
  const auto t3 = build_taft(3);
  const auto d = dual(t3);
  EXPECT_EQ(d.unit(), t3.counit());
  EXPECT_EQ(d.counit(), t3.unit());
  EXPECT_EQ(d.antipode(), t3.antipode().transpose());
  EXPECT_EQ(d.mult().size(), t3.comult().size());
  EXPECT_TRUE(check_axioms(d).all_passed());
}

TEST(LiftOrder, PreservesAxiomsAndRejectsNonMultiples) {
  const auto t3 = build_taft(3);
  const auto lifted = lift_order(t3, 12);
  EXPECT_EQ(lifted.order(), 12);
  EXPECT_TRUE(check_axioms(lifted).all_passed());
  EXPECT_EQ(code_of([&] { lift_order(t3, 10); }), Errc::OrderMismatch);
}

TEST(Construction, MalformedTablesThrow) {
  const auto t3 = build_taft(3);
  auto mult = t3.mult();
  mult.push_back({0, 9, 0, CycNumber::one(3)});
  EXPECT_EQ(code_of([&] { with_tables(t3, mult, t3.comult(), std::nullopt); }),
            Errc::MalformedTensor);
  auto wrong_field = t3.mult();
  wrong_field.front().value = CycNumber::one(5);
  EXPECT_EQ(code_of([&] { with_tables(t3, wrong_field, t3.comult(), std::nullopt); }),
            Errc::OrderMismatch);
}

TEST(Construction, DuplicateEntriesAreSummed) {
  const auto z3 = build_cyclic_group_algebra(3);
  auto mult = z3.mult();
  mult.push_back({0, 0, 0, CycNumber::one(3)});
  mult.push_back({0, 0, 0, CycNumber(3, -1L)});
  EXPECT_EQ(with_tables(z3, mult, z3.comult(), z3.antipode()), z3);
}

TEST(Grouplikes, CountsMatchGroupStructure) {
  // Group algebras: every group element; Taft T_n: powers of g; tensor: products.
  const std::map<std::string, std::size_t> expected{
      {"k[Z3]", 3},  {"k[Z5]", 5},    {"k[Z15]", 15},    {"k[Z3xZ3]", 9},
      {"T3", 3},     {"T5", 5},       {"dual(T3)", 3},   {"T3(x)k[Z5]", 15}};
  for (const auto& [label, h] : corpus()) {
    const auto g = find_grouplikes(h);
    EXPECT_EQ(g.size(), expected.at(label)) << label;
    for (const auto& x : g) EXPECT_TRUE(is_grouplike(h, x)) << label;
  }
}

TEST(Grouplikes, SplittingFieldRequired) {
  // k[Z3] over Q: the characters of Z3 need zeta_3, so grouplikes of the dual
  // algebra cannot be listed.
  const auto z3_over_q = build_cyclic_group_algebra(3, 1);
  EXPECT_EQ(code_of([&] { find_grouplikes(dual(z3_over_q)); }), Errc::EigenvalueNotInField);
  EXPECT_EQ(find_grouplikes(z3_over_q).size(), 3u);
}

TEST(Harpoons, CounitActsTrivially) {
  const auto t3 = build_taft(3);
  const Functional eps{t3.counit()};
  std::mt19937 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    HopfElement a;
    for (std::size_t i = 0; i < t3.dim(); ++i) a.coords.push_back(fixtures::random_cyc(rng, 3));
    EXPECT_EQ(harpoon_left(t3, eps, a).coords, a.coords);
    EXPECT_EQ(harpoon_right(t3, a, eps).coords, a.coords);
    EXPECT_EQ(delta_op(t3, a), t3.comultiply(a.coords).transpose());
  }
}

TEST(Convolution, CounitIsTheUnitOfTheDual) {
  const auto t3 = build_taft(3);
  const Functional eps{t3.counit()};
  EXPECT_EQ(compose_with_antipode(t3, eps).coords, eps.coords);
  Functional beta{unit_vec(9, 4, 3)};
  EXPECT_EQ(convolve(t3, eps, beta).coords, beta.coords);
  EXPECT_EQ(convolve(t3, beta, eps).coords, beta.coords);
}

TEST(AntipodePower, NegativePowersInvert) {
  const auto t3 = build_taft(3);
  EXPECT_EQ(antipode_power(t3, 2) * antipode_power(t3, -2), Mat::identity(9, 3));
  EXPECT_EQ(antipode_power(t3, 6), Mat::identity(9, 3));
  EXPECT_NE(antipode_power(t3, 2), Mat::identity(9, 3));
}
