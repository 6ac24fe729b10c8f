#include <gtest/gtest.h>

#include <json.hpp>

#include "hopf_forge/report.hpp"
#include "hopf_forge/zoo.hpp"

using namespace hopf_forge;

namespace {

std::vector<std::string> names(const InvariantReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks.results) out.push_back(c.name);
  return out;
}

CheckStatus status(const InvariantReport& r, const std::string& name) {
  const auto* c = r.checks.find(name);
  EXPECT_NE(c, nullptr) << name;
  return c ? c->status : CheckStatus::Fail;
}

}  // namespace

TEST(Report, TaftThreeFields) {
  const auto r = make_report(build_taft(3));
  EXPECT_EQ(r.name, "taft3");
  EXPECT_EQ(r.dim, 9u);
  EXPECT_FALSE(r.semisimple);
  EXPECT_FALSE(r.cosemisimple);
  EXPECT_FALSE(r.unimodular);
  EXPECT_TRUE(r.trace_s2.is_zero());
  EXPECT_EQ(r.index.n, 3);
  EXPECT_EQ(r.x_exp, 2);
  EXPECT_EQ(r.dim_h_plus, 9u);
  EXPECT_EQ(r.dim_h_minus, 0u);
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.q, 3);
  ASSERT_TRUE(r.trace_s2p.has_value());
  EXPECT_EQ(*r.trace_s2p, CycNumber(3, 9L));
  EXPECT_EQ(r.d, 1);
  EXPECT_EQ(r.coradical_dim, 3u);
  EXPECT_EQ(r.trace_s2p_on_c, CycNumber(3, 3L));
  EXPECT_EQ(r.trace_s2p_on_quotient, CycNumber(3, 6L));
  EXPECT_EQ(r.grouplike_count, 3u);
  EXPECT_TRUE(r.pointed);
  EXPECT_TRUE(r.checks.all_passed()) << ::testing::PrintToString(r.checks.failures());
  for (const auto& c : r.checks.results) EXPECT_EQ(c.status, CheckStatus::Pass) << c.name;
  EXPECT_EQ(r.checks.results.size(), 26u);
}

TEST(Report, SelectionByPrefixAndName) {
  ReportOptions options;
  options.checks = {"trace-s2p", "index"};
  const auto r = make_report(build_taft(3), options);
  EXPECT_EQ(names(r), (std::vector<std::string>{"index", "index:equals-p",
                                                "trace-s2p:integrals-agree",
                                                "trace-s2p:divisible", "trace-s2p:d-odd",
                                                "trace-s2p:congruence-mod4",
                                                "trace-s2p:h-minus-formula"}));
  options.checks = {"trace"};
  EXPECT_TRUE(make_report(build_taft(3), options).checks.results.empty());
}

TEST(Report, SemisimpleGroupAlgebraSkips) {
  const auto r = make_report(build_cyclic_group_algebra(15));
  EXPECT_TRUE(r.semisimple);
  EXPECT_EQ(r.index.n, 1);
  EXPECT_EQ(status(r, "eigen:partition"), CheckStatus::Skipped);
  EXPECT_EQ(r.checks.find("eigen:partition")->detail, "IndexOne");
  EXPECT_EQ(r.checks.find("trace-s2p:divisible")->detail, "Semisimple");
  EXPECT_EQ(status(r, "semisimplicity:consistency"), CheckStatus::Pass);
  EXPECT_TRUE(r.checks.all_passed());
}

TEST(Report, PqHypothesisFromDimension) {
  const auto r = make_report(build_taft(3, 1, 15).renamed("t3"),
                             ReportOptions{1, {"trace-s2p:d-odd", "eigen:partition"}});
  EXPECT_EQ(r.checks.find("trace-s2p:d-odd")->status, CheckStatus::Pass);
  const auto tensor = make_report(build_tensor(build_taft(3), build_taft(3)),
                                  ReportOptions{1, {"trace-s2p:d-odd", "index:equals-p"}});
  EXPECT_EQ(tensor.checks.find("trace-s2p:d-odd")->detail, "NotPQ");
  EXPECT_EQ(tensor.checks.find("index:equals-p")->detail, "NotPQ");
}

TEST(Report, OmegaPowerChangesX) {
  const auto r = make_report(build_taft(3), ReportOptions{2, {}});
  EXPECT_EQ(r.omega_power, 2);
  EXPECT_EQ(r.x_exp, 1);
  EXPECT_TRUE(r.checks.all_passed());
}

TEST(Report, IndexEvenSkipsEigenChecks) {
  const auto r = make_report(build_sweedler());
  EXPECT_EQ(r.index.n, 2);
  EXPECT_EQ(r.checks.find("eigen:partition")->detail, "IndexEven");
  EXPECT_EQ(r.checks.find("h-minus:even")->detail, "IndexEven");
}

TEST(ReportJson, StableAndComplete) {
  const auto h = build_taft(3);
  const std::string a = report_json(make_report(h));
  const std::string b = report_json(make_report(h));
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::ordered_json::parse(a);
  EXPECT_EQ(doc.begin().key(), "name");
  EXPECT_EQ(doc["index"]["n"], 3);
  EXPECT_EQ(doc["checks"].size(), 26u);
  EXPECT_EQ(doc["checks"][0]["name"], "index");
  EXPECT_EQ(doc["checks"][0]["status"], "pass");
  EXPECT_FALSE(doc["checks"][0].contains("detail"));
}

TEST(ReportText, ListsEveryCheck) {
  const auto r = make_report(build_taft(3));
  const std::string text = report_text(r);
  for (const auto& c : r.checks.results) EXPECT_NE(text.find(c.name), std::string::npos) << c.name;
  EXPECT_NE(text.find("report: taft3"), std::string::npos);
}
