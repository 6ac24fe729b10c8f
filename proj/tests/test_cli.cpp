#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hopf_forge/io.hpp"
#include "hopf_forge/zoo.hpp"

namespace fs = std::filesystem;
using namespace hopf_forge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hopf_forge_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string save(const std::string& name, const HopfPresentation& h) const {
    return write(name, serialize_hopf_json(h));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, VerifyPassesOnTaft) {
  const auto r = run({"verify", save("t3.json", build_taft(3))});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("pass  associativity"), std::string::npos);
  EXPECT_NE(r.out.find("pass  antipode-cross-check"), std::string::npos);
}

TEST_F(Cli, VerifyFailsOnBrokenAntipode) {
  const auto t3 = build_taft(3);
  Mat s = t3.antipode();
  s(1, 1) = CycNumber::one(3);
  const auto r = run({"verify", save("bad.json", t3.with_antipode(s))});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.out.find("fail  antipode"), std::string::npos);
}

TEST_F(Cli, MonoidHasNoAntipode) {
  const auto file = save("m.json", build_idempotent_monoid_bialgebra());
  EXPECT_EQ(run({"verify", file}).code, cli::kCheckFailed);
  const auto r = run({"report", file});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.err.find("NoAntipode"), std::string::npos);
}

TEST_F(Cli, ReportJsonIsByteIdentical) {
  const auto file = save("t3.json", build_taft(3));
  const auto a = run({"report", file, "--json"});
  const auto b = run({"report", file, "--json"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

TEST_F(Cli, ReportOutAndCheckSelection) {
  const auto file = save("t3.json", build_taft(3));
  const auto out = path("report.txt");
  const auto r = run({"report", file, "--check", "coradical,index", "--out", out});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(text.find("coradical:pointed"), std::string::npos);
  EXPECT_EQ(text.find("eigen:partition"), std::string::npos);
}

TEST_F(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({"verify", write("broken.json", "{\"name\": ")}).code, cli::kBadInput);
  EXPECT_EQ(run({"verify", path("missing.json")}).code, cli::kBadInput);
  EXPECT_EQ(run({"zoo", "taft", "--n", "1"}).code, cli::kBadInput);
  EXPECT_EQ(run({"zoo", "group", "--table", write("loop.json", "[[0,1],[1,1]]")}).code,
            cli::kBadInput);
  EXPECT_EQ(run({"report", save("t3.json", build_taft(3)), "--omega", "3"}).code, cli::kBadInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kBadInput);
  EXPECT_EQ(run({}).code, cli::kBadInput);
}

TEST_F(Cli, TensorNeedsCommonOrder) {
  const auto a = save("t3.json", build_taft(3));
  const auto b = save("z5.json", build_cyclic_group_algebra(5));
  const auto mismatch = run({"tensor", a, b});
  EXPECT_EQ(mismatch.code, cli::kBadInput);
  EXPECT_NE(mismatch.err.find("--order"), std::string::npos);
  const auto ok = run({"tensor", a, b, "--order", "15"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(parse_hopf_json(ok.out).dim(), 45u);
}

TEST_F(Cli, FieldTooSmallExitsThree) {
  // T3 over Q(zeta_3) with w = zeta_3; asking for omega in Q(zeta_3) is fine,
  // but the dual of k[Z3] over Q needs zeta_3 to list its grouplikes.
  const auto file = save("z3q_dual.json", dual(build_cyclic_group_algebra(3, 1)));
  const auto r = run({"report", file});
  EXPECT_EQ(r.code, cli::kFieldTooSmall) << r.out << r.err;
  EXPECT_NE(r.err.find("hint"), std::string::npos);
}

TEST_F(Cli, ZooEmitsCanonicalFiles) {
  const auto taft = run({"zoo", "taft", "--n", "3"});
  EXPECT_EQ(taft.code, cli::kOk);
  EXPECT_EQ(taft.out, serialize_hopf_json(build_taft(3)));
  EXPECT_EQ(run({"zoo", "sweedler"}).out, serialize_hopf_json(build_sweedler()));
  EXPECT_EQ(run({"zoo", "group", "--cyclic", "3", "--cyclic", "3"}).out,
            serialize_hopf_json(build_abelian_group_algebra({3, 3})));
  EXPECT_EQ(run({"zoo", "monoid"}).out, serialize_hopf_json(build_idempotent_monoid_bialgebra()));
  const auto t3 = save("t3.json", build_taft(3));
  EXPECT_EQ(run({"zoo", "dual", "--a", t3}).out, serialize_hopf_json(dual(build_taft(3))));
  EXPECT_EQ(run({"dual", t3}).out, serialize_hopf_json(dual(build_taft(3))));
  const auto out = path("w2.json");
  EXPECT_EQ(run({"zoo", "taft", "--n", "3", "--root-power", "2", "--out", out}).code, cli::kOk);
  EXPECT_EQ(load_hopf_file(out), build_taft(3, 2));
}

TEST_F(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
