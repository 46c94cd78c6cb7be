#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ffg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, GaussEmitsSeriesJson) {
  auto r = run({"gauss", "--q", "3", "--v", "01", "--n", "21", "--x", "1/21", "--prec", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["target_prec"], 6);
  const auto& j = doc["value"];
  EXPECT_EQ(j["uniformizer"], "v");
  EXPECT_EQ(j["ram_index"], 1);
  EXPECT_EQ(j["val"], 1);
  EXPECT_EQ(j["coeffs"], (std::vector<int>{2, 2, 1, 1, 1}));
  EXPECT_EQ(j["prec"], 6);
}

TEST(Cli, GammaKindsAndTsv) {
  for (const char* kind : {"ari", "geo", "two"}) {
    auto r = run({"gamma", "--kind", kind, "--q", "3", "--v", "01", "--x", "1/21", "--y", "1/2", "--prec", "4"});
    ASSERT_EQ(r.code, 0) << kind << ": " << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ram_index"], 1);
    EXPECT_TRUE(j.contains("coeffs"));
  }
  auto t = run({"gamma", "--kind", "ari", "--q", "3", "--v", "01", "--y", "1/2", "--prec", "4", "--format", "tsv"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("exponent\tcoeff\n"), std::string::npos);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  std::vector<std::string> args{"verify", "all", "--q", "3", "--v", "01", "--n", "21"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  ASSERT_TRUE(j.is_array());
  for (const auto& rep : j) {
    EXPECT_EQ(rep["status"], "pass") << rep.dump();
    EXPECT_EQ(rep["runtime_ms"], 0);
  }
}

TEST(Cli, VerifyWithQOnlyRunsTheWorkedExample) {
  auto r = run({"verify", "worked-example", "--q", "4", "--format", "tsv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);  // header + eps in F_4^x
}

TEST(Cli, OutWritesAFile) {
  auto path = std::filesystem::temp_directory_path() / "ffgauss_cli_out.json";
  std::filesystem::remove(path);
  auto r = run({"pairing-table", "--q", "3", "--v", "01", "--n", "21", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str());
  EXPECT_EQ(j["dl"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, StickelbergerIsConsistent) {
  auto r = run({"stickelberger", "--q", "3", "--v", "01", "--x", "1/21"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("eta"));
}

TEST(Cli, MalformedInputIsAUsageError) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gauss", "--q", "3", "--v", "01", "--n", "21", "--x", "1/zz"}).code, 2);
  EXPECT_EQ(run({"gauss", "--q", "6", "--v", "01", "--n", "21", "--x", "1/21"}).code, 2);
  EXPECT_EQ(run({"gauss", "--q", "3", "--v", "121", "--n", "21", "--x", "1/21"}).code, 2);
  EXPECT_EQ(run({"verify", "all", "--q", "3", "--v", "01", "--n", "21", "--x", "1/101"}).code, 2);
  EXPECT_EQ(run({"verify", "all", "--x", "1/21"}).code, 2);
  EXPECT_EQ(run({"gamma", "--kind", "ari", "--q", "3", "--v", "01", "--y", "1/3"}).code, 2);
  EXPECT_EQ(run({"gauss", "--q", "3", "--v", "01", "--n", "21", "--x", "1/21", "--format", "xml"}).code, 2);
}

TEST(Cli, UnknownTheoremIdIsAUsageError) {
  EXPECT_EQ(run({"verify", "no-such-id", "--q", "3", "--v", "01", "--n", "21"}).code, 2);
}

}  // namespace
