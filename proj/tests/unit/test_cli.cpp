#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mthv_cli/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json report() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mthv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("mthv-cli-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const std::vector<std::string> kMaxsub25 = {"maxsub", "--c", "2", "--h", "5/16", "--l", "1"};

}  // namespace

TEST(Cli, IrreducibleExample) {
  const auto r = run({"irreducible", "--c", "2", "--h", "1/16", "--l", "1", "--alpha", "0", "--beta", "0", "--gamma",
                      "2", "--kind", "A", "--level-bound", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.report();
  EXPECT_EQ(j["schema"], "mthv-report");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "irreducible");
  EXPECT_EQ(j["result"]["verdict"], "reducible");
  EXPECT_EQ(j["result"]["clause"], 4);
  EXPECT_EQ(j["result"]["lambda"]["points"], Json::array({"0"}));
  EXPECT_EQ(j["provenance"]["bounds"]["level_bound"], "2");
}

TEST(Cli, RhoExample) {
  const auto r = run({"rho", "--expr", "d(-2)", "--alpha", "0", "--beta", "0", "--gamma", "1", "--l", "1", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.report();
  EXPECT_EQ(j["result"]["p_int"], "n + 2");
  EXPECT_EQ(j["result"]["p_half"], "n + 2");
  EXPECT_EQ(j["result"]["value"], "5");
}

TEST(Cli, OtherCommands) {
  auto r = run({"bracket", "--x", "d(2)", "--y", "d(-2)", "--c", "3"});
  EXPECT_EQ(r.report()["result"]["bracket"], "4*d(0) + 1/2*C");
  r = run({"straighten", "--expr", "h(1/2)*h(-1/2)"});
  EXPECT_EQ(r.report()["result"]["canonical"], "h(-1/2)*h(1/2) + 1/2*L");
  r = run({"roots", "--expr", "d(-1) - 1/(2*l)*h(-1/2)^2", "--expr", "d(-2) - 1/l*h(-3/2)*h(-1/2)", "--l", "1", "--alpha",
           "1/2", "--gamma", "2"});
  EXPECT_EQ(r.report()["result"]["lambda"]["text"], "{1/2}");
  r = run({"singular", "--c", "1", "--h", "1/16", "--l", "1", "--level", "1"});
  EXPECT_EQ(r.report()["result"]["vectors"], Json::array({"-1/2*h(-1/2)^2 + d(-1)"}));
  r = run({"filtration", "--c", "2", "--h", "5/16", "--l", "1", "--alpha", "1/4", "--beta", "1/4", "--gamma", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["result"]["shape"], "finite");
  EXPECT_EQ(r.report()["result"]["steps"][0]["highest_weight"], "17/16");
  r = run({"iso", "--kind", "A", "--alpha", "1/3", "--gamma", "2", "--alpha1", "11/6"});
  EXPECT_TRUE(r.report()["result"]["isomorphic"].get<bool>());
  r = run({"iso", "--kind", "A", "--kind1", "Aprime"});
  EXPECT_FALSE(r.report()["result"]["isomorphic"].get<bool>());
  EXPECT_EQ(r.report()["result"]["clause"], 3);
  r = run({"irreducible", "--kind", "Aprime", "--c", "2", "--h", "1/16", "--l", "1"});
  EXPECT_EQ(r.report()["result"]["verdict"], "reduces-to-virasoro");
  EXPECT_EQ(r.report()["result"]["h_virasoro"], "0");
}

TEST(Cli, VerifySuite) {
  const auto r = run({"verify", "--suite", "shift"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.report()["result"]["all_passed"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"rho", "--expr", "d(-1)", "--bogus"}).code, 2);
  EXPECT_EQ(run({"rho", "--expr", "d(-1)", "--c", "0.5"}).code, 2);
  EXPECT_EQ(run({"rho", "--expr", "d(-1) +"}).code, 2);
  EXPECT_EQ(run({"rho", "--expr", "d(1)"}).code, 2);
  EXPECT_EQ(run({"irreducible", "--gamma", "0", "--l", "1"}).code, 2);
  EXPECT_EQ(run({"irreducible", "--kind", "B"}).code, 2);
  EXPECT_EQ(run({"singular", "--level", "1/3", "--l", "1"}).code, 2);
  EXPECT_EQ(run({"maxsub", "--l", "0"}).code, 2);
  auto inc = run({"maxsub", "--c", "2", "--h", "5/16", "--l", "1", "--level-bound", "3/2"});
  EXPECT_EQ(inc.code, 3);
  EXPECT_FALSE(inc.report()["result"]["complete"].get<bool>());
  EXPECT_EQ(run({"filtration", "--c", "2", "--h", "5/16", "--l", "1", "--gamma", "2", "--level-bound", "1"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ErrorReportsAreStructured) {
  const auto r = run({"rho", "--expr", "d(-1) + foo"});
  ASSERT_EQ(r.code, 2);
  const Json j = r.report();
  EXPECT_EQ(j["error"]["kind"], "invalid-input");
  EXPECT_NE(j["error"]["message"].get<std::string>().find("offset 8"), std::string::npos);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, JsonOutputIsDeterministic) {
  const std::vector<std::string> args = {"filtration", "--c", "2", "--h", "5/16", "--l", "1", "--alpha", "1/4",
                                         "--beta", "1/4", "--gamma", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto human = args;
  human.insert(human.end(), {"--format", "human"});
  EXPECT_NE(run(human).out.find("generated: "), std::string::npos);
}

TEST(Cli, CacheRoundTrip) {
  TempDir dir;
  auto args = kMaxsub25;
  args.insert(args.end(), {"--cache-dir", dir.path().string()});
  const auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.report()["provenance"]["cache"]["stored"], 4);
  EXPECT_EQ(first.report()["provenance"]["cache"]["hits"], 0);
  const auto second = run(args);
  EXPECT_EQ(second.report()["provenance"]["cache"]["hits"], 4);
  EXPECT_EQ(second.report()["result"], first.report()["result"]);
  // No temporary files are left behind.
  for (const auto& e : fs::directory_iterator(dir.path()))
    EXPECT_EQ(e.path().extension(), ".json") << e.path();
}

TEST(Cli, CorruptCacheIsIgnoredAndRewritten) {
  TempDir dir;
  auto args = kMaxsub25;
  args.insert(args.end(), {"--cache-dir", dir.path().string()});
  const auto clean = run(args);
  ASSERT_EQ(clean.code, 0);
  std::size_t damaged = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) {
    std::ofstream(e.path(), std::ios::trunc) << (damaged++ % 2 ? "{ not json" : R"({"format": 99})");
  }
  const auto again = run(args);
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.report()["result"], clean.report()["result"]);
  EXPECT_EQ(again.report()["provenance"]["cache"]["rejected"], 4);
  EXPECT_NE(again.err.find("warning: ignoring cache entry"), std::string::npos);
  EXPECT_EQ(run(args).report()["provenance"]["cache"]["hits"], 4);
}

TEST(Cli, RecheckRejectsWrongCachedVectors) {
  TempDir dir;
  auto args = kMaxsub25;
  args.insert(args.end(), {"--cache-dir", dir.path().string()});
  const auto clean = run(args);
  ASSERT_EQ(clean.code, 0);
  // Replace the level-2 entry with a well-formed but non-singular vector.
  for (const auto& e : fs::directory_iterator(dir.path())) {
    std::ifstream in(e.path());
    Json j = Json::parse(in);
    in.close();
    if (j["level"] != "2") continue;
    j["generators"] = Json::array({"d(-2)"});
    std::ofstream(e.path(), std::ios::trunc) << j.dump();
  }
  const auto trusting = run(args);
  EXPECT_EQ(trusting.report()["result"]["generators"][0]["element"], "d(-2)");
  auto recheck = args;
  recheck.push_back("--recheck");
  const auto checked = run(recheck);
  EXPECT_EQ(checked.report()["result"], clean.report()["result"]);
  EXPECT_EQ(checked.report()["provenance"]["cache"]["rejected"], 1);
}

TEST(Cli, CacheDirFromEnvironment) {
  TempDir dir;
  ::setenv("MTHV_CACHE_DIR", dir.path().c_str(), 1);
  const auto r = run(kMaxsub25);
  ::unsetenv("MTHV_CACHE_DIR");
  EXPECT_EQ(r.report()["provenance"]["cache"]["stored"], 4);
  EXPECT_TRUE(fs::exists(dir.path()));
}
