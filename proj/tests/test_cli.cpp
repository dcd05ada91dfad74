#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lazard/cli.hpp"

using namespace lazard;

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

std::string sample(const char* name) { return std::string(LAZARD_SAMPLES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lazard_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST(Cli, Witt) {
  const auto r = run({"witt", "--multidegree", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run({"witt", "--multidegree", "2,x"}).code, 2);
}

TEST(Cli, Lyndon) {
  const auto r = run({"lyndon", "--letters", "2", "--max-degree", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a\ta\naab\t[a,[a,b]]\nab\t[a,b]\nabb\t[[a,b],b]\nb\tb\n");
  const auto j = run({"--format", "json", "lyndon", "--letters", "2", "--max-degree", "4",
                      "--multidegree", "2,2"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["words"][0]["bracketing"], "[a,[[a,b],b]]");
}

TEST(Cli, Dims) {
  const auto r = run({"--format", "json", "dims", "--presentation", sample("sl2half.json"),
                      "--max-degree", "4"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alphabet"], (nlohmann::json{"a", "b"}));
}

TEST(Cli, EliminateVerify) {
  for (const char* f : {"sl2half.json", "commuting_pair.json"}) {
    const auto r = run({"eliminate", "--presentation", sample(f), "--max-degree", "6", "--verify"});
    EXPECT_EQ(r.code, 0) << f << r.err;
    EXPECT_EQ(r.out.find("\tno\n"), std::string::npos);
  }
  const auto j = run({"--format", "json", "eliminate", "--presentation", sample("sl2half.json"),
                      "--max-degree", "5", "--verify"});
  EXPECT_TRUE(nlohmann::json::parse(j.out)["mismatches"].empty());
}

TEST(Cli, GkmSl3) {
  const auto r = run({"--format", "json", "gkm", "--matrix", sample("sl3.json"), "--auto-split",
                      "--max-height", "5", "--method", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tables"][0]["roots"].size(), 3u);
  EXPECT_TRUE(j["mismatches"].empty());
}

TEST(Cli, GkmBorcherdsSplitFromFile) {
  const auto r = run({"gkm", "--matrix", sample("borcherds_rank2.json"), "--split-from-file",
                      "--max-height", "6", "--method", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1,5\t1\tboth"), std::string::npos);
}

TEST(Cli, InvalidSplitIsAnInputError) {
  const auto r = run({"gkm", "--matrix", sample("sl3_bad_split.json"), "--split-from-file"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("W-degree 2"), std::string::npos);
  EXPECT_NE(r.err.find("Split conditions"), std::string::npos);
}

TEST(Cli, MalformedInputs) {
  const auto broken = temp_file("broken.json", "{\"generators\": [");
  EXPECT_EQ(run({"dims", "--presentation", broken}).code, 2);
  const auto wrong = temp_file("wrong.json", R"({"generators": [{"name": "a", "part": "Q"}]})");
  const auto r = run({"dims", "--presentation", wrong});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("generators[0].part"), std::string::npos);
  EXPECT_EQ(run({"dims", "--presentation", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gkm", "--matrix", sample("sl3.json"), "--method", "guess"}).code, 2);
  EXPECT_EQ(run({"fpc", "--graph", sample("one_edge.json"), "--max-degree", "99"}).code, 2);
}

TEST(Cli, Fpc) {
  const auto r = run({"fpc", "--graph", sample("one_edge.json"), "--max-degree", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("# mismatch"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"--format", "json", "eliminate", "--presentation",
                                      sample("commuting_pair.json"), "--max-degree", "5",
                                      "--verify"};
  EXPECT_EQ(run(args).out, run(args).out);
}
