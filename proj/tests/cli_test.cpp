#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "baryassoc/text.hpp"
#include "cli.hpp"

using baryassoc::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("baryassoc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, CheckOkAndNegative) {
  const auto good = write("good.fam", "ring rat\nF1 = x1\nF2 = 1/2*x1 + 1/2*x2\nF3 = 1/3*x1 + 1/3*x2 + 1/3*x3\n");
  const auto r = call({"check", good});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("B-associative up to arity 3"), std::string::npos);

  const auto bad = write("bad.fam", "ring int\nF1 = x1\nF2 = x1*x2\nF3 = x1*x2*x3\n");
  const auto n = call({"check", bad, "--json"});
  EXPECT_EQ(n.code, 1);
  const auto j = json::parse(n.out);
  EXPECT_EQ(j["status"], "not_b_associative");
  EXPECT_EQ(j["witness"]["arity"], 2);
  EXPECT_EQ(j["witness"]["split"], json({0, 2, 0}));
  EXPECT_EQ(j["command"], "check");
  EXPECT_TRUE(j.contains("timing_ms"));
}

TEST_F(CliTest, ClassifyJson) {
  const auto f = write("z2.fam", "ring int\nF1 = x1\nF2 = 2*x1 - x2\nF3 = 5\nF4 = 7\n");
  const auto r = call({"classify", f, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["case"], "i");
  EXPECT_EQ(j["z"], "2");
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["tail"], json({"5", "7"}));
}

TEST_F(CliTest, ClassifySymmetric) {
  const auto f = write("s.fam", "ring rat\nF1 = x1\nF2 = 1/2*x1 + 1/2*x2 + x1^2 - 2*x1*x2 + x2^2\nF3 = 0\n");
  const auto j = json::parse(call({"classify", f, "--symmetric", "--json"}).out);
  EXPECT_EQ(j["symmetric"], "ii_antisym");
  EXPECT_EQ(j["Q"], "x1 - x2");
}

TEST_F(CliTest, ConstructThenClassifyRoundTrip) {
  const auto path = (dir_ / "mz.fam").string();
  const auto c = call({"construct", "mz", "--ring", "gaussrat", "--z", "1/2-1/2i", "--max-arity", "5",
                       "--tail", "1,i", "-o", path});
  ASSERT_EQ(c.code, 0) << c.err;
  const auto j = json::parse(call({"classify", path, "--json"}).out);
  EXPECT_EQ(j["case"], "i");
  EXPECT_EQ(j["z"], "1/2-1/2i");
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["tail"], json({"1", "i"}));

  const auto ii = call({"construct", "ii", "--ring", "int", "--q", "x1*x2", "--max-arity", "3", "--tail", "4"});
  ASSERT_EQ(ii.code, 0) << ii.err;
  const auto fam = baryassoc::parse_family(ii.out);
  EXPECT_EQ(fam.max_arity(), 3U);
  const auto iip = write("ii.fam", ii.out);
  const auto k = json::parse(call({"classify", iip, "--json"}).out);
  EXPECT_EQ(k["case"], "ii");
  EXPECT_EQ(k["Q"], "x1*x2");
}

TEST_F(CliTest, DeltaAndNz) {
  EXPECT_EQ(call({"delta", "--ring", "gaussrat", "--z", "1/2-1/2i", "--n", "4"}).out, "0\n");
  EXPECT_EQ(call({"delta", "--ring", "int", "--z", "2", "--n", "3"}).out, "3\n");
  EXPECT_EQ(call({"nz", "--ring", "int", "--z", "2"}).out, "3\n");
  EXPECT_EQ(call({"nz", "--ring", "int", "--z", "0"}).out, ">64\n");
  EXPECT_EQ(call({"nz", "--ring", "rat", "--z", "1/2", "--bound", "10"}).out, ">10\n");
}

TEST_F(CliTest, SearchJson) {
  const auto cfg = write("cfg.json", R"({"ring": "int", "max_arity": 2, "max_total_degree": 1,
      "coefficient_pool": ["-1", "0", "1", "2"]})");
  const auto r = call({"search", "--config", cfg, "--jobs", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["total_enumerated"], 1024);
  EXPECT_EQ(j["b_associative_count"], 24);
  EXPECT_TRUE(j["mismatches"].empty());
}

TEST_F(CliTest, Lemma3) {
  const auto f = write("m.fam", "ring rat\nF1 = x1\nF2 = 1/2*x1 + 1/2*x2\nF3 = 1/3*x1 + 1/3*x2 + 1/3*x3\n");
  const auto r = call({"lemma3", f, "--n", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["P"], "2/3*x1 + 1/3*x2");
  const auto bad = write("b.fam", "ring rat\nF1 = x1\nF2 = 1/2*x1 + 1/2*x2\nF3 = x1 + x2 - x3\n");
  EXPECT_EQ(call({"lemma3", bad, "--n", "2"}).code, 1);
  EXPECT_EQ(call({"lemma3", f, "--n", "3"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"check"}).code, 2);
  EXPECT_EQ(call({"check", (dir_ / "missing.fam").string()}).code, 2);
  const auto bad = write("p.fam", "ring int\nF1 = 2x1\n");
  const auto r = call({"check", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_EQ(call({"nz", "--ring", "int", "--z", "1/2"}).code, 2);
  EXPECT_EQ(call({"delta", "--ring", "reals", "--z", "1", "--n", "2"}).code, 2);
  EXPECT_EQ(call({"construct", "ii", "--ring", "rat", "--q", "3", "--max-arity", "2"}).code, 2);
}
