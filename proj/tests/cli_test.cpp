#include <gtest/gtest.h>

#include "printers.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lgbridge/cli.hpp"
#include "lgbridge/serialize.hpp"

namespace {

using namespace lgbridge;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("lgbridge_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(counter_++) + ".txt");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliComputeTest, TrefoilAlexander) {
  const auto r = run({"compute", "--braid", "1 1 1", "--strands", "2", "--invariant", "alexander-det"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1 - t + t^2\n");
}

TEST(CliComputeTest, UnknotAllOnes) {
  const auto r = run({"compute", "--braid", "", "--strands", "1", "--invariant", "all", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  const json& inv = doc.at("invariants");
  for (const char* key : {"alexander_det", "alexander_trace", "lg21_special", "lg31_special"})
    EXPECT_EQ(laurent_from_json(inv.at(key)), LaurentHalf(1)) << key;
  EXPECT_EQ(ext_scalar_from_json(inv.at("lg21")), ExtScalar(1));
  const auto text = run({"compute", "--strands", "1"});
  EXPECT_EQ(text.code, kExitOk);
  for (const auto& l : lines(text.out)) EXPECT_EQ(l.substr(l.find(": ") + 2), "1") << l;
}

TEST(CliComputeTest, UsageErrors) {
  EXPECT_EQ(run({"compute", "--braid", "5", "--strands", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--braid", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--braid", "1", "--strands", "2", "--invariant", "jones"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST(CliVerifyTest, MainOnTrefoil) {
  const auto r = run({"verify", "main21", "--braid", "1 1 1", "--strands", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("outcome"), "pass");
  ASSERT_EQ(j.at("units").size(), 1u);
  EXPECT_TRUE(j.at("units")[0].contains("sign"));
}

TEST(CliVerifyTest, UnknownCheckAndCorruption) {
  EXPECT_EQ(run({"verify", "nosuchcheck"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "main21", "--braid", "1 1 1"}).code, kExitUsage);
  const auto bad = run({"verify", "yang_baxter_s31", "--corrupt"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_EQ(json::parse(bad.out).at("outcome"), "fail");
  const auto list = run({"verify", "--list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_NE(list.out.find("main31"), std::string::npos);
}

TEST(CliVerifyTest, SuiteWithSeedSeven) {
  const auto r = run({"verify", "suite", "--seed", "7"});
  std::vector<std::string> failed;
  for (const auto& l : lines(r.out)) {
    const json j = json::parse(l);
    if (j.at("outcome") != "pass") failed.push_back(j.at("name").get<std::string>());
  }
  EXPECT_GT(lines(r.out).size(), 20u);
  EXPECT_TRUE(failed.empty()) << "failing checks: " << ::testing::PrintToString(failed);
  EXPECT_EQ(r.code, kExitOk);
}

TEST(CliBatchTest, ThreeEntries) {
  TempFile table("# name; strands; word\nunknot; 1; \nhopf; 2; 1 1\n\ntrefoil; 2; 1 1 1\n");
  const auto r = run({"batch", "--input", table.path(), "--invariant", "all"});
  EXPECT_EQ(r.code, kExitOk);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_NE(r.err.find("3 ok"), std::string::npos);
  const json trefoil = json::parse(out[2]);
  EXPECT_EQ(trefoil.at("name"), "trefoil");
  EXPECT_FALSE(trefoil.at("invariants").at("units").at("lg21_special_vs_alexander_squared").is_null());
  EXPECT_EQ(laurent_from_json(trefoil.at("invariants").at("alexander_det")),
            LaurentHalf(1) - t_pow(2) + t_pow(4));
}

TEST(CliBatchTest, MalformedLine) {
  TempFile table("hopf; 2; 1 1\nbroken line\ntrefoil; 2; 1 9\n");
  TempFile sink("");
  const auto r = run({"batch", "--input", table.path(), "--output", sink.path(), "--invariant", "alexander-det"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("1 ok, 2 failed"), std::string::npos);
  std::ifstream in(sink.path());
  std::stringstream ss;
  ss << in.rdbuf();
  const auto out = lines(ss.str());
  ASSERT_EQ(out.size(), 3u);
  const json err = json::parse(out[1]);
  EXPECT_EQ(err.at("line"), 2);
  EXPECT_EQ(err.at("input"), "broken line");
  EXPECT_TRUE(err.contains("error"));
  EXPECT_TRUE(json::parse(out[2]).contains("error"));
}

TEST(CliBatchTest, MissingInput) {
  EXPECT_EQ(run({"batch", "--input", "/nonexistent/table.txt"}).code, kExitUsage);
}

TEST(TableLineTest, Parse) {
  EXPECT_FALSE(parse_table_line("   "));
  EXPECT_FALSE(parse_table_line("# comment"));
  const auto e = parse_table_line(" fig8 ; 3 ; 1 -2 1 -2 ");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->name, "fig8");
  EXPECT_EQ(e->braid, parse_braid("1 -2 1 -2", 3));
  EXPECT_THROW(parse_table_line("a; b; 1"), std::invalid_argument);
  EXPECT_THROW(parse_table_line("a; 2"), std::invalid_argument);
}

TEST(JsonTest, PolynomialRoundTrip) {
  const LaurentHalf p = t_pow(-3, Rational(2, 3)) + LaurentHalf(1) - t_pow(4);
  EXPECT_EQ(laurent_from_json(to_json(p)), p);
  const json j = to_json(t_pow(1, -1));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("numerator"), -1);
  EXPECT_EQ(j[0].at("denominator"), 1);
  EXPECT_EQ(j[0].at("half_exp_t0"), 1);
  EXPECT_EQ(j[0].at("half_exp_t1"), 0);
  EXPECT_EQ(j[0].at("y_degree"), 0);

  const ExtScalar e(t2_pow(1, -3, 5), t2_pow(0, 2, -1));
  EXPECT_EQ(ext_scalar_from_json(to_json(e)), e);
  EXPECT_THROW(laurent_from_json(to_json(e)), std::invalid_argument);

  const Rational huge(mpq_class("123456789012345678901234567890/7"));
  const LaurentHalf big(huge);
  const json jb = to_json(big);
  EXPECT_TRUE(jb[0].at("numerator").is_string());
  EXPECT_EQ(laurent_from_json(jb), big);
  EXPECT_THROW(laurent_from_json(json::parse(R"([{"numerator": "x"}])")), std::invalid_argument);
}

}  // namespace
