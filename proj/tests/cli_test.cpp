#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sunforge/bitfam.hpp"
#include "sunforge/cli/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sunforge::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Minimal structural schema: every listed key is present with the given JSON type.
void expect_schema(const json& j, const std::vector<std::pair<std::string, json::value_t>>& fields) {
  ASSERT_TRUE(j.is_object());
  for (const auto& [key, type] : fields) {
    ASSERT_TRUE(j.contains(key)) << "missing " << key;
    if (type == json::value_t::number_unsigned)
      EXPECT_TRUE(j[key].is_number_integer()) << key;
    else
      EXPECT_EQ(j[key].type(), type) << key;
  }
}

const auto kObj = json::value_t::object;
const auto kStr = json::value_t::string;
const auto kArr = json::value_t::array;
const auto kUint = json::value_t::number_unsigned;
const auto kBool = json::value_t::boolean;
const auto kNull = json::value_t::null;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sunforge_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::setenv("SUNFORGE_CACHE", (dir_ / "cache").c_str(), 1);
  }
  void TearDown() override {
    ::unsetenv("SUNFORGE_CACHE");
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, VerifyCleanFamily) {
  spit(path("clean.txt"), "n=2 q=2\n00\n11\n");
  auto r = run({"verify", path("clean.txt"), "--r", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = r.report();
  expect_schema(j, {{"command", kStr}, {"config", kObj}, {"members", kUint}, {"violation", kNull}});
  EXPECT_EQ(j["members"], 2);
}

TEST_F(CliTest, VerifyFindsFocalTriple) {
  spit(path("bad.txt"), "# three corners\nn=2 q=2\n00\n01\n10\n");
  auto r = run({"verify", path("bad.txt"), "--r", "3", "--kind", "ff", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto j = r.report();
  expect_schema(j, {{"violation", kObj}, {"violation_members", kArr}});
  expect_schema(j["violation"], {{"kind", kStr}, {"indices", kArr}, {"focus", kUint}, {"petals", kArr}});
  EXPECT_EQ(j["violation"]["kind"], "focal");
  EXPECT_EQ(j["violation"]["focus"], 0);
  EXPECT_EQ(j["violation_members"][0], "00");
}

TEST_F(CliTest, VerifyUsageAndParseErrors) {
  spit(path("broken.txt"), "n=3 q=2\n010\n01x\n");
  EXPECT_EQ(run({"verify", path("broken.txt"), "--r", "3"}).code, 2);
  spit(path("dup.txt"), "n=2 q=2\n01\n01\n");
  EXPECT_EQ(run({"verify", path("dup.txt"), "--r", "3"}).code, 2);
  EXPECT_EQ(run({"verify", path("missing.txt"), "--r", "3"}).code, 2);
  spit(path("ok.txt"), "n=2 q=2\n01\n");
  EXPECT_EQ(run({"verify", path("ok.txt")}).code, 2);
  EXPECT_EQ(run({"verify", path("ok.txt"), "--r", "2"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, VerifyCapExceeded) {
  spit(path("cube.txt"), "n=2 q=2\n00\n01\n10\n11\n");
  EXPECT_EQ(run({"verify", path("cube.txt"), "--r", "3", "--cap", "3"}).code, 3);
}

TEST_F(CliTest, ConstructReedSolomonRoundTrips) {
  auto r = run({"construct", "rs", "--q", "5", "--n", "4", "--r", "3", "--out", path("rs.txt"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.report();
  expect_schema(j, {{"command", kStr}, {"members", kUint}, {"degree_bound", kUint}, {"expected_members", kStr},
                    {"verified", kBool}, {"provenance", kStr}});
  EXPECT_EQ(j["members"], 25);
  EXPECT_EQ(j["expected_members"], "25");
  EXPECT_TRUE(j["verified"].get<bool>());

  const std::string text = slurp(path("rs.txt"));
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 26u);  // header plus 25 members
  EXPECT_EQ(sunforge::format_family(sunforge::parse_family(text)), text);

  auto v = run({"verify", path("rs.txt"), "--r", "3", "--kind", "ff", "--format", "json"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(v.report()["violation"].is_null());
  EXPECT_EQ(v.report()["members"], 25);
}

TEST_F(CliTest, ConstructReedSolomonToStdout) {
  auto r = run({"construct", "rs", "--q", "3", "--n", "3", "--r", "4"});
  ASSERT_EQ(r.code, 0);
  auto any = sunforge::parse_family(r.out);
  EXPECT_EQ(std::get<sunforge::QFamily>(any).size(), 9u);
  EXPECT_NE(r.err.find("members"), std::string::npos);
}

TEST_F(CliTest, ConstructReedSolomonPrecondition) {
  EXPECT_EQ(run({"construct", "rs", "--q", "3", "--n", "4", "--r", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "rs", "--q", "6", "--n", "4", "--r", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "lattice", "--n", "4", "--r", "3"}).code, 2);
}

TEST_F(CliTest, ConstructRandomIsDeterministic) {
  const std::vector<std::string> base = {"construct", "random", "--n", "10", "--r", "4", "--kind", "ns", "--seed", "7",
                                         "--format", "json", "--out"};
  auto a_args = base;
  a_args.push_back(path("a.txt"));
  auto b_args = base;
  b_args.push_back(path("b.txt"));
  auto a = run(a_args);
  auto b = run(b_args);
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  ASSERT_TRUE(fs::exists(path("a.txt.trace.json")));
  auto trace = json::parse(slurp(path("a.txt.trace.json")));
  expect_schema(trace, {{"seed", kUint}, {"p_used", json::value_t::number_float}, {"initial_size", kUint},
                        {"removals", kUint}, {"violations_found", kUint}});
  EXPECT_EQ(trace["seed"], 7);

  auto j = a.report();
  expect_schema(j, {{"members", kUint}, {"verified", kBool}, {"expected_size_lower_bound", json::value_t::number_float},
                    {"trace", kObj}, {"trace_file", kStr}});
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["config"]["seed"], 7);

  auto v = run({"verify", path("a.txt"), "--r", "4", "--kind", "ns"});
  EXPECT_EQ(v.code, 0);

  auto c_args = base;
  c_args[9] = "8";
  c_args.push_back(path("c.txt"));
  ASSERT_EQ(run(c_args).code, 0);
  EXPECT_NE(slurp(path("a.txt")), slurp(path("c.txt")));
}

TEST_F(CliTest, BoundsRowsForFourFamilies) {
  auto r = run({"bounds", "--n", "6", "--r", "4", "--q", "5", "--k", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.report();
  expect_schema(j, {{"command", kStr}, {"config", kObj}, {"rows", kArr}});
  bool upper = false, lower_ns = false, lower_ff = false, theorem_k = false;
  for (const auto& row : j["rows"]) {
    expect_schema(row, {{"name", kStr}, {"params", kObj}, {"value", kStr}, {"provenance", kStr}});
    ASSERT_TRUE(row["value_approx"].is_number());
    ASSERT_TRUE(row["rate"].is_number() || row["rate"].is_null());
    const std::string name = row["name"];
    const double v = row["value_approx"];
    if (name == "upper_ff_rate") upper = std::abs(v - std::pow(2.0, 2.0 / 3.0)) < 1e-12;
    if (name == "lower_rate_ns") lower_ns = std::abs(v - std::cbrt(8.0 / 5.0)) < 1e-12;
    if (name == "lower_rate_ff") lower_ff = std::abs(v - std::cbrt(2.0)) < 1e-12;
    if (name == "theorem_k_rate") theorem_k = v > 2.14 && v < 2.148;
  }
  EXPECT_TRUE(upper);
  EXPECT_TRUE(lower_ns);
  EXPECT_TRUE(lower_ff);
  EXPECT_TRUE(theorem_k);
}

TEST_F(CliTest, BoundsTextAndEmptyGrid) {
  auto t = run({"bounds", "--r", "3,4"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("upper_ff_rate"), std::string::npos);

  auto e = run({"bounds", "--format", "json"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(e.report()["rows"].is_array());
  EXPECT_TRUE(e.report()["rows"].empty());
  EXPECT_EQ(run({"bounds", "--r", "x"}).code, 2);
}

TEST_F(CliTest, SearchValuesAndCache) {
  auto a = run({"search", "--n", "2", "--r", "4", "--kind", "ns", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = a.report();
  expect_schema(j, {{"command", kStr}, {"value", kUint}, {"nodes_explored", kUint}, {"witness", kArr}, {"cached", kBool},
                    {"provenance", kStr}});
  EXPECT_EQ(j["value"], 4);
  EXPECT_FALSE(j["cached"].get<bool>());
  EXPECT_TRUE(fs::exists(dir_ / "cache" / "search_cache.json"));

  auto b = run({"search", "--n", "2", "--r", "4", "--kind", "ns", "--format", "json"});
  EXPECT_TRUE(b.report()["cached"].get<bool>());
  EXPECT_EQ(b.report()["value"], 4);
  EXPECT_EQ(b.report()["witness"], j["witness"]);

  auto c = run({"search", "--n", "1", "--r", "3", "--kind", "ff", "--format", "json", "--out", path("w.txt")});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.report()["value"], 2);
  EXPECT_EQ(sunforge::parse_binary_family(slurp(path("w.txt"))).size(), 2u);

  EXPECT_EQ(run({"search", "--n", "9", "--r", "3"}).code, 3);
  EXPECT_EQ(run({"search", "--n", "3", "--r", "3", "--b", "2"}).code, 2);
}

TEST_F(CliTest, SearchOneSided) {
  auto a = run({"search", "--n", "3", "--r", "3", "--kind", "ff", "--b", "1", "--format", "json"});
  auto b = run({"search", "--n", "3", "--r", "3", "--kind", "ff", "--b", "0", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(a.report()["value"], 3);
  EXPECT_EQ(b.report()["value"], 3);
  EXPECT_EQ(a.report()["config"]["kind"], "ff");
  EXPECT_EQ(a.report()["config"]["b"], 1);
}

TEST_F(CliTest, CountReport) {
  auto r = run({"count", "--n", "2", "--r", "3", "--kind", "ff", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.report();
  expect_schema(j, {{"matrix_count_closed_form", kStr}, {"count_bound", kStr}, {"provenance", kStr}});
  EXPECT_EQ(j["matrix_count_closed_form"], "36");
  EXPECT_EQ(j["matrix_count_enumerated"], "36");
  EXPECT_EQ(j["pattern_count"], "4");

  auto big = run({"count", "--n", "12", "--r", "4", "--format", "json"});
  ASSERT_EQ(big.code, 0);
  EXPECT_TRUE(big.report()["pattern_count"].is_null());
}

TEST_F(CliTest, TextFormatIsKeyValue) {
  spit(path("clean.txt"), "n=2 q=2\n00\n11\n");
  auto r = run({"verify", path("clean.txt"), "--r", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("members: 2"), std::string::npos);
}
