#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cext/cli/commands.hpp"
#include "cext/error.hpp"

using namespace cext;
using namespace cext::cli;

namespace {

const std::filesystem::path kData = CEXT_DATA_DIR;

RunConfig config(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  return cfg;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(CEXT_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> fingerprint_texts(const Report& r) {
  std::vector<std::string> out;
  for (const auto& c : r.results()["classes"]) out.push_back(c["extension_fingerprint"]["text"]);
  return out;
}

}  // namespace

TEST(Config, ParseGrid) {
  EXPECT_EQ(parse_grid("64x32"), (std::pair<std::size_t, std::size_t>{64, 32}));
  EXPECT_EQ(parse_grid("8×8"), (std::pair<std::size_t, std::size_t>{8, 8}));
  EXPECT_THROW(parse_grid("64"), ArgumentError);
  EXPECT_THROW(parse_grid("ax4"), ArgumentError);
}

TEST(Config, ToleranceOverride) {
  RunConfig cfg;
  add_tolerance_override(cfg, "delta_alpha=1e-8");
  EXPECT_EQ(cfg.tolerance("delta_alpha", 1e-9), 1e-8);
  EXPECT_EQ(cfg.tolerance("other", 2.0), 2.0);
  EXPECT_THROW(add_tolerance_override(cfg, "x"), ArgumentError);
  EXPECT_THROW(add_tolerance_override(cfg, "x=abc"), ArgumentError);
}

TEST(Report, VerdictFollowsResidualAndTolerance) {
  Report r(config("verify"));
  r.add_check("a", 1e-12, 1e-11);
  EXPECT_TRUE(r.passed());
  r.add_check("b", 2.0, 1.0);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), ExitCode::kCheckFailed);
  const auto j = r.to_json();
  EXPECT_EQ(j["checks"][0]["verdict"], "pass");
  EXPECT_EQ(j["checks"][1]["verdict"], "fail");
  EXPECT_EQ(j["passed"], false);
}

TEST(Report, Sha256OfKnownFile) {
  const auto p = std::filesystem::temp_directory_path() / "cext_sha_test.txt";
  std::ofstream(p) << "abc";
  EXPECT_EQ(sha256_file(p), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  std::filesystem::remove(p);
}

TEST(H2, Z2ModTwo) {
  auto cfg = config("h2");
  cfg.group = (kData / "z2.table").string();
  const auto r = cmd_h2(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results()["counts"]["H2"], 2);
  const auto prints = fingerprint_texts(r);
  const std::set<std::string> distinct(prints.begin(), prints.end());
  EXPECT_EQ(distinct.size(), 2u);
  EXPECT_TRUE(r.find_check("oracle_partition") != nullptr);
  EXPECT_EQ(r.to_json()["inputs"].size(), 1u);
}

TEST(H2, TrivialCoefficients) {
  auto cfg = config("h2");
  cfg.group = "S3";
  cfg.modulus = 1;
  const auto r = cmd_h2(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results()["counts"]["H2"], 1);
}

TEST(Classify, Z2xZ2HasOneQ8AndSomeD4) {
  auto cfg = config("classify");
  cfg.group = (kData / "z2xz2.table").string();
  const auto r = cmd_classify(cfg);
  EXPECT_TRUE(r.passed());
  int q8 = 0, d4 = 0;
  for (const auto& g : r.results()["by_fingerprint"]) {
    const auto& orders = g["fingerprint"]["order_multiset"];
    const auto size = g["classes"].size();
    if (orders == Json({1, 2, 4, 4, 4, 4, 4, 4})) q8 += static_cast<int>(size);
    if (orders == Json({1, 2, 2, 2, 2, 2, 4, 4})) d4 += static_cast<int>(size);
  }
  EXPECT_EQ(q8, 1);
  EXPECT_GE(d4, 1);
}

TEST(Extend, ZeroCochainOverZ3) {
  auto cfg = config("extend");
  cfg.group = (kData / "z3.table").string();
  cfg.cochain = kData / "z3_zero_mod3.cochain";
  const auto r = cmd_extend(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results()["extension"]["fingerprint"]["order_multiset"], Json({1, 3, 3, 3, 3, 3, 3, 3, 3}));
}

TEST(Extend, CarryCocycleGivesZ9) {
  auto cfg = config("extend");
  cfg.group = (kData / "z3.table").string();
  cfg.cochain = kData / "z3_carry_mod3.cochain";
  const auto r = cmd_extend(cfg);
  EXPECT_TRUE(r.passed());
  const auto orders = r.results()["extension"]["fingerprint"]["order_multiset"];
  EXPECT_EQ(orders.back(), 9);
  EXPECT_EQ(r.results()["extension"]["table"].size(), 9u);
  EXPECT_EQ(r.to_json()["inputs"].size(), 2u);
}

TEST(Extend, NonCocycleReportsTriple) {
  auto cfg = config("extend");
  cfg.group = (kData / "z3.table").string();
  cfg.cochain = kData / "z3_not_cocycle_mod3.cochain";
  const auto r = cmd_extend(cfg);
  EXPECT_FALSE(r.passed());
  const auto& v = r.results()["violation"];
  EXPECT_NE(v["delta_c"], 0);
  EXPECT_EQ(r.results()["extension"]["triple"], Json({v["g"], v["h"], v["k"]}));
}

TEST(Extend, WrongDegreeOrModulus) {
  auto cfg = config("extend");
  cfg.group = (kData / "z2.table").string();
  cfg.cochain = kData / "z3_zero_mod3.cochain";
  EXPECT_THROW(cmd_extend(cfg), InputError);
  cfg.cochain = kData / "z2_z4_mod2.cochain";
  cfg.modulus = 3;
  cfg.modulus_given = true;
  EXPECT_THROW(cmd_extend(cfg), ArgumentError);
}

TEST(Verify, ShortRunPasses) {
  auto cfg = config("verify");
  cfg.trials = 5;
  const auto r = cmd_verify(cfg);
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(r.checks().size(), 10u);
}

TEST(Verify, ZeroTrialsIsVacuous) {
  auto cfg = config("verify");
  cfg.trials = 0;
  const auto r = cmd_verify(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.checks().empty());
}

TEST(Verify, NegatedAlphaFails) {
  auto cfg = config("verify");
  cfg.trials = 3;
  cfg.negate_alpha = true;
  const auto r = cmd_verify(cfg);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find_check("delta_R_equals_d_alpha")->passed());
  EXPECT_TRUE(r.find_check("delta_alpha")->passed());
}

TEST(Verify, ToleranceOverrideIsRecorded) {
  auto cfg = config("verify");
  cfg.trials = 2;
  cfg.tolerances["dR_closed"] = 1e-30;
  const auto r = cmd_verify(cfg);
  EXPECT_EQ(r.find_check("dR_closed")->tolerance, 1e-30);
  EXPECT_FALSE(r.passed());
}

TEST(Verify, LoopFileIngestion) {
  auto cfg = config("verify");
  cfg.trials = 2;
  cfg.loop = kData / "su2_loop_n128.loop";
  const auto r = cmd_verify(cfg);
  EXPECT_TRUE(r.passed()) << r.summary();
  cfg.samples = 64;
  EXPECT_THROW(cmd_verify(cfg), InputError);
}

TEST(Verify, ParameterGuards) {
  auto cfg = config("verify");
  cfg.samples = 100;
  EXPECT_THROW(cmd_verify(cfg), ArgumentError);
  cfg.samples = 128;
  cfg.step = 1.0;
  EXPECT_THROW(cmd_verify(cfg), ArgumentError);
  cfg.step = 1e-3;
  cfg.modes = 17;
  EXPECT_THROW(cmd_verify(cfg), ArgumentError);
}

TEST(PeriodCommand, DegenerateIsZero) {
  auto cfg = config("period");
  cfg.degenerate = true;
  cfg.grid_u = cfg.grid_phi = 8;
  const auto r = cmd_period(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results()["grids"][0]["integral"], 0.0);
}

TEST(PeriodCommand, ReversedNegatesIntegers) {
  auto cfg = config("period");
  cfg.grid_u = cfg.grid_phi = 16;
  const auto fwd = cmd_period(cfg);
  cfg.reverse_orientation = true;
  const auto rev = cmd_period(cfg);
  const auto k = fwd.results()["grids"][0]["integral_nearest_integer"].get<double>();
  EXPECT_EQ(k, -2.0);
  EXPECT_EQ(rev.results()["grids"][0]["integral_nearest_integer"].get<double>(), -k);
  EXPECT_TRUE(fwd.find_check("integral_R_integer")->passed());
}

TEST(PeriodCommand, OnlySU2) {
  auto cfg = config("period");
  cfg.dim = 3;
  EXPECT_THROW(cmd_period(cfg), ArgumentError);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("h2 --group Z2 --modulus 2"), 0);
  EXPECT_EQ(run_binary("verify --trials 0"), 0);
  EXPECT_EQ(run_binary("verify --trials 2 --negate-alpha"), 1);
  EXPECT_EQ(run_binary("extend --group " + (kData / "z3.table").string() + " --cochain " +
                       (kData / "z3_not_cocycle_mod3.cochain").string()),
            1);
  EXPECT_EQ(run_binary("h2 --group does-not-exist"), 2);
  EXPECT_EQ(run_binary("h2 --group " + (kData / "broken.table").string()), 2);
  EXPECT_EQ(run_binary("period --dim 3"), 2);
  EXPECT_EQ(run_binary("verify --bogus"), 2);
  EXPECT_EQ(run_binary("h2 --group Z40 --modulus 2"), 3);
  EXPECT_EQ(run_binary("h2 --group Z2 --modulus 9"), 3);
}

TEST(Binary, ReportsAreByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "cext_det_a.json", b = dir / "cext_det_b.json";
  ASSERT_EQ(run_binary("verify --trials 3 --seed 9 --out " + a.string()), 0);
  ASSERT_EQ(run_binary("verify --trials 3 --seed 9 --out " + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
