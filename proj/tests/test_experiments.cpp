#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "experiments.hpp"

using namespace holo;
using namespace holo::exp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir()
  {
    path = fs::temp_directory_path() /
           ("holo-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST(Cache, HitAfterFirstRun)
{
  TempDir dir;
  Group G = build_group(preset_gp(3));
  std::ostringstream warn;
  bool hit = true;
  auto A1 = load_or_compute_aut(G, dir.path.string(), 100'000'000, warn, &hit);
  EXPECT_FALSE(hit);
  auto A2 = load_or_compute_aut(G, dir.path.string(), 100'000'000, warn, &hit);
  EXPECT_TRUE(hit);
  EXPECT_EQ(A1.order(), A2.order());
  EXPECT_EQ(A1.elements(), A2.elements());
  EXPECT_TRUE(warn.str().empty());
}

TEST(Cache, CorruptEntryIsRecomputed)
{
  TempDir dir;
  Group G = build_group(preset_hp(3));
  std::ostringstream warn;
  auto A = load_or_compute_aut(G, dir.path.string(), 100'000'000, warn);
  std::string path = cache_path(G, dir.path.string());
  ASSERT_TRUE(fs::exists(path));
  EXPECT_THROW(load_aut(build_group(preset_gp(3)), path, 100'000'000), Error);

  std::ofstream(path) << "{\"order\": 27, \"garbage\"";
  EXPECT_THROW(load_aut(G, path, 100'000'000), Error);
  bool hit = true;
  auto B = load_or_compute_aut(G, dir.path.string(), 100'000'000, warn, &hit);
  EXPECT_FALSE(hit);
  EXPECT_EQ(B.order(), A.order());
  EXPECT_NE(warn.str().find("warning"), std::string::npos);
  // the rewritten entry is valid again
  EXPECT_EQ(load_aut(G, path, 100'000'000).order(), A.order());
}

TEST(Cache, NonAutomorphismGeneratorsRejected)
{
  TempDir dir;
  Group G = build_group(preset_hp(3));
  std::ostringstream warn;
  load_or_compute_aut(G, dir.path.string(), 100'000'000, warn);
  std::string path = cache_path(G, dir.path.string());
  nlohmann::json j;
  std::ifstream(path) >> j;
  auto &img = j["generators"][0];
  std::swap(img[1], img[2]);
  std::ofstream(path) << j.dump();
  try {
    load_aut(G, path, 100'000'000);
    FAIL() << "accepted a corrupt generator";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::CacheCorrupt);
  }
}

TEST(Cache, KeysDoNotCollide)
{
  std::set<std::string> paths;
  for (auto const &pres : {preset_gp(3), preset_hp(3), preset_free(3, 2), preset_abelian({9}),
                           preset_abelian({27}), preset_abelian({3, 3})})
    paths.insert(cache_path(build_group(pres), "/cache"));
  EXPECT_EQ(paths.size(), 6u);
}

TEST(Strategies, AgreeOnPresets)
{
  for (auto const &pres : {preset_gp(3), preset_hp(5), preset_free(3, 2)}) {
    Group G = build_group(pres);
    auto A = automorphism_group(G);
    EXPECT_EQ(effective(Strategy::Auto, A), Strategy::Generic);
    auto both = gammas_for(G, A, Strategy::Both, 100'000'000);
    auto delta = gammas_for(G, A, Strategy::Delta, 100'000'000);
    EXPECT_EQ(both.size(), delta.size());
  }
  EXPECT_EQ(parse_strategy("both"), Strategy::Both);
  EXPECT_THROW(parse_strategy("fast"), Error);
}

TEST(Commands, DeterministicJson)
{
  RunConfig cfg;
  cfg.preset = "hp";
  cfg.p = 5;
  std::ostringstream warn;
  auto a = cmd_tgroup(cfg, warn).dump();
  auto b = cmd_tgroup(cfg, warn).dump();
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["report"]["order"], 4);
  EXPECT_EQ(j["j_count"], 5);
  EXPECT_EQ(cmd_jc(cfg, warn).dump(), cmd_jc(cfg, warn).dump());
}

TEST(Commands, HcCountsAndBuild)
{
  RunConfig cfg;
  cfg.p = 3;
  std::ostringstream warn;
  EXPECT_EQ(cmd_hc(cfg, warn)["count"], 6);
  EXPECT_EQ(cmd_jc(cfg, warn)["count"], 9);
  auto b = cmd_build(cfg, warn);
  EXPECT_EQ(b["order"], 81);
  EXPECT_EQ(b["center_order"], 9);
  EXPECT_EQ(b["derived_order"], 3);
}

TEST(Commands, PresentationFile)
{
  TempDir dir;
  auto path = (dir.path / "hp3.json").string();
  std::ofstream(path) << to_json(preset_hp(3)).dump();
  RunConfig cfg;
  cfg.file = path;
  std::ostringstream warn;
  auto j = cmd_tgroup(cfg, warn);
  EXPECT_EQ(j["order"], 27);
  EXPECT_EQ(j["report"]["order"], 2);

  std::ofstream(path) << "{\"p\": 3, \"orders\": [9, 6]}";
  try {
    cmd_build(cfg, warn);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(exit_code(e.kind()), 5);
  }
}

TEST(Commands, Errors)
{
  RunConfig cfg;
  std::ostringstream warn;
  cfg.p = 9;
  EXPECT_THROW(cmd_build(cfg, warn), Error);
  cfg.p = 7;
  cfg.order_cap = 100;
  try {
    cmd_build(cfg, warn);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
  cfg = RunConfig{};
  cfg.preset = "dihedral";
  EXPECT_THROW(cmd_build(cfg, warn), Error);
  EXPECT_THROW(run_suite("nope", RunConfig{}, warn), Error);
}

TEST(ExitCodes, DistinctPerFamily)
{
  EXPECT_EQ(exit_code(ErrorKind::OrderCapExceeded), 3);
  EXPECT_EQ(exit_code(ErrorKind::SearchBudgetExceeded), 4);
  EXPECT_EQ(exit_code(ErrorKind::NotAGroup), exit_code(ErrorKind::InconsistentPresentation));
  EXPECT_EQ(exit_code(ErrorKind::MismatchFound), 6);
  EXPECT_EQ(exit_code(ErrorKind::CacheCorrupt), 8);
  EXPECT_EQ(exit_code(ErrorKind::NoIsomorphism), 9);
}

TEST(Manifest, EveryCheckHasClaimAndValue)
{
  auto const &m = manifest();
  EXPECT_EQ(m["version"], 1);
  for (auto const &[id, entry] : m["checks"].items()) {
    EXPECT_TRUE(entry.contains("expected")) << id;
    EXPECT_FALSE(entry.value("claim", "").empty()) << id;
  }
}

TEST(Repro, AbelianSuiteMatches)
{
  std::ostringstream warn;
  auto reports = run_suite("abelian", RunConfig{}, warn);
  ASSERT_EQ(reports.size(), 4u);
  for (auto const &r : reports)
    EXPECT_TRUE(r.match) << r.check;
  EXPECT_EQ(to_json(reports[0])["check"], "abelian.c9.T_order");
}
