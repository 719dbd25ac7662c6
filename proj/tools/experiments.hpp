#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holo/automorphism.hpp"
#include "holo/error.hpp"
#include "holo/group.hpp"
#include "holo/holomorph.hpp"
#include "holo/presentation.hpp"

namespace holo::exp {

/// auto picks generic when Aut(G) can be materialised, delta otherwise.
enum class Strategy { Auto, Generic, Delta, Both };

Strategy parse_strategy(const std::string &s);
std::string to_string(Strategy s);

struct RunConfig {
  std::string preset = "gp";
  /// Presentation file; overrides the preset when set.
  std::string file;
  unsigned p = 3;
  unsigned rank = 2;
  std::vector<unsigned> factors;
  Strategy strategy = Strategy::Auto;
  std::size_t order_cap = 3000;
  std::uint64_t budget = 100'000'000;
  std::string cache_dir;
  std::string out;
  /// Include the heavier p = 7 grid points in the reproduction suites.
  bool with_p7 = false;

  /// Throws InvalidArgument.
  void validate() const;
};

ClassTwoPresentation presentation_for(const RunConfig &cfg);

/// Aut(G) from `<dir>/aut-<table hash>.json` when present and valid,
/// otherwise computed and written back. A corrupt cache entry is reported
/// on `warn` and recomputed. An empty dir disables caching.
AutomorphismGroup load_or_compute_aut(const Group &G, const std::string &dir,
                                      std::uint64_t budget, std::ostream &warn,
                                      bool *hit = nullptr);

void cache_aut(const AutomorphismGroup &A, const std::string &dir);

/// Throws CacheCorrupt when the file does not describe Aut(G).
AutomorphismGroup load_aut(const Group &G, const std::string &path, std::uint64_t budget);

std::string cache_path(const Group &G, const std::string &dir);

/// The gammas of J(G) by the chosen strategy; Both throws MismatchFound
/// when the two enumerations differ.
std::vector<GammaMap> gammas_for(const Group &G, const AutomorphismGroup &A, Strategy s,
                                 std::uint64_t budget);

/// Resolves Auto.
Strategy effective(Strategy s, const AutomorphismGroup &A);

nlohmann::json cmd_build(const RunConfig &cfg, std::ostream &warn);
nlohmann::json cmd_jc(const RunConfig &cfg, std::ostream &warn);
nlohmann::json cmd_hc(const RunConfig &cfg, std::ostream &warn);
nlohmann::json cmd_tgroup(const RunConfig &cfg, std::ostream &warn);

struct ReproReport {
  std::string suite;
  std::string check;
  std::string claim;
  nlohmann::json expected;
  nlohmann::json computed;
  bool match = false;
  double seconds = 0;
};

nlohmann::json to_json(const ReproReport &r);

const std::vector<std::string> &suite_names();

/// Versioned table of expected values, each with the claim it encodes.
const nlohmann::json &manifest();

/// Runs one suite over its fixed grid. Unknown suite: InvalidArgument.
std::vector<ReproReport> run_suite(const std::string &suite, const RunConfig &cfg,
                                   std::ostream &warn);

/// Exit status per error family.
int exit_code(ErrorKind kind) noexcept;

} // namespace holo::exp
