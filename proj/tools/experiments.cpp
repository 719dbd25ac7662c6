#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "holo/delta.hpp"
#include "holo/isomorphism.hpp"
#include "holo/tgroup.hpp"
#include "manifest_data.hpp"

namespace holo::exp {

namespace fs = std::filesystem;

Strategy parse_strategy(const std::string &s)
{
  if (s == "auto")
    return Strategy::Auto;
  if (s == "generic")
    return Strategy::Generic;
  if (s == "delta")
    return Strategy::Delta;
  if (s == "both")
    return Strategy::Both;
  raise(ErrorKind::InvalidArgument, "unknown strategy '" + s + "'");
}

std::string to_string(Strategy s)
{
  switch (s) {
  case Strategy::Auto: return "auto";
  case Strategy::Generic: return "generic";
  case Strategy::Delta: return "delta";
  case Strategy::Both: return "both";
  }
  return "?";
}

void RunConfig::validate() const
{
  if (file.empty() && preset != "abelian" && (p % 2 == 0 || !is_prime(p)))
    raise(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (order_cap == 0 || budget == 0)
    raise(ErrorKind::InvalidArgument, "caps must be positive");
}

ClassTwoPresentation presentation_for(const RunConfig &cfg)
{
  cfg.validate();
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in)
      raise(ErrorKind::InvalidArgument, "cannot read " + cfg.file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception &e) {
      raise(ErrorKind::InconsistentPresentation, std::string("bad presentation file: ") + e.what());
    }
    auto pres = presentation_from_json(j);
    if (pres.declared_order() > cfg.order_cap)
      raise(ErrorKind::OrderCapExceeded, "declared order above the cap");
    return pres;
  }
  return preset(cfg.preset, cfg.p, PresetParams{cfg.rank, cfg.factors}, cfg.order_cap);
}

namespace {

std::string hex(std::uint64_t v)
{
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

Group build(const RunConfig &cfg)
{
  return build_group(presentation_for(cfg), BuildOptions{cfg.order_cap});
}

} // namespace

std::string cache_path(const Group &G, const std::string &dir)
{
  return (fs::path(dir) / ("aut-" + hex(G.table_hash()) + "-" + std::to_string(G.order()) + ".json"))
    .string();
}

void cache_aut(const AutomorphismGroup &A, const std::string &dir)
{
  const Group &G = A.group();
  nlohmann::json j{{"order", G.order()},
                   {"table_hash", hex(G.table_hash())},
                   {"aut_order", A.order()}};
  nlohmann::json gens = nlohmann::json::array();
  for (auto const &g : A.generators())
    gens.push_back(std::vector<Elem>(g.images().begin(), g.images().end()));
  j["generators"] = std::move(gens);
  fs::create_directories(dir);
  std::string path = cache_path(G, dir);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  fs::rename(tmp, path);
}

AutomorphismGroup load_aut(const Group &G, const std::string &path, std::uint64_t budget)
{
  std::ifstream in(path);
  if (!in)
    raise(ErrorKind::CacheCorrupt, "cannot read " + path);
  nlohmann::json j;
  std::vector<Automorphism> gens;
  std::uint64_t aut_order = 0;
  try {
    in >> j;
    if (j.at("order").get<std::size_t>() != G.order() ||
        j.at("table_hash").get<std::string>() != hex(G.table_hash()))
      raise(ErrorKind::CacheCorrupt, "cache entry belongs to another group");
    aut_order = j.at("aut_order").get<std::uint64_t>();
    for (auto const &g : j.at("generators")) {
      auto images = g.get<std::vector<Elem>>();
      if (images.size() != G.order() ||
          std::any_of(images.begin(), images.end(), [&](Elem e) { return e >= G.order(); }))
        raise(ErrorKind::CacheCorrupt, "generator has the wrong degree");
      gens.emplace_back(std::move(images));
    }
  } catch (const nlohmann::json::exception &e) {
    raise(ErrorKind::CacheCorrupt, std::string("unreadable cache entry: ") + e.what());
  }
  AutSearchOptions opt;
  opt.node_budget = budget;
  auto A = automorphism_group_from_generators(G, std::move(gens), opt);
  if (A.order() != aut_order)
    raise(ErrorKind::CacheCorrupt, "cached generators do not give the recorded |Aut(G)|");
  return A;
}

AutomorphismGroup load_or_compute_aut(const Group &G, const std::string &dir, std::uint64_t budget,
                                      std::ostream &warn, bool *hit)
{
  if (hit)
    *hit = false;
  AutSearchOptions opt;
  opt.node_budget = budget;
  if (dir.empty())
    return automorphism_group(G, opt);
  std::string path = cache_path(G, dir);
  if (fs::exists(path)) {
    try {
      auto A = load_aut(G, path, budget);
      if (hit)
        *hit = true;
      return A;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::CacheCorrupt)
        throw;
      warn << "warning: ignoring cache entry " << path << ": " << e.what() << "\n";
    }
  }
  auto A = automorphism_group(G, opt);
  cache_aut(A, dir);
  return A;
}

Strategy effective(Strategy s, const AutomorphismGroup &A)
{
  if (s != Strategy::Auto)
    return s;
  return A.can_materialize() ? Strategy::Generic : Strategy::Delta;
}

namespace {

std::vector<GammaMap> delta_gammas(const Group &G, const AutomorphismGroup &A)
{
  DeltaOptions opt;
  opt.report_cap = 1'000'000;
  auto space = enumerate_deltas(G, A, opt);
  if (space.elements.size() != space.count)
    raise(ErrorKind::SearchBudgetExceeded, "too many Delta solutions to list");
  std::vector<GammaMap> out;
  for (auto const &d : space.elements)
    out.push_back(gamma_from_delta(G, d));
  return out;
}

} // namespace

std::vector<GammaMap> gammas_for(const Group &G, const AutomorphismGroup &A, Strategy s,
                                 std::uint64_t budget)
{
  EnumOptions opt;
  opt.node_budget = budget;
  switch (effective(s, A)) {
  case Strategy::Generic:
    return enumerate_gammas_generic(G, A, opt);
  case Strategy::Delta:
    return delta_gammas(G, A);
  default:
    break;
  }
  auto generic = enumerate_gammas_generic(G, A, opt);
  auto delta = delta_gammas(G, A);
  auto key = A.key_elements();
  std::set<std::vector<Elem>> a, b;
  for (auto const &g : generic)
    a.insert(g.signature(key));
  for (auto const &g : delta)
    b.insert(g.signature(key));
  if (a != b) {
    std::vector<std::vector<Elem>> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    raise(ErrorKind::MismatchFound,
          "generic and delta enumerations differ: " + std::to_string(only_a.size()) +
            " gammas only in generic, " + std::to_string(only_b.size()) + " only in delta");
  }
  return generic;
}

namespace {

struct Session {
  Group G;
  AutomorphismGroup A;
  Strategy strategy = Strategy::Auto;
};

Session open(const RunConfig &cfg, std::ostream &warn)
{
  Session s{build(cfg), {}, cfg.strategy};
  s.A = load_or_compute_aut(s.G, cfg.cache_dir, cfg.budget, warn);
  s.strategy = effective(cfg.strategy, s.A);
  return s;
}

nlohmann::json header(const RunConfig &cfg, const Session &s)
{
  nlohmann::json j{{"preset", cfg.file.empty() ? cfg.preset : "file"},
                   {"order", s.G.order()},
                   {"aut_order", s.A.order()}};
  if (cfg.file.empty() && cfg.preset != "abelian")
    j["p"] = cfg.p;
  if (cfg.preset == "free" || cfg.preset == "free_c2_exp_p")
    j["rank"] = cfg.rank;
  if (cfg.preset == "abelian")
    j["factors"] = cfg.factors;
  return j;
}

std::vector<GammaMap> hc_of(const std::vector<RegularSubgroup> &jc)
{
  std::vector<GammaMap> out;
  for (auto const &N : jc)
    if (N.iso_to_G)
      out.push_back(N.gamma);
  return out;
}

} // namespace

nlohmann::json cmd_build(const RunConfig &cfg, std::ostream &warn)
{
  Session s = open(cfg, warn);
  nlohmann::json j = header(cfg, s);
  j["exponent"] = exponent(s.G);
  j["center_order"] = center(s.G).size();
  j["derived_order"] = derived(s.G).size();
  j["frattini_order"] = frattini(s.G).size();
  j["class_le_two"] = is_class_le_two(s.G);
  j["table_hash"] = hex(s.G.table_hash());
  return j;
}

nlohmann::json cmd_jc(const RunConfig &cfg, std::ostream &warn)
{
  Session s = open(cfg, warn);
  auto jc = regular_subgroups(s.G, gammas_for(s.G, s.A, cfg.strategy, cfg.budget), cfg.budget);
  nlohmann::json j = header(cfg, s);
  j["strategy"] = to_string(s.strategy);
  j["count"] = jc.size();
  j["regular_subgroups"] = regular_subgroups_to_json(s.A, jc);
  return j;
}

nlohmann::json cmd_hc(const RunConfig &cfg, std::ostream &warn)
{
  Session s = open(cfg, warn);
  auto jc = regular_subgroups(s.G, gammas_for(s.G, s.A, cfg.strategy, cfg.budget), cfg.budget);
  std::vector<RegularSubgroup> hc;
  for (auto &N : jc)
    if (N.iso_to_G)
      hc.push_back(std::move(N));
  nlohmann::json j = header(cfg, s);
  j["strategy"] = to_string(s.strategy);
  j["count"] = hc.size();
  j["regular_subgroups"] = regular_subgroups_to_json(s.A, hc);
  return j;
}

nlohmann::json cmd_tgroup(const RunConfig &cfg, std::ostream &warn)
{
  Session s = open(cfg, warn);
  auto jc = regular_subgroups(s.G, gammas_for(s.G, s.A, cfg.strategy, cfg.budget), cfg.budget);
  auto hc = hc_of(jc);
  TGroup T = build_t_group(s.G, s.A, hc, cfg.budget);
  nlohmann::json j = header(cfg, s);
  j["strategy"] = to_string(s.strategy);
  j["j_count"] = jc.size();
  j["report"] = to_json(analyze(s.G, T));
  return j;
}

nlohmann::json to_json(const ReproReport &r)
{
  return {{"suite", r.suite},     {"check", r.check},       {"claim", r.claim},
          {"expected", r.expected}, {"computed", r.computed}, {"match", r.match},
          {"seconds", r.seconds}};
}

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names{"gp", "hp", "free", "powers", "big-delta-dim",
                                              "abelian"};
  return names;
}

const nlohmann::json &manifest()
{
  static const nlohmann::json m = nlohmann::json::parse(manifest_text);
  return m;
}

namespace {

using Clock = std::chrono::steady_clock;

long long inv_mod(long long a, long long m)
{
  a = ((a % m) + m) % m;
  for (long long x = 1; x < m; ++x)
    if (a * x % m == 1)
      return x;
  raise(ErrorKind::InvalidArgument, "not invertible");
}

/// Smallest k in [0, n) with base^k = target, or -1.
long long discrete_log(const Group &G, Elem base, Elem target, long long n)
{
  Elem x = 0;
  for (long long k = 0; k < n; ++k, x = G.mul(x, base))
    if (x == target)
      return k;
  return -1;
}

class Recorder {
public:
  Recorder(std::string suite, std::vector<ReproReport> &out) : _suite(std::move(suite)), _out(out) {}

  void start() { _t0 = Clock::now(); }

  void check(const std::string &id, nlohmann::json computed)
  {
    auto const &checks = manifest().at("checks");
    if (!checks.contains(id))
      raise(ErrorKind::InvalidArgument, "no expected value for " + id);
    auto const &entry = checks.at(id);
    ReproReport r;
    r.suite = _suite;
    r.check = id;
    r.claim = entry.at("claim").get<std::string>();
    r.expected = entry.at("expected");
    r.computed = std::move(computed);
    r.match = r.expected == r.computed;
    r.seconds = std::chrono::duration<double>(Clock::now() - _t0).count();
    _out.push_back(std::move(r));
  }

private:
  std::string _suite;
  std::vector<ReproReport> &_out;
  Clock::time_point _t0 = Clock::now();
};

struct Pipeline {
  Group G;
  AutomorphismGroup A;
  std::vector<GammaMap> gammas;
  std::vector<RegularSubgroup> jc;
  std::vector<GammaMap> hc;
  TGroup T;
};

Pipeline pipeline(const ClassTwoPresentation &pres, const RunConfig &cfg, std::ostream &warn,
                  Strategy s = Strategy::Auto)
{
  Pipeline P;
  P.G = build_group(pres, BuildOptions{std::max<std::size_t>(cfg.order_cap, 3000)});
  P.A = load_or_compute_aut(P.G, cfg.cache_dir, cfg.budget, warn);
  P.gammas = gammas_for(P.G, P.A, s, cfg.budget);
  P.jc = regular_subgroups(P.G, P.gammas, cfg.budget);
  P.hc = hc_of(P.jc);
  P.T = build_t_group(P.G, P.A, P.hc, cfg.budget);
  return P;
}

void suite_gp(const RunConfig &cfg, std::ostream &warn, std::vector<ReproReport> &out)
{
  Recorder rec("gp", out);
  std::vector<unsigned> primes{3, 5};
  if (cfg.with_p7)
    primes.push_back(7);
  for (unsigned p : primes) {
    rec.start();
    std::string tag = "gp.p" + std::to_string(p) + ".";
    auto P = pipeline(preset_gp(p), cfg, warn);
    const Group &G = P.G;
    auto report = analyze(G, P.T);
    rec.check(tag + "J_count", P.jc.size());
    rec.check(tag + "H_count", P.hc.size());
    rec.check(tag + "T_order", report.order);
    rec.check(tag + "T_abelian", report.abelian);
    rec.check(tag + "T_agl1p", report.agl1p);

    // Delta(x,x) = 1, Delta(x,y) = x^{pt}, Delta(y,x) = x^{ps}, Delta(y,y) = y^{p(s+t)}
    Elem x = G.generators()[0], y = G.generators()[1];
    Elem xp = G.pow(x, p), yp = G.pow(y, p);
    std::map<std::pair<long long, long long>, GammaMap> family;
    bool coords_ok = true;
    for (auto const &g : P.gammas) {
      auto d = delta_from_gamma(G, g);
      long long s = discrete_log(G, xp, d(y, x), p);
      long long t = discrete_log(G, xp, d(x, y), p);
      if (s < 0 || t < 0 || d(x, x) != 0 || d(y, y) != G.pow(yp, s + t)) {
        coords_ok = false;
        continue;
      }
      family.emplace(std::pair{s, t}, g);
    }
    coords_ok = coords_ok && family.size() == std::size_t(p) * p;
    rec.check(tag + "family_delta_coords", coords_ok);

    long long mismatches = 0;
    if (coords_ok) {
      auto theta = [&](long long d, long long s) {
        long long t = (inv_mod(d, p) + s - 1) % p;
        auto th = theta_from_images(G, family.at({s, t}), std::vector<Elem>{x, G.pow(y, d)});
        if (!th)
          raise(ErrorKind::NoIsomorphism, "theta_{d,s} is not an isomorphism");
        return *th;
      };
      std::map<std::pair<long long, long long>, Permutation> reps;
      for (long long d = 1; d < p; ++d)
        for (long long s = 0; s < p; ++s)
          reps.emplace(std::pair{d, s}, theta(d, s));
      for (auto const &[ds, t1] : reps)
        for (auto const &[eu, t2] : reps) {
          auto [d, s] = ds;
          auto [e, u] = eu;
          long long f = d * e % p;
          long long w = (s * inv_mod(e, p) + u) % p;
          long long z = (inv_mod(f, p) + w - 1) % p;
          auto got = P.T.class_of_theta(G, compose(t1, t2));
          auto want = P.T.class_of(family.at({w, z}));
          if (!got || got != want)
            ++mismatches;
        }
    } else {
      mismatches = -1;
    }
    rec.check(tag + "theta_composition_mismatches", mismatches);
    rec.check(tag + "inv_subgroup_index", report.inv_subgroup_index);
  }
}

void suite_hp(const RunConfig &cfg, std::ostream &warn, std::vector<ReproReport> &out)
{
  Recorder rec("hp", out);
  for (unsigned p : {3u, 5u, 7u}) {
    rec.start();
    std::string tag = "hp.p" + std::to_string(p) + ".";
    auto P = pipeline(preset_hp(p), cfg, warn);
    const Group &G = P.G;
    auto report = analyze(G, P.T);
    rec.check(tag + "T_order", report.order);
    rec.check(tag + "T_cyclic", report.cyclic);
    std::vector<const RegularSubgroup *> outside;
    for (auto const &N : P.jc)
      if (!N.iso_to_G)
        outside.push_back(&N);
    rec.check(tag + "J_minus_H", outside.size());
    // gamma_t(x): y -> x^{-pt} y, so Delta(y, x) = x^{-pt}
    long long t = -1;
    bool abelian = false;
    if (outside.size() == 1) {
      Elem x = G.generators()[0], y = G.generators()[1];
      auto d = delta_from_gamma(G, outside[0]->gamma);
      long long k = discrete_log(G, G.pow(x, p), d(y, x), p);
      t = k < 0 ? -1 : (p - k) % p;
      abelian = outside[0]->circle_abelian;
    }
    rec.check(tag + "J_minus_H_t", t);
    rec.check(tag + "J_minus_H_abelian", abelian);
  }
}

bool same_elements(const std::vector<BilinearDelta> &a, const std::vector<BilinearDelta> &b)
{
  if (a.size() != b.size())
    return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const BilinearDelta &d) { return std::find(b.begin(), b.end(), d) != b.end(); });
}

void suite_free(const RunConfig &cfg, std::ostream &warn, std::vector<ReproReport> &out)
{
  Recorder rec("free", out);
  for (auto [n, p] : {std::pair{2u, 3u}, std::pair{2u, 5u}, std::pair{3u, 3u}}) {
    rec.start();
    std::string tag = "free.n" + std::to_string(n) + ".p" + std::to_string(p) + ".";
    // rank 3 runs on the Delta path only
    Strategy s = n == 2 ? Strategy::Generic : Strategy::Delta;
    auto P = pipeline(preset_free(p, n), cfg, warn, s);
    const Group &G = P.G;
    auto space = enumerate_deltas(G, P.A);
    if (n == 2)
      rec.check(tag + "delta_count", space.count);
    else
      rec.check(tag + "delta_dimension", space.dimension);
    std::vector<BilinearDelta> multiples;
    for (long long c = 0; c < p; ++c)
      multiples.push_back(commutator_delta(G, c));
    rec.check(tag + "commutator_multiples", same_elements(space.elements, multiples));
    auto report = analyze(G, P.T);
    rec.check(tag + "T_order", report.order);
    rec.check(tag + "T_cyclic", report.cyclic);
    long long half = (p - 1) / 2;
    GammaMap g = gamma_from_delta(G, commutator_delta(G, half));
    rec.check(tag + "half_abelian", circle_group(G, g).is_abelian());
    rec.check(tag + "half_in_H", std::find(P.hc.begin(), P.hc.end(), g) != P.hc.end());
  }
}

void suite_powers(const RunConfig &cfg, std::ostream &warn, std::vector<ReproReport> &out)
{
  Recorder rec("powers", out);
  std::vector<std::pair<std::string, ClassTwoPresentation>> grid{
    {"gp3", preset_gp(3)},          {"gp5", preset_gp(5)},          {"hp3", preset_hp(3)},
    {"hp5", preset_hp(5)},          {"hp7", preset_hp(7)},          {"free23", preset_free(3, 2)},
    {"free25", preset_free(5, 2)},  {"free33", preset_free(3, 3)},  {"c9", preset_abelian({9})},
    {"c3xc3", preset_abelian({3, 3})}};
  for (auto const &[name, pres] : grid) {
    rec.start();
    std::string tag = "powers." + name + ".";
    Group G = build_group(pres);
    auto A = load_or_compute_aut(G, cfg.cache_dir, cfg.budget, warn);
    auto f = power_theta_family(G, A);
    auto key = A.key_elements();
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < f.classes.size(); ++i)
      index.emplace(f.classes[i].gamma.signature(key), i);
    rec.check(tag + "class_count", f.classes.size());
    rec.check(tag + "distinct", index.size() == f.classes.size());

    // closure table, then a generator of the whole family
    std::size_t n = f.classes.size();
    std::vector<std::size_t> table(n * n, SIZE_MAX);
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = 0; j < n && closed; ++j) {
        auto g = gamma_from_theta(G, A, compose(f.classes[i].theta, f.classes[j].theta));
        auto it = index.find(g.signature(key));
        if (it == index.end())
          closed = false;
        else
          table[i * n + j] = it->second;
      }
    bool cyclic = false;
    for (std::size_t i = 0; closed && i < n && !cyclic; ++i) {
      std::set<std::size_t> seen;
      std::size_t x = 0;  // d = 1 comes first
      do {
        seen.insert(x);
        x = table[x * n + i];
      } while (x != 0 && seen.size() <= n);
      cyclic = seen.size() == n;
    }
    rec.check(tag + "cyclic", cyclic);
    bool identity = std::all_of(f.d.begin(), f.d.end(),
                                [&](long long d) { return power_map_identity_check(G, d).pass; });
    rec.check(tag + "rho_identity", identity);
  }
}

void suite_big_delta_dim(const RunConfig &cfg, std::ostream &warn, std::vector<ReproReport> &out)
{
  Recorder rec("big-delta-dim", out);
  for (std::size_t n : {4u, 5u}) {
    rec.start();
    rec.check("big-delta-dim.n" + std::to_string(n) + ".p3", symmetric_delta_space(n, 3).dimension);
  }
  rec.start();
  Group G = build_group(preset_gp(3));
  auto A = load_or_compute_aut(G, cfg.cache_dir, cfg.budget, warn);
  auto f = delta_theta_family(G, A);
  rec.check("big-delta-dim.gp3.theta_delta_order", f.classes.size());
  long long mismatches = 0;
  auto const &D = f.space.elements;
  for (std::size_t a = 0; a < D.size(); ++a)
    for (std::size_t b = 0; b < D.size(); ++b) {
      auto k = std::find(D.begin(), D.end(), D[a] + D[b]) - D.begin();
      if (static_cast<std::size_t>(k) == D.size() ||
          gamma_from_theta(G, A, compose(f.classes[a].theta, f.classes[b].theta)) != f.classes[k].gamma)
        ++mismatches;
    }
  rec.check("big-delta-dim.gp3.theta_delta_law_mismatches", mismatches);
}

void suite_abelian(const RunConfig &cfg, std::ostream &warn, std::vector<ReproReport> &out)
{
  Recorder rec("abelian", out);
  std::vector<std::pair<std::string, std::vector<unsigned>>> grid{
    {"c9", {9}}, {"c25", {25}}, {"c27", {27}}, {"c3xc3", {3, 3}}};
  for (auto const &[name, factors] : grid) {
    rec.start();
    auto P = pipeline(preset_abelian(factors), cfg, warn);
    rec.check("abelian." + name + ".T_order", P.T.order());
  }
}

} // namespace

std::vector<ReproReport> run_suite(const std::string &suite, const RunConfig &cfg, std::ostream &warn)
{
  std::vector<ReproReport> out;
  if (suite == "gp")
    suite_gp(cfg, warn, out);
  else if (suite == "hp")
    suite_hp(cfg, warn, out);
  else if (suite == "free")
    suite_free(cfg, warn, out);
  else if (suite == "powers")
    suite_powers(cfg, warn, out);
  else if (suite == "big-delta-dim")
    suite_big_delta_dim(cfg, warn, out);
  else if (suite == "abelian")
    suite_abelian(cfg, warn, out);
  else
    raise(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  return out;
}

int exit_code(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::OrderCapExceeded: return 3;
  case ErrorKind::SearchBudgetExceeded: return 4;
  case ErrorKind::InconsistentPresentation:
  case ErrorKind::NotAGroup: return 5;
  case ErrorKind::MismatchFound: return 6;
  case ErrorKind::UnsupportedPreset:
  case ErrorKind::InvalidArgument: return 7;
  case ErrorKind::CacheCorrupt: return 8;
  default: return 9;
  }
}

} // namespace holo::exp
