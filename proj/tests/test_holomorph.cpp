#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "holo/automorphism.hpp"
#include "holo/error.hpp"
#include "holo/holomorph.hpp"
#include "holo/presentation.hpp"

#include "families.hpp"

using namespace holo;

namespace {

struct Fixture {
  Group G;
  AutomorphismGroup A;
  std::vector<GammaMap> gammas;
};

Fixture make(const ClassTwoPresentation &pres)
{
  Fixture f{build_group(pres), {}, {}};
  f.A = automorphism_group(f.G);
  f.gammas = enumerate_gammas_generic(f.G, f.A);
  return f;
}

bool same_aut_on(const Group &G, const Automorphism &a, const Automorphism &b)
{
  for (Elem e : G.generators())
    if (a(e) != b(e))
      return false;
  return true;
}

/// All pairs (gamma(x), gamma(y)) in Aut x Aut whose extension along normal
/// forms is an anti-homomorphism on every pair of elements; the second
/// list keeps those that are also equivariant under every automorphism.
std::pair<std::size_t, std::size_t> brute_force_gammas(const Group &G,
                                                       const std::vector<Automorphism> &aut)
{
  std::size_t multiplicative = 0, equivariant = 0;
  for (auto const &a : aut) {
    for (auto const &b : aut) {
      GammaMap g = families::from_generator_values(G, a, b);
      bool ok = true;
      for (Elem u = 0; u < G.order() && ok; ++u)
        for (Elem v = 0; v < G.order() && ok; ++v)
          ok = same_aut_on(G, g(G.mul(u, v)), g(v) * g(u));
      if (!ok)
        continue;
      ++multiplicative;
      bool eq = true;
      for (auto const &beta : aut) {
        Automorphism bi = beta.inverse();
        for (Elem u = 0; u < G.order() && eq; ++u)
          eq = same_aut_on(G, g(beta(u)), bi * g(u) * beta);
        if (!eq)
          break;
      }
      equivariant += eq;
    }
  }
  return {multiplicative, equivariant};
}

} // namespace

TEST(Holomorph, TranslationsAndComposition)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  auto const &auts = A.elements();
  std::mt19937 rng(7);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(G.order() - 1));
  std::uniform_int_distribution<std::size_t> pick_a(0, auts.size() - 1);

  for (int trial = 0; trial < 200; ++trial) {
    Elem g = pick(rng), h = pick(rng), k = pick(rng);
    EXPECT_EQ(hol_act(G, rho(G, g), h), G.mul(h, g));
    EXPECT_EQ(hol_act(G, lambda(G, g), h), G.mul(g, h));

    HolElement a{auts[pick_a(rng)], g}, b{auts[pick_a(rng)], h};
    EXPECT_EQ(hol_mul(G, HolElement{a.alpha, 0}, rho(G, g)), a);
    // right action: k^{ab} = (k^a)^b
    EXPECT_EQ(hol_act(G, hol_mul(G, a, b), k), hol_act(G, b, hol_act(G, a, k)));
    EXPECT_EQ(hol_act(G, hol_inv(G, a), hol_act(G, a, k)), k);
  }
}

TEST(Holomorph, SplitMetacyclicGammaCountMatchesBruteForce)
{
  auto f = make(preset_hp(3));
  auto [mult, eq] = brute_force_gammas(f.G, f.A.elements());
  EXPECT_EQ(f.gammas.size(), eq);
  EXPECT_EQ(f.gammas.size(), 3u);
  EXPECT_GT(mult, eq) << "anti-homomorphisms that are not equivariant exist";
}

TEST(Holomorph, FreeRankTwoGammaCountMatchesBruteForce)
{
  // gamma on x0, x1 determines gamma on the commutator generator
  Group G = build_group(preset_free(3, 2));
  auto A = automorphism_group(G);
  auto gammas = enumerate_gammas_generic(G, A);
  std::size_t eq = 0;
  std::vector<Automorphism> order3;  // gamma(x)^3 = gamma(x^3) = 1
  for (auto const &a : A.elements())
    if ((a * a * a).is_identity())
      order3.push_back(a);
  for (auto const &a : order3)
    for (auto const &b : order3) {
      std::vector<Automorphism> vals;
      for (Elem g = 0; g < G.order(); ++g) {
        auto nf = G.normal_form(g);
        Automorphism c = a * b * a.inverse() * b.inverse();  // gamma([x1,x0]) reversed
        Automorphism v = Automorphism::identity(G.order());
        for (int i = 0; i < nf[2]; ++i) v = v * c;
        for (int i = 0; i < nf[1]; ++i) v = v * b;
        for (int i = 0; i < nf[0]; ++i) v = v * a;
        vals.push_back(v);
      }
      GammaMap g = GammaMap::from_values(std::move(vals));
      if (is_gamma(G, A, g) && is_equivariant(G, g, A.elements()))
        ++eq;
    }
  EXPECT_EQ(gammas.size(), eq);
  EXPECT_EQ(gammas.size(), 3u);
}

TEST(Holomorph, MetacyclicFamilyMatchesClosedForm)
{
  for (unsigned p : {3u, 5u}) {
    auto f = make(preset_gp(p));
    ASSERT_EQ(f.gammas.size(), std::size_t{p} * p);
    for (unsigned s = 0; s < p; ++s)
      for (unsigned t = 0; t < p; ++t) {
        GammaMap g = families::gp_gamma(f.G, p, s, t);
        EXPECT_TRUE(is_gamma(f.G, f.A, g));
        EXPECT_NE(std::find(f.gammas.begin(), f.gammas.end(), g), f.gammas.end())
          << "p=" << p << " s=" << s << " t=" << t;
      }
  }
}

TEST(Holomorph, SplitFamilyRangesOverAllResidues)
{
  for (unsigned p : {3u, 5u}) {
    auto f = make(preset_hp(p));
    EXPECT_EQ(f.gammas.size(), p);
    for (unsigned t = 0; t < p; ++t) {
      GammaMap g = families::hp_gamma(f.G, p, t);
      EXPECT_NE(std::find(f.gammas.begin(), f.gammas.end(), g), f.gammas.end());
    }
  }
}

TEST(Holomorph, EnumeratedGammasAreNormalRegular)
{
  for (auto pres : {preset_gp(3), preset_hp(3), preset_free(3, 2), preset_abelian({9})}) {
    auto f = make(pres);
    for (auto const &g : f.gammas) {
      EXPECT_TRUE(is_gamma(f.G, f.A, g));
      EXPECT_TRUE(is_normal_in_hol(f.G, f.A, g));
    }
  }
}

TEST(Holomorph, IdentityGammaIsRightRegular)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  auto N = regular_subgroup(G, GammaMap::identity(G));
  EXPECT_TRUE(is_normal_in_hol(G, A, N.gamma));
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h)
      ASSERT_EQ(N.circle.mul(g, h), G.mul(g, h));
}

TEST(Holomorph, NonEquivariantGammaIsNotNormal)
{
  Group G = build_group(preset_hp(3));
  auto A = automorphism_group(G);
  auto const &aut = A.elements();
  std::size_t rejected = 0;
  for (auto const &a : aut)
    for (auto const &b : aut) {
      GammaMap g = families::from_generator_values(G, a, b);
      if (!is_anti_homomorphism(G, g) || is_equivariant(G, g, aut))
        continue;
      EXPECT_FALSE(is_normal_in_hol(G, A, g));
      ++rejected;
    }
  EXPECT_GT(rejected, 0u);
}

TEST(Holomorph, JAndHCounts)
{
  struct Case { ClassTwoPresentation pres; std::size_t j, h; };
  for (auto const &c : {Case{preset_gp(3), 9, 6}, Case{preset_hp(3), 3, 2},
                        Case{preset_hp(5), 5, 4}, Case{preset_abelian({9}), 0, 1}}) {
    auto f = make(c.pres);
    auto jc = regular_subgroups(f.G, f.gammas);
    if (c.j)
      EXPECT_EQ(jc.size(), c.j) << c.pres.name;
    EXPECT_EQ(hc_set(jc).size(), c.h) << c.pres.name;
  }
}

TEST(Holomorph, AbelianCircleGroups)
{
  // gamma_{s,t} on G_3 with t - s + 1 = 0
  Group G = build_group(preset_gp(3));
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      auto N = regular_subgroup(G, families::gp_gamma(G, 3, s, t));
      EXPECT_EQ(N.circle.is_abelian(), (t - s + 1 + 3) % 3 == 0) << s << "," << t;
    }
  // gamma_t on H_3, abelian exactly at t = -1/2 = 1
  Group H = build_group(preset_hp(3));
  for (int t = 0; t < 3; ++t)
    EXPECT_EQ(regular_subgroup(H, families::hp_gamma(H, 3, t)).circle.is_abelian(), t == 1);
}

TEST(Holomorph, InvalidGammaCircleRejected)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  // constant non-identity gamma: g o h = g^alpha h is not a group
  std::vector<Automorphism> vals(G.order(), A.elements()[1]);
  EXPECT_THROW(circle_group(G, GammaMap::from_values(vals)), Error);
}

TEST(Holomorph, IdentityChecksOnEveryGamma)
{
  for (auto pres : {preset_gp(3), preset_hp(3), preset_hp(5), preset_free(3, 2)}) {
    auto f = make(pres);
    for (auto const &g : f.gammas) {
      auto fr = formulas_check(f.G, f.A, g);
      EXPECT_TRUE(fr.pass) << pres.name << ": " << fr.witness;

      auto eq = eqcond_check(f.G, g);
      EXPECT_TRUE(eq.consistent()) << pres.name;

      auto N = regular_subgroup(f.G, g);
      auto nr = nu_isomorphism_check(f.G, N);
      EXPECT_TRUE(nr.pass) << pres.name << ": " << nr.witness;

      if (central_hypotheses(f.G, g)) {
        auto cr = commutator_of_nu_check(f.G, g);
        EXPECT_TRUE(cr.pass) << pres.name << ": " << cr.witness;
        auto pr = powers_check(f.G, g);
        EXPECT_TRUE(pr.pass) << pres.name << ": " << pr.witness;
      }
    }
  }
}

TEST(Holomorph, SearchBudget)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  try {
    enumerate_gammas_generic(G, A, {.node_budget = 5});
    FAIL() << "expected SearchBudgetExceeded";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchBudgetExceeded);
  }
}

TEST(Holomorph, JsonExport)
{
  auto f = make(preset_hp(3));
  auto jc = regular_subgroups(f.G, f.gammas);
  auto j = regular_subgroups_to_json(f.A, jc);
  ASSERT_EQ(j.size(), 3u);
  for (auto const &rec : j) {
    EXPECT_EQ(rec["gamma"].size(), 27u);
    EXPECT_EQ(rec["gamma"][0], 0);
  }
}
