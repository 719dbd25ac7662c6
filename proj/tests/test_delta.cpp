#include <gtest/gtest.h>

#include <algorithm>

#include "holo/automorphism.hpp"
#include "holo/delta.hpp"
#include "holo/error.hpp"
#include "holo/fp_linear.hpp"
#include "holo/holomorph.hpp"
#include "holo/presentation.hpp"

#include "families.hpp"

using namespace holo;

namespace {

bool contains_gamma(const std::vector<GammaMap> &list, const GammaMap &g)
{
  return std::find(list.begin(), list.end(), g) != list.end();
}

} // namespace

TEST(FpLinear, NullspaceAndRank)
{
  MatrixFp m(5, 0, 4);
  m.push_row({1, 2, 0, -1});
  m.push_row({2, 4, 1, 0});
  m.push_row({3, 6, 1, -1});  // sum of the first two
  EXPECT_EQ(rank(m), 2u);
  auto ker = nullspace(m);
  ASSERT_EQ(ker.size(), 2u);
  for (auto const &v : ker)
    for (std::size_t r = 0; r < m.rows; ++r) {
      unsigned long long s = 0;
      for (std::size_t c = 0; c < m.cols; ++c)
        s += static_cast<unsigned long long>(m.at(r, c)) * v[c];
      EXPECT_EQ(s % 5, 0u);
    }
  for (unsigned a = 1; a < 7; ++a)
    EXPECT_EQ(a * inverse_mod(a, 7) % 7, 1u);
}

TEST(Delta, SectionsOfSplitMetacyclic)
{
  Group G = build_group(preset_gp(3));
  auto S = section_space(G);
  EXPECT_TRUE(S->elementary);
  EXPECT_EQ(S->V.size(), 9u);
  EXPECT_EQ(S->Vp.size(), 9u);
  EXPECT_EQ(S->W.size(), 9u);
  EXPECT_EQ(S->V.packed, S->Vp.packed);
  for (Elem g = 0; g < G.order(); ++g)
    EXPECT_EQ(S->V.packed[S->V.element_of[S->V.packed[g]]], S->V.packed[g]);
}

TEST(Delta, SplitMetacyclicFamilyValues)
{
  Group G = build_group(preset_gp(3));
  Elem x = G.generators()[0], y = G.generators()[1];
  Elem xp = G.pow(x, 3), yp = G.pow(y, 3);
  for (long long s = 0; s < 3; ++s)
    for (long long t = 0; t < 3; ++t) {
      auto d = delta_from_gamma(G, families::gp_gamma(G, 3, s, t));
      EXPECT_EQ(d(x, x), 0u);
      EXPECT_EQ(d(x, y), G.pow(xp, t));
      EXPECT_EQ(d(y, x), G.pow(xp, s));
      EXPECT_EQ(d(y, y), G.pow(yp, s + t));
    }
}

TEST(Delta, EquivariantDeltasMatchGammas)
{
  struct Case {
    ClassTwoPresentation pres;
    std::uint64_t count;
  };
  for (auto const &c : {Case{preset_gp(3), 9}, Case{preset_gp(5), 25}, Case{preset_hp(3), 3},
                        Case{preset_hp(5), 5}, Case{preset_free(3, 2), 3},
                        Case{preset_free(5, 2), 5}}) {
    Group G = build_group(c.pres);
    auto A = automorphism_group(G);
    auto space = enumerate_deltas(G, A);
    EXPECT_EQ(space.count, c.count) << c.pres.name;
    ASSERT_EQ(space.elements.size(), c.count);

    auto gammas = enumerate_gammas_generic(G, A);
    ASSERT_EQ(gammas.size(), c.count) << c.pres.name;
    for (auto const &d : space.elements) {
      GammaMap g = gamma_from_delta(G, d);
      EXPECT_TRUE(contains_gamma(gammas, g)) << c.pres.name;
      EXPECT_EQ(delta_from_gamma(G, g), d);
    }
    for (auto const &g : gammas) {
      EXPECT_TRUE(hypothesis_a(G, g));
      EXPECT_TRUE(hypothesis_b(G, g));
      EXPECT_EQ(gamma_from_delta(G, delta_from_gamma(G, g)), g) << c.pres.name;
    }
  }
}

TEST(Delta, EquivariantUnderWholeAutomorphismGroup)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  auto space = enumerate_deltas(G, A);
  for (auto const &d : space.elements)
    EXPECT_TRUE(is_equivariant(G, d, A.elements()));
  // a non-equivariant bilinear map: Delta(b_0, b_0) = w_0 only
  std::vector<std::uint32_t> values(space.sections->V.rank() * space.sections->Vp.rank(), 0);
  values[0] = 1;
  BilinearDelta bad(space.sections, values);
  EXPECT_FALSE(is_equivariant(G, bad, A.generators()));
}

TEST(Delta, FreeRankThreeHasOneDimensionalSpace)
{
  Group G = build_group(preset_free(3, 3));
  auto A = automorphism_group(G);
  auto space = enumerate_deltas(G, A);
  EXPECT_EQ(space.dimension, 1u);
  EXPECT_EQ(space.count, 3u);
  // the solution line is spanned by the commutator map
  auto c = commutator_delta(G, 1);
  EXPECT_TRUE(std::find(space.elements.begin(), space.elements.end(), c) != space.elements.end());
  EXPECT_TRUE(is_equivariant(G, c, A.generators()));
}

TEST(Delta, HalfCommutatorGivesAbelianCircle)
{
  for (unsigned p : {3u, 5u}) {
    Group G = build_group(preset_free(p, 2));
    long long half = (p - 1) / 2;  // -1/2 mod p
    auto N = regular_subgroup(G, gamma_from_delta(G, commutator_delta(G, half)));
    EXPECT_TRUE(N.circle.is_abelian()) << p;
    for (long long c = 0; c < p; ++c) {
      auto M = regular_subgroup(G, gamma_from_delta(G, commutator_delta(G, c)));
      EXPECT_EQ(M.circle.is_abelian(), c == half) << p << "," << c;
    }
  }
}

TEST(Delta, LinearStructure)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  auto space = enumerate_deltas(G, A);
  ASSERT_EQ(space.dimension, 2u);
  auto sum = space.basis[0] + space.basis[1].scaled(2);
  EXPECT_TRUE(is_equivariant(G, sum, A.generators()));
  EXPECT_TRUE(space.basis[0].scaled(3).is_zero());
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h)
      EXPECT_EQ(sum(g, h), G.mul(space.basis[0](g, h), G.pow(space.basis[1](g, h), 2)));
}

TEST(Delta, HypothesesEnforced)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  Subgroup Z = center(G);
  auto const &all = A.elements();
  auto non_central = std::find_if(all.begin(), all.end(), [&](const Automorphism &a) {
    return !is_central_automorphism(G, a, Z);
  });
  ASSERT_NE(non_central, all.end());
  GammaMap g({*non_central}, std::vector<std::uint32_t>(G.order(), 0));
  EXPECT_FALSE(hypothesis_a(G, g));
  try {
    delta_from_gamma(G, g);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
  }
}

TEST(Delta, SymmetricDimensions)
{
  EXPECT_EQ(symmetric_delta_space(2, 3).dimension, 3u);
  EXPECT_EQ(symmetric_delta_space(4, 3).dimension, 60u);
  EXPECT_EQ(symmetric_delta_space(5, 3).dimension, 150u);
  EXPECT_EQ(symmetric_delta_space(4, 7).dimension, 60u);
}

TEST(Delta, SymmetricShapeRejected)
{
  for (auto pres : {preset_gp(3), preset_free(3, 2)}) {
    Group G = build_group(pres);
    auto A = automorphism_group(G);
    try {
      symmetric_delta_space(G, A);
      FAIL() << pres.name;
    } catch (const Error &e) {
      EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
  }
}

TEST(Delta, SymmetricEquivariantOnSplitMetacyclic)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  auto space = symmetric_equivariant_deltas(G, A);
  EXPECT_EQ(space.dimension, 1u);
  Elem x = G.generators()[0], y = G.generators()[1];
  for (auto const &d : space.elements) {
    EXPECT_TRUE(d.is_symmetric());
    EXPECT_EQ(d(x, y), d(y, x));
    EXPECT_TRUE(is_equivariant(G, d, A.generators()));
  }
}

TEST(Delta, Json)
{
  Group G = build_group(preset_hp(3));
  auto d = commutator_delta(G, 1);
  auto j = delta_to_json(d, true, 1);
  EXPECT_EQ(j["basis_values"].size(), 2u);
  EXPECT_TRUE(j["equivariant_checked"].get<bool>());
  EXPECT_EQ(j["dimension"], 1);
}
