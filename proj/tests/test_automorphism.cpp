#include <gtest/gtest.h>

#include "holo/automorphism.hpp"
#include "holo/error.hpp"
#include "holo/group.hpp"
#include "holo/presentation.hpp"

#include "oracle.hpp"

using namespace holo;

namespace {

/// Number of pairs (u, v) for which x^a y^b -> u^a v^b is an automorphism
/// of a two-generator table whose element index is a + b * xo.
std::size_t brute_force_aut_count(const oracle::Table &t, std::size_t n, unsigned xo, unsigned yo)
{
  auto pw = [&](std::uint32_t g, unsigned e) {
    std::uint32_t x = 0;
    for (unsigned i = 0; i < e; ++i)
      x = t[x * n + g];
    return x;
  };
  std::size_t count = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      std::vector<std::uint32_t> map(n);
      std::vector<char> seen(n, 0);
      bool ok = true;
      for (unsigned b = 0; b < yo && ok; ++b)
        for (unsigned a = 0; a < xo && ok; ++a) {
          std::uint32_t img = t[pw(u, a) * n + pw(v, b)];
          map[a + b * xo] = img;
          ok = !seen[img];
          seen[img] = 1;
        }
      for (std::size_t g = 0; g < n && ok; ++g)
        for (std::size_t h = 0; h < n && ok; ++h)
          ok = map[t[g * n + h]] == t[map[g] * n + map[h]];
      count += ok;
    }
  }
  return count;
}

} // namespace

TEST(Automorphisms, OrderMatchesBruteForceMetacyclic)
{
  auto ref = oracle::metacyclic(3, 9);
  std::size_t expected = brute_force_aut_count(ref, 81, 9, 9);
  auto A = automorphism_group(build_group(preset_gp(3)));
  EXPECT_EQ(A.order(), expected);
}

TEST(Automorphisms, OrderMatchesBruteForceSplit)
{
  auto ref = oracle::metacyclic(3, 3);
  std::size_t expected = brute_force_aut_count(ref, 27, 9, 3);
  auto A = automorphism_group(build_group(preset_hp(3)));
  EXPECT_EQ(A.order(), expected);
}

TEST(Automorphisms, HeisenbergOrder)
{
  // |GL(2,3)| * |Hom(F_3^2, Z)| = 48 * 9
  auto A = automorphism_group(build_group(preset_free(3, 2)));
  EXPECT_EQ(A.order(), 432u);
}

TEST(Automorphisms, ElementaryAbelianOrder)
{
  // |GL(2,5)| = 24 * 20
  auto A = automorphism_group(build_group(preset_abelian({5, 5})));
  EXPECT_EQ(A.order(), 480u);
}

TEST(Automorphisms, MaterializedElementsAreDistinctAutomorphisms)
{
  Group G = build_group(preset_hp(3));
  auto A = automorphism_group(G);
  auto const &els = A.elements();
  ASSERT_EQ(els.size(), A.order());
  EXPECT_TRUE(els.front().is_identity());
  for (std::size_t i = 0; i < els.size(); ++i) {
    EXPECT_TRUE(is_automorphism(G, els[i]));
    EXPECT_EQ(A.index_of(els[i]), i);
    EXPECT_TRUE(A.contains(els[i]));
    if (i > 1)
      EXPECT_LT(A.key(els[i - 1]), A.key(els[i]));
  }
}

TEST(Automorphisms, ClosedUnderProductsAndInverses)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  auto gens = A.generators();
  for (auto const &a : gens) {
    EXPECT_TRUE(A.contains(a.inverse()));
    for (auto const &b : gens)
      EXPECT_TRUE(A.contains(a * b));
  }
  for (Elem g = 0; g < G.order(); g += 4)
    EXPECT_TRUE(A.contains(inner_automorphism(G, g)));
}

TEST(Automorphisms, NonAutomorphismRejected)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  std::vector<Elem> img(G.order());
  for (Elem g = 0; g < G.order(); ++g)
    img[g] = G.pow(g, 2);  // squaring is not a homomorphism here
  Automorphism sq(img);
  EXPECT_FALSE(is_automorphism(G, sq));
  EXPECT_FALSE(A.contains(sq));
}

TEST(Automorphisms, RebuildFromGenerators)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G);
  std::vector<Automorphism> gens(A.generators().begin(), A.generators().end());
  auto B = automorphism_group_from_generators(G, gens);
  EXPECT_EQ(B.order(), A.order());

  gens.front() = Automorphism(std::vector<Elem>(G.order(), 0));
  try {
    automorphism_group_from_generators(G, gens);
    FAIL() << "expected CacheCorrupt";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::CacheCorrupt);
  }
}

TEST(Automorphisms, MaterializationCap)
{
  Group G = build_group(preset_gp(3));
  auto A = automorphism_group(G, {.materialize_cap = 100});
  EXPECT_FALSE(A.can_materialize());
  EXPECT_THROW(A.elements(), Error);
}
