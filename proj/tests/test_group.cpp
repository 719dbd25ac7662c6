#include <gtest/gtest.h>

#include "holo/error.hpp"
#include "holo/group.hpp"
#include "holo/isomorphism.hpp"
#include "holo/presentation.hpp"

#include "oracle.hpp"

using namespace holo;

namespace {

Group oracle_group(const oracle::Table &t)
{
  std::size_t n = static_cast<std::size_t>(std::sqrt(static_cast<double>(t.size())));
  return Group::from_table(t, n);
}

} // namespace

TEST(GroupCore, MetacyclicPresetMatchesReference)
{
  for (unsigned p : {3u, 5u}) {
    Group G = build_group(preset_gp(p));
    auto ref = oracle::metacyclic(p, p * p);
    std::size_t n = G.order();

    EXPECT_EQ(n, std::size_t{p} * p * p * p);
    EXPECT_EQ(center(G).size(), oracle::center_size(ref, n));
    EXPECT_EQ(center(G).size(), std::size_t{p} * p);
    EXPECT_EQ(derived(G).size(), oracle::derived_size(ref, n));
    EXPECT_EQ(derived(G).size(), p);
    EXPECT_EQ(exponent(G), oracle::exponent(ref, n));
    EXPECT_TRUE(is_class_le_two(G));
    EXPECT_FALSE(G.is_abelian());

    EXPECT_TRUE(isomorphism_search(G, oracle_group(ref)).has_value()) << "p = " << p;
  }
}

TEST(GroupCore, SplitMetacyclicPresetMatchesReference)
{
  Group H = build_group(preset_hp(3));
  auto ref = oracle::metacyclic(3, 3);
  EXPECT_EQ(H.order(), 27u);
  EXPECT_EQ(exponent(H), 9u);
  EXPECT_EQ(exponent(H), oracle::exponent(ref, 27));
  EXPECT_EQ(frattini(H).size(), 3u);
  EXPECT_TRUE(isomorphism_search(H, oracle_group(ref)).has_value());
}

TEST(GroupCore, FreeClassTwoMatchesHeisenberg)
{
  Group F = build_group(preset_free(3, 2));
  auto ref = oracle::heisenberg(3);
  EXPECT_EQ(F.order(), 27u);
  EXPECT_EQ(exponent(F), 3u);
  EXPECT_EQ(center(F).size(), 3u);
  EXPECT_TRUE(isomorphism_search(F, oracle_group(ref)).has_value());
  // same order, different exponent
  EXPECT_FALSE(isomorphism_search(F, build_group(preset_hp(3))).has_value());
}

TEST(GroupCore, FreeRankThreeOrder)
{
  Group F = build_group(preset_free(3, 3), {.order_cap = 1000});
  EXPECT_EQ(F.order(), 729u);
  EXPECT_EQ(center(F).size(), 27u);
  EXPECT_EQ(derived(F).size(), 27u);
  EXPECT_EQ(exponent(F), 3u);
  EXPECT_EQ(minimal_generators(F).size(), 3u);
}

TEST(GroupCore, TableAxiomsHold)
{
  Group G = build_group(preset_gp(3));
  std::size_t n = G.order();
  for (Elem a = 0; a < n; ++a) {
    EXPECT_EQ(G.mul(a, G.inv(a)), 0u);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; c += 7)
        ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
  }
}

TEST(GroupCore, NormalFormRoundTrip)
{
  Group G = build_group(preset_gp(5));
  for (Elem a = 0; a < G.order(); ++a)
    EXPECT_EQ(G.from_normal_form(G.normal_form(a)), a);
}

TEST(GroupCore, FromTableRejectsNonAssociative)
{
  // Latin square with identity 0 that is not associative (order 5 loop)
  std::vector<Elem> t = {0, 1, 2, 3, 4,
                         1, 0, 3, 4, 2,
                         2, 4, 0, 1, 3,
                         3, 2, 4, 0, 1,
                         4, 3, 1, 2, 0};
  try {
    Group::from_table(t, 5);
    FAIL() << "expected NotAGroup";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
}

TEST(GroupCore, InconsistentPresentationRejected)
{
  auto pres = preset_gp(3);
  // [y, x] = x makes the declared order impossible
  pres.commutators[{1, 0}] = {{0, 1}};
  try {
    build_group(pres);
    FAIL() << "expected InconsistentPresentation";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentPresentation);
  }
}

TEST(GroupCore, OrderCapEnforced)
{
  try {
    build_group(preset_gp(7), {.order_cap = 1000});
    FAIL() << "expected OrderCapExceeded";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

TEST(GroupCore, QuotientByCenter)
{
  Group G = build_group(preset_gp(3));
  Quotient q = quotient(G, center(G));
  EXPECT_EQ(q.group.order(), 9u);
  EXPECT_TRUE(q.group.is_abelian());
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); b += 5)
      ASSERT_EQ(q.projection[G.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
}

TEST(GroupCore, QuotientRejectsNonNormal)
{
  Group G = build_group(preset_gp(3));
  // <y> is not normal: x^-1 y x = y [y, x] lies outside it
  Elem y = G.generators()[1];
  Subgroup Y = subgroup_closure(G, std::vector<Elem>{y});
  EXPECT_FALSE(is_normal(G, Y));
  EXPECT_THROW(quotient(G, Y), Error);
}

TEST(GroupCore, FrattiniAgainstBruteForce)
{
  // Frat = intersection of maximal subgroups; in a p-group these are the
  // index-p subgroups, each containing G' G^p.
  Group G = build_group(preset_hp(3));
  auto ref = oracle::metacyclic(3, 3);
  std::set<std::uint32_t> inter;
  for (std::uint32_t i = 0; i < 27; ++i) inter.insert(i);
  for (std::uint32_t a = 1; a < 27; ++a)
    for (std::uint32_t b = a; b < 27; ++b) {
      auto s = oracle::closure(ref, 27, {a, b});
      if (s.size() == 9) {
        std::set<std::uint32_t> keep;
        std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(),
                              std::inserter(keep, keep.begin()));
        inter = keep;
      }
    }
  EXPECT_EQ(frattini(G).size(), inter.size());
}
