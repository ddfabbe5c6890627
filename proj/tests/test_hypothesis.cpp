#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "trait_fixture.hpp"
#include "urnsect/distributions.hpp"
#include "urnsect/errors.hpp"
#include "urnsect/hypothesis.hpp"
#include "urnsect/membership.hpp"

using namespace urnsect;

namespace {

MembershipTable table_of(std::int64_t n) {
  std::vector<std::string> ids;
  for (std::int64_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  return MembershipTable(ids);
}

std::vector<std::string> ids(std::int64_t from, std::int64_t to) {
  std::vector<std::string> out;
  for (std::int64_t i = from; i < to; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

}  // namespace

TEST(TailTest, OneSidedTails) {
  const Pmf p = pmf_two_urns(UrnEnsemble(20, {8, 9}));
  const TestResult top = tail_test(p, p.support_max(), Tail::greater);
  EXPECT_DOUBLE_EQ(top.p_value, p(p.support_max()));
  EXPECT_FALSE(top.out_of_support);
  EXPECT_DOUBLE_EQ(tail_test(p, 0, Tail::less).p_value, p(0));
  EXPECT_DOUBLE_EQ(tail_test(p, 0, Tail::greater).p_value, 1.0);
  for (std::int64_t v = p.support_min(); v <= p.support_max(); ++v) {
    const double g = tail_test(p, v, Tail::greater).p_value;
    const double l = tail_test(p, v, Tail::less).p_value;
    EXPECT_NEAR(g + l, 1.0 + p(v), 1e-14) << v;
    EXPECT_NEAR(g, p.sf(v), 1e-14);
  }
}

TEST(TailTest, TwoSidedMinimumLikelihood) {
  const Pmf p(0, {0.1, 0.2, 0.4, 0.25, 0.05});
  EXPECT_NEAR(tail_test(p, 0, Tail::two_sided).p_value, 0.15, 1e-15);
  EXPECT_NEAR(tail_test(p, 3, Tail::two_sided).p_value, 0.6, 1e-15);
  EXPECT_NEAR(tail_test(p, 2, Tail::two_sided).p_value, 1.0, 1e-15);
  // Ties count as extreme.
  const Pmf sym(0, {0.25, 0.5, 0.25});
  EXPECT_NEAR(tail_test(sym, 2, Tail::two_sided).p_value, 0.5, 1e-15);
}

TEST(TailTest, OutOfSupport) {
  const Pmf p = pmf_two_urns(UrnEnsemble(10, {9, 8}));
  for (Tail t : {Tail::greater, Tail::less, Tail::two_sided}) {
    const TestResult below = tail_test(p, 3, t);
    EXPECT_TRUE(below.out_of_support);
    EXPECT_EQ(below.p_value, 1.0);
    const TestResult above = tail_test(p, 9, t);
    EXPECT_TRUE(above.out_of_support);
    EXPECT_EQ(above.p_value, 1.0);
  }
}

TEST(TailTest, TinyTailsKeepRelativeAccuracy) {
  const Pmf p = pmf_two_urns(UrnEnsemble(2000, {1000, 1000}));
  // About 9 standard deviations out; successive terms shrink by ~0.44.
  const TestResult r = tail_test(p, 600, Tail::greater);
  EXPECT_GT(r.p_value, p(600));
  EXPECT_LT(r.p_value, p(600) / (1 - 0.45));
  EXPECT_NEAR(r.p_value, p.sf(600), 1e-12 * r.p_value);
}

TEST(TailTest, UnderflowedOutcomesStayInSupport) {
  // Two identical 1000-sets in 2000: P(X = 1000) = 1/C(2000,1000) ~ 1e-600,
  // below double range, so the computed PMF stops short of 1000.
  const UrnEnsemble e(2000, {1000, 1000});
  ASSERT_LT(pmf(e).support_max(), 1000);
  const TestResult g = intersection_test(e, 1000, Tail::greater);
  EXPECT_FALSE(g.out_of_support);
  EXPECT_EQ(g.p_value, std::numeric_limits<double>::min());
  EXPECT_EQ(intersection_test(e, 1000, Tail::less).p_value, 1.0);
  EXPECT_EQ(intersection_test(e, 1000, Tail::two_sided).p_value, std::numeric_limits<double>::min());
  EXPECT_EQ(intersection_test(e, 0, Tail::greater).p_value, 1.0);
  EXPECT_EQ(intersection_test(e, 0, Tail::less).p_value, std::numeric_limits<double>::min());
  // A plain PMF knows only its listed outcomes.
  EXPECT_TRUE(tail_test(pmf(e), 1000, Tail::greater).out_of_support);
  // Truly impossible outcomes are still flagged.
  EXPECT_TRUE(intersection_test(e, 1001, Tail::greater).out_of_support);
  EXPECT_TRUE(intersection_test(UrnEnsemble(10, {9, 8}), 6, Tail::less).out_of_support);
}

TEST(IntersectionTest, Examples) {
  const TestResult fixed = intersection_test(UrnEnsemble(5, {5, 3}), 3, Tail::greater);
  EXPECT_EQ(fixed.p_value, 1.0);
  EXPECT_EQ(fixed.parameters, "nurn n=5 samples=5,3");
  // Exact tails (pmf_two_urns sums; scipy hypergeom agrees).
  EXPECT_NEAR(intersection_test(UrnEnsemble(155, {110, 115}), 87, Tail::greater).p_value, 0.025751131643677733, 1e-12);
  EXPECT_NEAR(intersection_test(UrnEnsemble(60, {40, 35}), 19, Tail::greater).p_value, 0.9971605764382657, 1e-12);
  const UrnEnsemble three(100, {57, 41, 61});
  const Moments m = moments_n_urns(three);
  const auto obs = static_cast<std::int64_t>(std::ceil(m.mean + 4 * std::sqrt(m.variance)));
  EXPECT_LT(intersection_test(three, obs, Tail::greater).p_value, 1e-3);
  EXPECT_THROW(intersection_test(three, -1, Tail::greater), InvalidParameter);
}

TEST(IntersectionTest, TwoUrnTailIsHypergeometric) {
  for (std::int64_t n : {10, 37, 80})
    for (std::int64_t a = 0; a <= n; a += 7)
      for (std::int64_t b = 0; b <= n; b += 5) {
        const Pmf hyp = pmf_two_urns(UrnEnsemble(n, {a, b}));
        for (std::int64_t v = hyp.support_min(); v <= hyp.support_max(); ++v) {
          const double p = intersection_test(UrnEnsemble(n, {a, b}), v, Tail::greater).p_value;
          const double want = hyp.sf(v);
          ASSERT_NEAR(p, want, 1e-12 * std::max(want, 1e-300) + 1e-15);
        }
      }
}

TEST(Distance, SmallDistributions) {
  const Pmf same = pmf_distance(Pmf::point_mass(3), Pmf::point_mass(3));
  EXPECT_EQ(same.support_min(), 0);
  EXPECT_EQ(same(0), 1.0);
  const Pmf coin(0, {0.5, 0.5});
  const Pmf d = pmf_distance(coin, coin);
  EXPECT_DOUBLE_EQ(d(0), 0.5);
  EXPECT_DOUBLE_EQ(d(1), 0.5);
  // Two copies of n=5, a=b=2: 23/50, 12/25, 3/50 by direct product sum.
  const DistancePair pair{UrnEnsemble(5, {2, 2}), UrnEnsemble(5, {2, 2})};
  const Pmf dd = pmf_distance(pair);
  EXPECT_NEAR(dd(0), 23.0 / 50, 1e-15);
  EXPECT_NEAR(dd(1), 12.0 / 25, 1e-15);
  EXPECT_NEAR(dd(2), 3.0 / 50, 1e-15);
  EXPECT_NEAR(dd.total(), 1.0, 1e-15);
}

TEST(Distance, FigureExample) {
  const DistancePair pair{UrnEnsemble(60, {40, 35}), UrnEnsemble(155, {110, 115})};
  const TestResult r = distance_test(pair, 68, Tail::greater);
  EXPECT_NEAR(r.p_value, 0.0014, 5e-5);
  EXPECT_NEAR(r.p_value, 0.0014436983, 1e-9);
  EXPECT_EQ(distance_test(pair, 0, Tail::greater).p_value, 1.0);
  EXPECT_NEAR(pmf_distance(pair).total(), 1.0, 1e-12);
  EXPECT_THROW(distance_test(pair, -2, Tail::greater), InvalidParameter);
}

TEST(Distance, PairCountSameStart) {
  for (std::int64_t lo = 0; lo <= 3; ++lo)
    for (std::int64_t r_hi = lo; r_hi <= lo + 8; ++r_hi)
      for (std::int64_t s_hi = lo; s_hi <= lo + 8; ++s_hi)
        for (std::int64_t d = 0; d <= 10; ++d) {
          std::int64_t brute = 0;
          for (std::int64_t x = lo; x <= r_hi; ++x)
            for (std::int64_t y = lo; y <= s_hi; ++y) brute += std::abs(x - y) == d;
          ASSERT_EQ(distance_pair_count(lo, r_hi, lo, s_hi, d), brute)
              << "lo=" << lo << " r_hi=" << r_hi << " s_hi=" << s_hi << " d=" << d;
        }
}

TEST(Distance, PairCountOffsetSupportsDiffer) {
  // R = [0,2], S = [5,6]: pairs at d = 3 are (2,5); the length-only form
  // cannot see the offset.
  EXPECT_EQ(distance_pair_count(0, 2, 5, 6, 0), 0);
  EXPECT_NE(distance_pair_count(0, 2, 5, 6, 3), 1);
}

TEST(Enrichment, DisjointAndIdenticalSets) {
  MembershipTable t = table_of(30);
  t.add_set("x", ids(0, 5));
  t.add_set("y", ids(10, 18));
  t.add_set("z", ids(0, 5));
  const EnrichmentMatrix m = enrichment_matrix(t, {{"x", "z"}, {"y", "z"}});
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.columns(), 2u);
  EXPECT_EQ(m.at(0, 0).intersection, 0);
  EXPECT_EQ(m.at(0, 0).test.p_value, 1.0);
  EXPECT_EQ(m.at(0, 1).intersection, 5);
  // Maximal enrichment: P(X >= 5) = P(X = 5) = 1 / C(30, 5).
  EXPECT_NEAR(m.at(0, 1).test.p_value, 1.0 / 142506, 1e-18);
  EXPECT_EQ(m.at(1, 1).test.p_value, m.at(0, 1).test.p_value);
  EXPECT_NE(m.at(0, 1).test.parameters.find("sets=x,z"), std::string::npos);
}

TEST(Enrichment, TwoGroupCellsAreHypergeometricTails) {
  MembershipTable t = table_of(200);
  t.add_set("a1", ids(0, 40));
  t.add_set("a2", ids(30, 90));
  t.add_set("b1", ids(20, 50));
  t.add_set("b2", ids(85, 160));
  t.add_set("b3", ids(0, 200));
  const EnrichmentMatrix m = enrichment_matrix(t, {{"a1", "a2"}, {"b1", "b2", "b3"}});
  const std::int64_t sizes_a[] = {40, 60}, sizes_b[] = {30, 75, 200};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& cell = m.at(r, c);
      const Pmf hyp = pmf_two_urns(UrnEnsemble(200, {sizes_a[r], sizes_b[c]}));
      EXPECT_NEAR(cell.test.p_value, hyp.sf(cell.intersection), 1e-12 * hyp.sf(cell.intersection)) << r << "," << c;
    }
  EXPECT_EQ(m.at(0, 0).intersection, 20);
  EXPECT_EQ(m.at(1, 1).intersection, 5);
  EXPECT_EQ(m.at(1, 2).intersection, 60);
}

TEST(Enrichment, ThreeGroupsOneCellPerTriple) {
  MembershipTable t = table_of(50);
  t.add_set("a", ids(0, 20));
  t.add_set("b", ids(10, 30));
  t.add_set("c", ids(15, 40));
  t.add_set("d", ids(0, 10));
  const EnrichmentMatrix m = enrichment_matrix(t, {{"a", "d"}, {"b", "d"}, {"c", "a"}});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.columns(), 4u);
  EXPECT_EQ(m.cells.size(), 8u);
  const auto& cell = m.at(0, 1);  // a, b, a
  EXPECT_EQ(cell.intersection, 10);
  EXPECT_NEAR(cell.test.p_value, pmf_three_urns(UrnEnsemble(50, {20, 20, 20})).sf(10), 1e-14);
  const auto& cell2 = m.at(0, 0);  // a, b, c
  EXPECT_EQ(cell2.intersection, 5);
  EXPECT_NEAR(cell2.test.p_value, pmf_three_urns(UrnEnsemble(50, {20, 20, 25})).sf(5), 1e-14);
}

TEST(Enrichment, PlantedModulesStandOut) {
  fixture::TraitFixtureConfig config;
  config.rich_module = 150;
  config.rich_share = 0.8;
  config.small_module = 40;
  config.small_share = 0.7;
  config.rich_sizes = {1000, 850, 700, 550};
  const fixture::TraitFixture f = fixture::make_trait_fixture(config);
  const EnrichmentMatrix m = enrichment_matrix(f.table, f.groups);
  ASSERT_EQ(m.rows(), 16u);
  ASSERT_EQ(m.columns(), 256u);
  double worst_planted = 0.0, best_other = 1.0;
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 256; ++c) {
      const auto& cell = m.at(r, c);
      const std::size_t t1 = c / 16, t2 = c % 16;
      const bool planted = f.trait_group[r] == f.trait_group[t1] && f.trait_group[r] == f.trait_group[t2];
      if (planted) worst_planted = std::max(worst_planted, cell.test.p_value);
      else best_other = std::min(best_other, cell.test.p_value);
    }
  EXPECT_LT(worst_planted, 1e-4);
  EXPECT_GT(best_other, 0.01);
  // Spot-check cells against the three-urn tail directly.
  for (std::size_t c : {0u, 17u, 200u}) {
    const auto& cell = m.at(5, c);
    std::vector<std::int64_t> sizes;
    for (std::size_t s : cell.sets) sizes.push_back(f.table.sets()[s].ball_count());
    const double want = pmf_three_urns(UrnEnsemble(f.universe, sizes)).sf(cell.intersection);
    EXPECT_NEAR(cell.test.p_value, std::min(want, 1.0), 1e-10 * want);
  }
}

TEST(Enrichment, DuplicateUniverse) {
  // c0 and c1 are listed twice: two balls each.
  std::istringstream universe("c0\nc0\nc1\nc1\nc2\nc3\nc4\nc5\n");
  MembershipTable t = MembershipTable::read_universe(universe);
  ASSERT_EQ(t.size(), 6u);
  ASSERT_EQ(t.duplicated_count(), 2);
  t.add_set("a", {"c0", "c2", "c3"});
  t.add_set("b", {"c0", "c0", "c1", "c3"});
  const EnrichmentMatrix m = enrichment_matrix(t, {{"a"}, {"b"}});
  ASSERT_EQ(m.cells.size(), 1u);
  EXPECT_EQ(m.at(0, 0).intersection, 2);
  const Pmf null = pmf_duplicates(DuplicateUrnPair(6, 3, 4, 2));
  EXPECT_NEAR(m.at(0, 0).test.p_value, null.sf(2), 1e-14);
  EXPECT_THROW(enrichment_matrix(t, {{"a"}, {"b"}, {"a"}}), InvalidParameter);
  EXPECT_THROW(enrichment_matrix(t, {{"b"}, {"a"}}), DataError);
}

TEST(Enrichment, Errors) {
  MembershipTable t = table_of(10);
  t.add_set("a", ids(0, 3));
  EXPECT_THROW(enrichment_matrix(t, {{"a"}}), InvalidParameter);
  EXPECT_THROW(enrichment_matrix(t, {{"a"}, {}}), InvalidParameter);
  EXPECT_THROW(enrichment_matrix(t, {{"a"}, {"missing"}}), DataError);
}
