#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thetacat/ncat.hpp"
#include "thetacat/theta.hpp"

using namespace thetacat;

namespace {

bool has_law(const std::vector<Violation>& v, const std::string& law) {
  for (const auto& x : v)
    if (x.law == law) return true;
  return false;
}

}  // namespace

TEST(NCat, BasicCategoriesAreValid) {
  EXPECT_TRUE(validate(*terminal_ncat(3)).empty());
  EXPECT_TRUE(validate(*empty_ncat(2)).empty());
  auto j = simply_connected_groupoid(1);
  EXPECT_TRUE(validate(*j).empty());
  EXPECT_EQ(j->counts, (std::vector<int>{2, 4}));
  auto d2 = simply_connected_groupoid(2);
  EXPECT_EQ(d2->counts, (std::vector<int>{3, 9}));
  EXPECT_TRUE(validate(*linear_order(3)).empty());
  EXPECT_EQ(linear_order(3)->counts[1], 10);
}

TEST(NCat, PromoteAddsOnlyIdentities) {
  auto j = promote(simply_connected_groupoid(1), 3);
  EXPECT_TRUE(validate(*j).empty());
  EXPECT_EQ(j->counts, (std::vector<int>{2, 4, 4, 4}));
  for (int x = 0; x < 4; ++x) EXPECT_TRUE(j->is_identity(2, x));
}

TEST(NCat, ProductAndCoproductAreValid) {
  auto d2 = free_ncat(Table::globe(2), 2).cat;
  auto j = promote(simply_connected_groupoid(1), 2);
  auto p = product(d2, j);
  EXPECT_TRUE(validate(*p).empty());
  EXPECT_EQ(p->counts, (std::vector<int>{4, 16, 20}));
  auto s = coproduct(d2, j);
  EXPECT_TRUE(validate(*s).empty());
  EXPECT_EQ(s->counts, (std::vector<int>{4, 8, 9}));
  EXPECT_TRUE(validate(projection(d2, j, 0)).empty());
  EXPECT_TRUE(validate(projection(d2, j, 1)).empty());
  EXPECT_TRUE(validate(coproduct_injection(d2, j, 1)).empty());
}

TEST(NCat, ValidateNamesBrokenLaws) {
  auto j = simply_connected_groupoid(1);
  FiniteNCat bad = *j;
  // 0->1 then 1->0 should be id_0; send it to 0->1.
  int a01 = -1, a10 = -1;
  for (int x = 0; x < 4; ++x) {
    if (bad.src[1][x] == 0 && bad.tgt[1][x] == 1) a01 = x;
    if (bad.src[1][x] == 1 && bad.tgt[1][x] == 0) a10 = x;
  }
  bad.set_compose(0, 1, a10, a01, a01);
  auto v = validate(bad);
  EXPECT_TRUE(has_law(v, "comp-boundary"));

  FiniteNCat glob = *free_ncat(Table::globe(2), 2).cat;
  glob.src[2][glob.counts[2] - 1] = glob.tgt[2][glob.counts[2] - 1] == 1 ? 2 : 1;
  EXPECT_FALSE(validate(glob).empty());

  FiniteNCat unit = *j;
  unit.ident[0][0] = a01;
  EXPECT_TRUE(has_law(validate(unit), "unit-target"));
}

TEST(NCat, InterchangeViolationIsDetected) {
  // One object, one 1-cell, 2-cells {e, x}: vertical composition makes x
  // idempotent, horizontal composition makes x square to e. Both are unital
  // and associative, so only the interchange law can fail.
  FiniteNCat c = FiniteNCat::with_counts(2, {1, 1, 2});
  c.src[1][0] = c.tgt[1][0] = 0;
  c.src[2] = {0, 0};
  c.tgt[2] = {0, 0};
  c.ident[0][0] = 0;
  c.ident[1][0] = 0;
  c.set_compose(0, 1, 0, 0, 0);
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < 2; ++f) {
      c.set_compose(1, 2, g, f, g | f);
      c.set_compose(0, 2, g, f, g ^ f);
    }
  auto v = validate(c);
  ASSERT_FALSE(v.empty());
  for (const auto& x : v) EXPECT_EQ(x.law, "interchange");
  // making both compositions agree repairs it
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < 2; ++f) c.set_compose(1, 2, g, f, g ^ f);
  EXPECT_TRUE(validate(c).empty());
}

TEST(NCat, FunctorEnumerationMatchesBruteForce) {
  auto j = simply_connected_groupoid(1);
  auto d1 = free_ncat(Table::globe(1), 1).cat;
  auto d2 = free_ncat(Table::globe(2), 2).cat;
  auto j2 = build_interval(2).j;
  auto tri = free_ncat(Table{{1, 1}, {0}}, 1).cat;
  std::vector<std::pair<NCatPtr, NCatPtr>> cases = {
      {d1, j}, {j, j}, {tri, j}, {tri, linear_order(2)}, {j, d1},
      {d2, j2}, {j2, j2}, {promote(j, 2), j2}, {d2, d2}};
  for (auto& [a, b] : cases) {
    auto got = enumerate_functors(a, b);
    EXPECT_EQ(got.size(), oracle::count_functors_brute(*a, *b));
    for (const auto& u : got) EXPECT_TRUE(validate(u).empty());
  }
}

TEST(NCat, EnumerationIsCanonicallyOrdered) {
  auto j2 = build_interval(2).j;
  auto got = enumerate_functors(j2, j2);
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_LT(got[i - 1].map, got[i].map);
}

TEST(NCat, WreathAndIntervals) {
  auto it = build_interval(2);
  EXPECT_EQ(it.j->counts, (std::vector<int>{2, 4, 6}));
  EXPECT_TRUE(validate(*it.j).empty());
  EXPECT_TRUE(validate(it.collapse).empty());
  EXPECT_TRUE(validate(it.section0).empty());
  EXPECT_TRUE(validate(it.section1).empty());
  EXPECT_TRUE(is_injective(it.section0));
  EXPECT_TRUE(oracle::isomorphic(*it.globe, *free_ncat(Table::globe(1), 2).cat));
  auto it3 = build_interval(3);
  EXPECT_TRUE(validate(*it3.j).empty());
  EXPECT_TRUE(oracle::isomorphic(*it3.globe, *free_ncat(Table::globe(2), 3).cat));
  EXPECT_TRUE(validate(it3.collapse).empty());
  EXPECT_TRUE(oracle::isomorphic(*wreath_delta1(terminal_ncat(0)), *free_ncat(Table::globe(1), 1).cat));
}

TEST(NCat, Truncations) {
  auto it = build_interval(2);
  Truncation t = truncate(it.j);
  EXPECT_EQ(t.cat->counts, (std::vector<int>{2, 3}));
  EXPECT_TRUE(validate(*t.cat).empty());
  auto r = truncate_right(it.j);
  EXPECT_EQ(r->counts, (std::vector<int>{2, 4}));
  EXPECT_TRUE(validate(*r).empty());
  EXPECT_TRUE(is_iso_fibration(truncate_right(it.collapse)));
  EXPECT_FALSE(is_iso_fibration(build_interval(1).section0));
  Truncation tg = truncate(it.globe);
  EXPECT_TRUE(validate(truncate(it.collapse, t, tg)).empty());
}

TEST(NCat, InternalHomObjects) {
  auto j = simply_connected_groupoid(1);
  auto d1 = free_ncat(Table::globe(1), 1).cat;
  auto h = internal_hom_data(j, d1);
  EXPECT_EQ(h.cat->counts[0], 2);
  EXPECT_TRUE(validate(*h.cat).empty());
  auto hj = internal_hom_data(j, j);
  EXPECT_EQ(hj.cat->counts[0], 4);
  EXPECT_TRUE(validate(*hj.cat).empty());
  EXPECT_TRUE(validate(evaluate_at(hj, 1)).empty());
  EXPECT_TRUE(is_fully_faithful(evaluate_at(hj, 1)));
}

TEST(NCat, InternalHomLevelTwo) {
  auto j = promote(simply_connected_groupoid(1), 2);
  auto j2 = build_interval(2).j;
  auto h = internal_hom_data(j, j2);
  EXPECT_TRUE(validate(*h.cat).empty());
  auto ev = evaluate_at(h, 1);
  EXPECT_TRUE(validate(ev).empty());
  EXPECT_TRUE(is_fully_faithful(ev));
}

TEST(NCat, FullyFaithful) {
  auto it = build_interval(2);
  EXPECT_FALSE(is_fully_faithful(it.collapse));
  EXPECT_TRUE(is_fully_faithful(identity_functor(it.j)));
  EXPECT_FALSE(is_fully_faithful(it.section0));
}

TEST(NCat, UniqueLiftOutcomes) {
  auto point = terminal_ncat(2);
  auto j2 = build_interval(2).j;
  auto two = coproduct(point, point);
  auto none = empty_ncat(2);
  auto to_point = [&](const NCatPtr& c) {
    NFunctor u{c, point, {}};
    for (int k = 0; k <= 2; ++k) u.map.emplace_back(c->counts[k], 0);
    return u;
  };
  NFunctor v = to_point(j2);
  // empty -> point against J_2 -> point: two lifts (the objects)
  NFunctor u0{none, point, {{}, {}, {}}};
  NFunctor f0{none, j2, {{}, {}, {}}};
  EXPECT_EQ(unique_lift(u0, v, f0, identity_functor(point)).outcome, LiftOutcome::MultipleLifts);
  // fold against J_2 -> point with a constant top: unique
  NFunctor fold = to_point(two);
  NFunctor top{two, j2, {{0, 0}, {0, 0}, {0, 0}}};
  auto r = unique_lift(fold, v, top, identity_functor(point));
  EXPECT_EQ(r.outcome, LiftOutcome::UniqueLift);
  // fold with a top hitting both objects has no lift
  NFunctor split{two, j2, {{0, 1}, {j2->ident[0][0], j2->ident[0][1]},
                           {j2->identity(0, 2, 0), j2->identity(0, 2, 1)}}};
  EXPECT_EQ(unique_lift(fold, v, split, identity_functor(point)).outcome, LiftOutcome::NoLift);
}
