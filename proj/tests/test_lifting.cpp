#include <gtest/gtest.h>

#include "thetacat/lifting.hpp"

using namespace thetacat;

namespace {

NervePtr nerve_of(const ThetaSitePtr& site, const NCatPtr& c, const std::string& name) {
  return nerve(site, c, name);
}

}  // namespace

TEST(Lifting, FindAndCountAgreeOnBoundarySquares) {
  auto site = make_theta_site(1, 1, 2);
  Interval it = build_interval(1);
  NervePtr j = nerve_of(site, it.j, "J");
  PresheafPtr one = terminal_presheaf(site);
  PresheafMap f = to_terminal(j, one);
  for (const LabeledMap& g : boundary_generators(site)) {
    for (const PresheafMap& bottom : enumerate_maps(g.map.target, one)) {
      for (const PresheafMap& top : enumerate_maps(g.map.source, j)) {
        LiftingProblem p{g.map, f, top, bottom};
        ASSERT_TRUE(commutes(p));
        std::size_t n = count_lifts(p);
        EXPECT_EQ(find_lift(p).has_value(), n > 0);
        // a map into the chaotic category is fixed by its objects
        bool no_points = g.map.source->size(*site->terminal()) == 0;
        EXPECT_EQ(n, no_points ? 2u : 1u) << g.label;
      }
    }
  }
}

TEST(Lifting, LiftsSolveBothTriangles) {
  auto site = make_theta_site(2, 1, 2);
  Interval it = build_interval(2);
  NervePtr j2 = nerve_of(site, it.j, "J_2");
  NervePtr d1 = nerve_of(site, it.globe, "D_1");
  PresheafMap f = nerve_map(j2, d1, it.collapse);
  FinitelyGenerated bd = boundary(site, Table{{1}, {}});
  auto y = representable(site, Table{{1}, {}});
  for (const PresheafMap& bottom : enumerate_maps(y, d1)) {
    MapConstraints tc;
    tc.filter = [&](ObjId a, Elem x, Elem v) {
      return f.component[a][v] == bottom.component[a][bd.inclusion.component[a][x]];
    };
    for (const PresheafMap& top : enumerate_maps(bd.presheaf, j2, tc)) {
      LiftingProblem p{bd.inclusion, f, top, bottom};
      auto h = find_lift(p);
      ASSERT_TRUE(h.has_value());
      EXPECT_EQ(compose(*h, bd.inclusion), top);
      EXPECT_EQ(compose(f, *h), bottom);
    }
  }
}

TEST(Lifting, NonMonoLeftLegWithSplitTop) {
  // u: two points -> one point; a top separating them cannot factor through u
  auto site = make_theta_site(1, 1, 1);
  PresheafPtr one = terminal_presheaf(site);
  CoproductPtr two = coproduct(one, one);
  PresheafMap u = copairing(two, identity_map(one), identity_map(one));
  NervePtr j = nerve(site, build_interval(1).j, "J");
  PresheafMap f = to_terminal(j, one);
  auto tops = enumerate_maps(two, j);
  std::size_t none = 0, one_lift = 0;
  for (const PresheafMap& top : tops) {
    LiftingProblem p{u, f, top, identity_map(one)};
    std::size_t n = count_lifts(p);
    (n == 0 ? none : one_lift) += 1;
    EXPECT_EQ(find_lift(p).has_value(), n > 0);
  }
  EXPECT_EQ(none, 2u);
  EXPECT_EQ(one_lift, 2u);
}

TEST(Lifting, TrivialFibrationsOfChaoticNerves) {
  auto site = make_theta_site(2, 2, 2);
  PresheafPtr one = terminal_presheaf(site);
  NervePtr j = nerve(site, build_interval(1).j, "J");
  RlpReport r = check_trivial_fibration(to_terminal(j, one), site);
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.squares, 0u);
  EXPECT_EQ(r.bounds, site->bounds());
}

TEST(Lifting, NerveOfJ2CollapseIsNotTrivialFibration) {
  auto site = make_theta_site(2, 1, 2);
  Interval it = build_interval(2);
  PresheafMap f = nerve_map(nerve(site, it.j, "J_2"), nerve(site, it.globe, "D_1"), it.collapse);
  RlpReport r = check_trivial_fibration(f, site);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->label, "boundary(1 1 / 0)");
}

TEST(Lifting, IntervalPushoutProductCounts) {
  auto site = make_theta_site(1, 1, 2);
  IntervalData i = nerve_interval(site);
  FinitelyGenerated bd = boundary(site, Table::globe(1));
  PresheafMap m = interval_pushout_product(bd.inclusion, i, EndpointMode::Both);
  ObjId p = *site->find(Table::globe(0)), e = *site->find(Table::globe(1));
  EXPECT_EQ(m.source->size(p), 4u);
  EXPECT_EQ(m.target->size(p), 4u);
  EXPECT_EQ(m.source->size(e), 10u);
  EXPECT_EQ(m.target->size(e), 12u);
  EXPECT_TRUE(is_mono(m));
  EXPECT_TRUE(is_natural(m));
  PresheafMap zero = interval_pushout_product(bd.inclusion, i, EndpointMode::Zero);
  // U x I + V x {0} - U x {0}: at (1), 8 + 3 - 2
  EXPECT_EQ(zero.source->size(e), 9u);
}

TEST(Lifting, IntervalPushoutProductRejectsNonMono) {
  auto site = make_theta_site(1, 1, 1);
  PresheafPtr one = terminal_presheaf(site);
  CoproductPtr two = coproduct(one, one);
  PresheafMap u = copairing(two, identity_map(one), identity_map(one));
  EXPECT_THROW(interval_pushout_product(u, nerve_interval(site), EndpointMode::Both),
               std::invalid_argument);
}

TEST(Lifting, AnodyneGeneratorShape) {
  auto site = make_theta_site(2, 1, 2);
  FinitelyGenerated sp = spine(site, Table{{1, 1}, {0}});
  GeneratorSet s = {{"spine(1 1 / 0)", sp.inclusion}};
  GeneratorSet g = anodyne_generators(s, nerve_interval(site), 1, site);
  ASSERT_EQ(g.size(), 2 + 2 * site->tables().size());
  EXPECT_EQ(g[0].label, "L0:spine(1 1 / 0)");
  EXPECT_EQ(g[1].label, "L1:interval(spine(1 1 / 0))");
  for (const LabeledMap& m : g) {
    EXPECT_TRUE(is_mono(m.map)) << m.label;
    EXPECT_TRUE(is_natural(m.map)) << m.label;
  }
}

TEST(Lifting, QcatGeneratorsOnDelta) {
  auto site = make_theta_site(1, 1, 3);
  GeneratorSet g = qcat_generators(site);
  ASSERT_EQ(g.size(), site->tables().size());
  for (const LabeledMap& m : g) EXPECT_TRUE(is_mono(m.map)) << m.label;
  auto two = make_theta_site(2, 2, 2);
  GeneratorSet c = qcat_generators(two, LocalizerPart::Collapse);
  GeneratorSet s = qcat_generators(two, LocalizerPart::Sections);
  EXPECT_EQ(c.size(), two->tables().size() + 1);
  EXPECT_EQ(s.size(), two->tables().size() + 2);
  EXPECT_FALSE(is_mono(c.back().map));
  EXPECT_TRUE(is_mono(s.back().map));
}

TEST(Lifting, TransportKeepsCells) {
  auto small = make_theta_site(2, 1, 2);
  auto large = make_theta_site(2, 2, 3);
  Interval it = build_interval(2);
  NervePtr a = nerve(small, it.j, "J_2"), b = nerve(small, it.globe, "D_1");
  NervePtr a2 = nerve(large, it.j, "J_2"), b2 = nerve(large, it.globe, "D_1");
  PresheafMap f = nerve_map(a, b, it.collapse);
  PresheafMap f2 = nerve_map(a2, b2, it.collapse);
  EXPECT_EQ(transport(f, a2, b2), f2);
}

TEST(Lifting, RetractOfProductWithPoint) {
  // f = N(J) -> 1 is a retract of g = N(J) x N(J) -> N(J) via the point 0.
  auto site = make_theta_site(1, 1, 2);
  IntervalData i = nerve_interval(site);
  PresheafPtr x = i.interval, one = terminal_presheaf(site);
  PresheafMap f = to_terminal(x, one);
  ProductPtr xz = product(x, x);
  PresheafMap g = product_projection(xz, 1);
  PresheafMap point = compose(i.end0, to_terminal(x, i.point));
  PresheafMap section = pairing(identity_map(x), point, xz);      // X -> X x Z
  PresheafMap retraction = product_projection(xz, 0);              // X x Z -> X
  PresheafMap base_in = i.end0;                                    // 1 -> Z
  ASSERT_EQ(compose(retraction, section), identity_map(x));
  ASSERT_EQ(compose(g, section), compose(base_in, f));
  std::size_t checked = 0;
  for (const LabeledMap& u : boundary_generators(site)) {
    for (const PresheafMap& bottom : enumerate_maps(u.map.target, one)) {
      MapConstraints tc;
      for (const PresheafMap& top : enumerate_maps(u.map.source, x, tc)) {
        LiftingProblem over_f{u.map, f, top, bottom};
        LiftingProblem over_g{u.map, g, compose(section, top),
                              compose(base_in, bottom)};
        ASSERT_TRUE(commutes(over_g));
        auto h = find_lift(over_g);
        ASSERT_TRUE(h.has_value());
        PresheafMap back = compose(retraction, *h);
        EXPECT_EQ(compose(back, u.map), top);
        EXPECT_EQ(compose(f, back), bottom);
        EXPECT_TRUE(find_lift(over_f).has_value());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Lifting, CounterexampleAtTwo) {
  CounterexampleReport r = verify_counterexample(2, 2);
  EXPECT_FALSE(r.rlp.holds);
  ASSERT_TRUE(r.rlp.witness.has_value());
  EXPECT_TRUE(r.named_square_no_lift);
  EXPECT_TRUE(r.larger_bounds_no_lift);
  EXPECT_TRUE(r.iso_fibration);
  EXPECT_TRUE(r.anodyne.holds);
  EXPECT_TRUE(r.ok());
}

TEST(Lifting, NerveOfJ2IsNotTwoQuasiCategory) {
  NotQcatReport r = check_not_2qcat();
  EXPECT_TRUE(r.left_is_mono);
  EXPECT_EQ(r.domain_points, 4u);
  EXPECT_EQ(r.codomain_points, 4u);
  EXPECT_FALSE(r.rlp.holds);
  EXPECT_TRUE(r.rlp.witness.has_value());
}
