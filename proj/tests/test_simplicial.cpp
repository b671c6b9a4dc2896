#include <gtest/gtest.h>

#include "thetacat/simplicial.hpp"

using namespace thetacat;

namespace {

ThetaSitePtr delta3() {
  static ThetaSitePtr s = make_delta_site(3);
  return s;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Simplicial, BuiltinsAreValid) {
  for (int m = 0; m <= 3; ++m) {
    EXPECT_TRUE(validate(standard_simplex(m)).empty());
    EXPECT_TRUE(validate(simplex_boundary(m)).empty());
    for (int k = 0; k <= m && m > 0; ++k) EXPECT_TRUE(validate(horn(m, k)).empty());
  }
  EXPECT_EQ(horn(2, 1).nondegenerate, (std::vector<int>{3, 2}));
  EXPECT_EQ(simplex_boundary(2).nondegenerate, (std::vector<int>{3, 3}));
}

TEST(Simplicial, StandardSimplexIsRepresentable) {
  auto d = delta3();
  for (int m = 0; m <= 3; ++m) {
    auto x = simplicial_presheaf(d, standard_simplex(m));
    auto y = representable(d, delta_bridge(m));
    for (ObjId a = 0; a < d->size(); ++a) EXPECT_EQ(x->size(a), y->size(a));
    // (sigma, subset) |-> the monotone map subset o sigma
    PresheafMap iso{x, y, {}};
    for (ObjId a = 0; a < d->size(); ++a) {
      std::vector<Elem> c;
      for (Elem e = 0; e < static_cast<Elem>(x->size(a)); ++e) {
        const SimplexElement& el = x->element(a, e);
        const std::string& name = x->data().names[el.level][el.simplex];
        std::vector<int> objects;
        for (int v : el.degeneracy) objects.push_back(name[v] - '0');
        Elem found = -1;
        for (Elem f = 0; f < static_cast<Elem>(y->size(a)); ++f)
          if (d->morphism(y->morphism(a, f)).functor.map[0] == objects) found = f;
        c.push_back(found);
      }
      iso.component.push_back(c);
    }
    EXPECT_TRUE(is_natural(iso));
    EXPECT_TRUE(is_iso(iso));
  }
}

TEST(Simplicial, BoundaryCounts) {
  auto d = delta3();
  for (int m = 1; m <= 3; ++m) {
    auto full = simplicial_presheaf(d, standard_simplex(m));
    auto bd = simplicial_presheaf(d, simplex_boundary(m));
    ObjId top = *d->find(delta_bridge(m));
    EXPECT_EQ(bd->size(top), full->size(top) - 1);
    ObjId point = *d->find(delta_bridge(0));
    EXPECT_EQ(bd->size(point), static_cast<std::size_t>(m + 1));
    auto inc = simplicial_inclusion(bd, full);
    EXPECT_TRUE(is_natural(inc));
    EXPECT_TRUE(is_mono(inc));
  }
  // nondegenerate cells of the boundary: proper nonempty subsets
  auto bd = simplicial_presheaf(d, simplex_boundary(3));
  std::size_t expected = 0;
  for (int k = 1; k <= 3; ++k) expected += binomial(4, k);
  EXPECT_EQ(nondegenerate_cells(*bd).size(), expected);
}

TEST(Simplicial, CircleAndCollapsedTriangle) {
  SimplicialSetFinite circle;
  circle.nondegenerate = {1, 1};
  circle.faces = {{}, {{{0, 0, {0}}, {0, 0, {0}}}}};
  EXPECT_TRUE(validate(circle).empty());
  auto d = delta3();
  auto c = simplicial_presheaf(d, circle);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(c->size(*d->find(delta_bridge(m))), static_cast<std::size_t>(m + 1));
  SimplicialSetFinite blob;
  blob.nondegenerate = {1, 0, 1};
  blob.faces = {{}, {}, {{{0, 0, {0, 0}}, {0, 0, {0, 0}}, {0, 0, {0, 0}}}}};
  EXPECT_TRUE(validate(blob).empty());
  auto b = simplicial_presheaf(d, blob);
  EXPECT_EQ(nondegenerate_cells(*b).size(), 2u);
}

TEST(Simplicial, InvalidDataIsRejected) {
  SimplicialSetFinite bad = standard_simplex(2);
  // make face 0 of the triangle equal to face 1
  bad.faces[2][0][0] = bad.faces[2][0][1];
  EXPECT_FALSE(validate(bad).empty());
  EXPECT_THROW(simplicial_presheaf(delta3(), bad), std::invalid_argument);
  EXPECT_THROW(simplicial_presheaf(make_delta_site(1), standard_simplex(2)), BoundExhausted);
}
