#include <algorithm>
#include <map>
#include <numeric>

#include "thetacat/ncat.hpp"

namespace thetacat {

NCatPtr wreath_delta1(const NCatPtr& c) {
  EnrichedData data;
  data.objects = 2;
  data.level = c->level + 1;
  NCatPtr point = terminal_ncat(c->level);
  data.hom = {{point, c}, {nullptr, point}};
  data.unit = {0, 0};
  data.compose = [](int i, int j, int l, int, int g, int f) {
    if (i == j && j == l) return 0;
    return i == j ? g : f;
  };
  return std::make_shared<const FiniteNCat>(flatten(data).cat);
}

NFunctor wreath_delta1(const NFunctor& u, const NCatPtr& source, const NCatPtr& target) {
  NFunctor r{source, target, {}};
  r.map.push_back({0, 1});
  int n = u.source->level;
  for (int d = 1; d <= n + 1; ++d) {
    int cs = u.source->counts[d - 1];
    int ct = u.target->counts[d - 1];
    std::vector<int> m(source->counts[d]);
    m[0] = 0;
    for (int x = 0; x < cs; ++x) m[1 + x] = 1 + u.map[d - 1][x];
    m[1 + cs] = 1 + ct;
    r.map.push_back(std::move(m));
  }
  return r;
}

namespace {

NFunctor constant_object(const NCatPtr& point, const NCatPtr& c, int object) {
  NFunctor r{point, c, {}};
  for (int k = 0; k <= c->level; ++k) r.map.push_back({c->identity(0, k, object)});
  return r;
}

NFunctor to_point(const NCatPtr& c, const NCatPtr& point) {
  NFunctor r{c, point, {}};
  for (int k = 0; k <= c->level; ++k) r.map.emplace_back(c->counts[k], 0);
  return r;
}

}  // namespace

Interval build_interval(int k) {
  if (k < 1) throw std::invalid_argument("interval index must be at least 1");
  Interval it;
  it.j = simply_connected_groupoid(1);
  it.globe = terminal_ncat(1);
  it.collapse = to_point(it.j, it.globe);
  it.section0 = constant_object(it.globe, it.j, 0);
  it.section1 = constant_object(it.globe, it.j, 1);
  for (int step = 2; step <= k; ++step) {
    NCatPtr j = wreath_delta1(it.j);
    NCatPtr g = wreath_delta1(it.globe);
    it.collapse = wreath_delta1(it.collapse, j, g);
    it.section0 = wreath_delta1(it.section0, g, j);
    it.section1 = wreath_delta1(it.section1, g, j);
    it.j = j;
    it.globe = g;
  }
  return it;
}

Truncation truncate(const NCatPtr& c) {
  Truncation t;
  int arrows = c->level >= 1 ? c->counts[1] : 0;
  std::vector<int> parent(arrows);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (c->level >= 2)
    for (int x = 0; x < c->counts[2]; ++x) {
      int a = find(c->src[2][x]), b = find(c->tgt[2][x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  t.object_class.resize(c->counts[0]);
  std::iota(t.object_class.begin(), t.object_class.end(), 0);
  t.arrow_class.assign(arrows, -1);
  std::vector<int> rep;
  for (int x = 0; x < arrows; ++x) {
    int r = find(x);
    if (t.arrow_class[r] < 0) {
      t.arrow_class[r] = static_cast<int>(rep.size());
      rep.push_back(r);
    }
    t.arrow_class[x] = t.arrow_class[r];
  }
  int level = std::min(c->level, 1);
  FiniteNCat r = FiniteNCat::with_counts(level, level == 1 ? std::vector<int>{c->counts[0], static_cast<int>(rep.size())}
                                                           : std::vector<int>{c->counts[0]});
  if (level == 1) {
    for (std::size_t a = 0; a < rep.size(); ++a) {
      r.src[1][a] = c->src[1][rep[a]];
      r.tgt[1][a] = c->tgt[1][rep[a]];
    }
    for (int o = 0; o < c->counts[0]; ++o) r.ident[0][o] = t.arrow_class[c->ident[0][o]];
    for (int g = 0; g < arrows; ++g)
      for (int f = 0; f < arrows; ++f) {
        int v = c->compose(0, 1, g, f);
        if (v < 0) continue;
        int gc = t.arrow_class[g], fc = t.arrow_class[f], vc = t.arrow_class[v];
        int prev = r.compose(0, 1, gc, fc);
        if (prev >= 0 && prev != vc)
          throw std::logic_error("composition does not descend to the truncation");
        r.set_compose(0, 1, gc, fc, vc);
      }
  }
  t.cat = std::make_shared<const FiniteNCat>(std::move(r));
  return t;
}

NFunctor truncate(const NFunctor& u, const Truncation& s, const Truncation& t) {
  NFunctor r{s.cat, t.cat, {u.map[0]}};
  if (s.cat->level >= 1) {
    std::vector<int> m(s.cat->counts[1], -1);
    for (std::size_t x = 0; x < s.arrow_class.size(); ++x)
      m[s.arrow_class[x]] = t.arrow_class[u.map[1][x]];
    r.map.push_back(std::move(m));
  }
  return r;
}

NCatPtr truncate_right(const NCatPtr& c) {
  int level = std::min(c->level, 1);
  std::vector<int> counts(c->counts.begin(), c->counts.begin() + level + 1);
  FiniteNCat r = FiniteNCat::with_counts(level, counts);
  if (level == 1) {
    r.src[1] = c->src[1];
    r.tgt[1] = c->tgt[1];
    r.ident[0] = c->ident[0];
    r.comp[1][0] = c->comp[1][0];
  }
  return std::make_shared<const FiniteNCat>(std::move(r));
}

NFunctor truncate_right(const NFunctor& u) {
  int level = std::min(u.source->level, 1);
  NFunctor r{truncate_right(u.source), truncate_right(u.target), {}};
  for (int k = 0; k <= level; ++k) r.map.push_back(u.map[k]);
  return r;
}

bool is_fully_faithful(const NFunctor& u) {
  const FiniteNCat& c = *u.source;
  const FiniteNCat& d = *u.target;
  for (int k = 0; k < c.level; ++k) {
    // Cells of dim k+1 grouped by boundary, in source and target.
    std::map<std::pair<int, int>, std::vector<int>> cs, ds;
    for (int x = 0; x < c.counts[k + 1]; ++x) cs[{c.src[k + 1][x], c.tgt[k + 1][x]}].push_back(x);
    for (int y = 0; y < d.counts[k + 1]; ++y) ds[{d.src[k + 1][y], d.tgt[k + 1][y]}].push_back(y);
    for (int a = 0; a < c.counts[k]; ++a)
      for (int b = 0; b < c.counts[k]; ++b) {
        if (k > 0 && (c.src[k][a] != c.src[k][b] || c.tgt[k][a] != c.tgt[k][b])) continue;
        auto it = cs.find({a, b});
        std::vector<int> images;
        if (it != cs.end())
          for (int x : it->second) images.push_back(u.map[k + 1][x]);
        std::sort(images.begin(), images.end());
        auto jt = ds.find({u.map[k][a], u.map[k][b]});
        std::vector<int> expected = jt == ds.end() ? std::vector<int>{} : jt->second;
        if (images != expected) return false;
      }
  }
  return true;
}

namespace {

bool invertible(const FiniteNCat& c, int f) {
  for (int g = 0; g < c.counts[1]; ++g) {
    int gf = c.compose(0, 1, g, f), fg = c.compose(0, 1, f, g);
    if (gf >= 0 && fg >= 0 && gf == c.ident[0][c.src[1][f]] && fg == c.ident[0][c.tgt[1][f]])
      return true;
  }
  return false;
}

// Every invertible arrow of the target ending (end=1) or starting (end=0)
// at the image of an object lifts to an invertible arrow with that end.
bool iso_lifting(const NFunctor& u, bool at_target) {
  const FiniteNCat& c = *u.source;
  const FiniteNCat& d = *u.target;
  for (int x = 0; x < c.counts[0]; ++x)
    for (int g = 0; g < d.counts[1]; ++g) {
      if (!invertible(d, g)) continue;
      int end = at_target ? d.tgt[1][g] : d.src[1][g];
      if (end != u.map[0][x]) continue;
      bool found = false;
      for (int f = 0; f < c.counts[1] && !found; ++f) {
        int fe = at_target ? c.tgt[1][f] : c.src[1][f];
        found = fe == x && u.map[1][f] == g && invertible(c, f);
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

bool is_iso_fibration(const NFunctor& u) {
  if (u.source->level != 1 || u.target->level != 1)
    throw std::invalid_argument("iso-fibration check is defined for 1-categories");
  bool a = iso_lifting(u, true);
  bool b = iso_lifting(u, false);
  if (a != b) throw std::logic_error("iso-fibration variants disagree");
  return a;
}

UniqueLiftResult unique_lift(const NFunctor& u, const NFunctor& v, const NFunctor& f,
                             const NFunctor& g) {
  if (!(compose(v, f) == compose(g, u))) throw std::invalid_argument("square does not commute");
  const NCatPtr& b = u.target;
  const NCatPtr& c = v.source;
  SearchOptions opts;
  opts.preassign.resize(b->level + 1);
  for (int k = 0; k <= b->level; ++k) {
    opts.preassign[k].assign(b->counts[k], -1);
    for (int x = 0; x < u.source->counts[k]; ++x) {
      int& slot = opts.preassign[k][u.map[k][x]];
      if (slot >= 0 && slot != f.map[k][x]) return {LiftOutcome::NoLift, std::nullopt};
      slot = f.map[k][x];
    }
  }
  opts.filter = [&](int k, int x, int y) { return v.map[k][y] == g.map[k][x]; };
  opts.limit = 2;
  auto lifts = enumerate_functors(b, c, opts);
  if (lifts.empty()) return {LiftOutcome::NoLift, std::nullopt};
  if (lifts.size() > 1) return {LiftOutcome::MultipleLifts, std::nullopt};
  return {LiftOutcome::UniqueLift, lifts.front()};
}

}  // namespace thetacat
