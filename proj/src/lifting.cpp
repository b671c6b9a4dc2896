#include "thetacat/lifting.hpp"

#include <algorithm>
#include <set>

namespace thetacat {

bool commutes(const LiftingProblem& p) {
  return compose(p.right, p.top) == compose(p.bottom, p.left);
}

namespace {

// Preassignment h(u(x)) = top(x); nullopt when top is not constant on fibres of u.
std::optional<std::vector<std::vector<Elem>>> preassignment(const LiftingProblem& p) {
  std::vector<std::vector<Elem>> pre;
  const PresheafPtr& v = p.left.target;
  for (ObjId a = 0; a < v->site().size(); ++a) {
    std::vector<Elem> slots(v->size(a), -1);
    for (std::size_t x = 0; x < p.left.component[a].size(); ++x) {
      Elem& s = slots[p.left.component[a][x]];
      if (s >= 0 && s != p.top.component[a][x]) return std::nullopt;
      s = p.top.component[a][x];
    }
    pre.push_back(std::move(slots));
  }
  return pre;
}

void for_each_lift(const LiftingProblem& p, const std::function<bool(const PresheafMap&)>& visit) {
  auto pre = preassignment(p);
  if (!pre) return;
  MapConstraints c;
  c.preassign = std::move(*pre);
  const auto& right = p.right.component;
  const auto& bottom = p.bottom.component;
  c.filter = [&](ObjId a, Elem v, Elem y) { return right[a][y] == bottom[a][v]; };
  for_each_map(p.left.target, p.right.source, c, visit);
}

}  // namespace

std::optional<PresheafMap> find_lift(const LiftingProblem& p) {
  std::optional<PresheafMap> out;
  for_each_lift(p, [&](const PresheafMap& h) {
    out = h;
    return false;
  });
  return out;
}

std::size_t count_lifts(const LiftingProblem& p, std::size_t limit) {
  std::size_t n = 0;
  for_each_lift(p, [&](const PresheafMap&) {
    ++n;
    return limit == 0 || n < limit;
  });
  return n;
}

RlpReport has_rlp(const PresheafMap& f, const GeneratorSet& gens) {
  RlpReport report;
  report.bounds = f.source->site().bounds();
  for (std::size_t gi = 0; gi < gens.size() && report.holds; ++gi) {
    const PresheafMap& u = gens[gi].map;
    for_each_map(u.target, f.target, {}, [&](const PresheafMap& bottom) {
      MapConstraints tc;
      tc.filter = [&](ObjId a, Elem x, Elem y) {
        return f.component[a][y] == bottom.component[a][u.component[a][x]];
      };
      bool keep = true;
      for_each_map(u.source, f.source, tc, [&](const PresheafMap& top) {
        ++report.squares;
        LiftingProblem p{u, f, top, bottom};
        if (!find_lift(p)) {
          report.holds = false;
          report.witness = FailingSquare{gi, gens[gi].label, top, bottom};
          keep = false;
        }
        return keep;
      });
      return keep;
    });
  }
  return report;
}

GeneratorSet boundary_generators(const ThetaSitePtr& site) {
  GeneratorSet out;
  for (const Table& t : site->tables()) {
    FinitelyGenerated b = boundary(site, t);
    out.push_back({"boundary(" + t.str() + ")", b.inclusion});
  }
  return out;
}

RlpReport check_trivial_fibration(const PresheafMap& f, const ThetaSitePtr& site) {
  return has_rlp(f, boundary_generators(site));
}

IntervalData nerve_interval(const ThetaSitePtr& site) {
  Interval it = build_interval(1);
  NervePtr j = nerve(site, it.j, "J");
  NervePtr point = nerve(site, it.globe, "D_0");
  return {j, point, nerve_map(point, j, it.section0), nerve_map(point, j, it.section1)};
}

PresheafMap interval_pushout_product(const PresheafMap& u, const IntervalData& i, EndpointMode mode) {
  if (!is_mono(u)) throw std::invalid_argument("interval pushout-product needs a monomorphism");
  const PresheafPtr& v = u.target;
  ProductPtr p = product(v, i.interval);
  std::vector<std::vector<Elem>> members;
  for (ObjId a = 0; a < v->site().size(); ++a) {
    std::set<Elem> m;
    for (Elem x : u.component[a])
      for (Elem e = 0; e < static_cast<Elem>(i.interval->size(a)); ++e) m.insert(p->pair(a, x, e));
    std::vector<Elem> ends;
    if (mode != EndpointMode::One) ends.push_back(i.end0.component[a][0]);
    if (mode != EndpointMode::Zero) ends.push_back(i.end1.component[a][0]);
    for (Elem x = 0; x < static_cast<Elem>(v->size(a)); ++x)
      for (Elem e : ends) m.insert(p->pair(a, x, e));
    members.emplace_back(m.begin(), m.end());
  }
  std::string tag = mode == EndpointMode::Both ? "both" : mode == EndpointMode::Zero ? "0" : "1";
  auto sub = std::make_shared<const SubPresheaf>(p, std::move(members),
                                                 "ipp_" + tag + "(" + u.source->name() + ")");
  return inclusion(sub);
}

GeneratorSet anodyne_generators(const GeneratorSet& s, const IntervalData& i, int depth,
                                const ThetaSitePtr& site) {
  if (depth < 0) throw std::invalid_argument("negative tower depth");
  GeneratorSet out, layer;
  for (const LabeledMap& g : s) {
    if (!is_mono(g.map)) throw std::invalid_argument("anodyne generators need monomorphisms");
    layer.push_back({"L0:" + g.label, g.map});
  }
  out = layer;
  for (int j = 1; j <= depth; ++j) {
    GeneratorSet next;
    for (const LabeledMap& g : layer) {
      std::string base = g.label.substr(g.label.find(':') + 1);
      next.push_back({"L" + std::to_string(j) + ":interval(" + base + ")",
                      interval_pushout_product(g.map, i, EndpointMode::Both)});
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  for (const LabeledMap& b : boundary_generators(site)) {
    out.push_back({"endpoint0:" + b.label, interval_pushout_product(b.map, i, EndpointMode::Zero)});
    out.push_back({"endpoint1:" + b.label, interval_pushout_product(b.map, i, EndpointMode::One)});
  }
  return out;
}

GeneratorSet spine_generators(const ThetaSitePtr& site) {
  GeneratorSet out;
  for (const Table& t : site->tables()) out.push_back({"spine(" + t.str() + ")", spine(site, t).inclusion});
  return out;
}

GeneratorSet qcat_generators(const ThetaSitePtr& site, LocalizerPart part) {
  GeneratorSet out = spine_generators(site);
  int n = site->level();
  for (int k = 2; k <= n; ++k) {
    Interval it = build_interval(k);
    NervePtr jk = nerve(site, it.j, "J_" + std::to_string(k));
    NervePtr dk = nerve(site, it.globe, "D_" + std::to_string(k - 1));
    if (part == LocalizerPart::Collapse) {
      out.push_back({"N(j_" + std::to_string(k) + ")", nerve_map(jk, dk, it.collapse)});
    } else {
      out.push_back({"N(s0_" + std::to_string(k) + ")", nerve_map(dk, jk, it.section0)});
      out.push_back({"N(s1_" + std::to_string(k) + ")", nerve_map(dk, jk, it.section1)});
    }
  }
  return out;
}

PresheafMap transport(const PresheafMap& m, const PresheafPtr& source, const PresheafPtr& target) {
  const Site& from = m.source->site();
  const Site& to = source->site();
  std::vector<std::vector<Elem>> pre(to.size());
  for (ObjId b = 0; b < to.size(); ++b) pre[b].assign(source->size(b), -1);
  auto find_object = [&](ObjId a) {
    for (ObjId b = 0; b < to.size(); ++b)
      if (to.label(b) == from.label(a)) return b;
    throw BoundExhausted("object " + from.label(a) + " missing from the target site");
  };
  auto find_element = [](const Presheaf& x, ObjId b, const std::string& code) {
    for (Elem e = 0; e < static_cast<Elem>(x.size(b)); ++e)
      if (x.encode(b, e) == code) return e;
    throw std::invalid_argument("element " + code + " has no counterpart");
  };
  for (auto [a, x] : nondegenerate_cells(*m.source)) {
    ObjId b = find_object(a);
    Elem e = find_element(*source, b, m.source->encode(a, x));
    pre[b][e] = find_element(*target, b, m.target->encode(a, m.component[a][x]));
  }
  MapConstraints c;
  c.preassign = std::move(pre);
  auto maps = enumerate_maps(source, target, c);
  if (maps.size() != 1) throw std::logic_error("transported map is not determined by its cells");
  return maps.front();
}

namespace {

// Square over f whose top sends the edges 0->1, 1->2, 0->2 of the triangle
// boundary to the given 1-cells and whose bottom does the same; true when it
// commutes and has no lift.
bool triangle_square_has_no_lift(const NervePtr& top_nerve, const NervePtr& bottom_nerve,
                                 const FinitelyGenerated& bd, const RepresentablePtr& y,
                                 const PresheafMap& f, const std::vector<int>& top_edges,
                                 const std::vector<int>& bottom_edges) {
  const ThetaSite& s = top_nerve->theta();
  ObjId edge = *s.find(Table::globe(1));
  int gen = free_ncat(Table::globe(1), s.level()).globes[0].second;
  std::vector<std::pair<int, int>> ends = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::vector<Elem>> top_pre(s.size()), bottom_pre(s.size());
  for (ObjId b = 0; b < s.size(); ++b) {
    top_pre[b].assign(bd.presheaf->size(b), -1);
    bottom_pre[b].assign(y->size(b), -1);
  }
  auto image_of = [&](const NervePtr& x, int cell) -> Elem {
    for (Elem e = 0; e < static_cast<Elem>(x->size(edge)); ++e)
      if (x->element(edge, e).map[1][gen] == cell) return e;
    return -1;
  };
  int found = 0;
  for (MorId g : s.hom(edge, y->object())) {
    const NFunctor& u = s.morphism(g).functor;
    if (!s.is_mono(g)) continue;
    for (int q = 0; q < 3; ++q) {
      if (u.map[0][0] != ends[q].first || u.map[0][1] != ends[q].second) continue;
      Elem top_e = image_of(top_nerve, top_edges[q]);
      Elem bottom_e = image_of(bottom_nerve, bottom_edges[q]);
      auto inside = bd.presheaf->index(edge, y->index(g));
      if (top_e < 0 || bottom_e < 0 || !inside) return false;
      top_pre[edge][*inside] = top_e;
      bottom_pre[edge][y->index(g)] = bottom_e;
      ++found;
    }
  }
  if (found != 3) return false;
  MapConstraints tc, bc;
  tc.preassign = std::move(top_pre);
  bc.preassign = std::move(bottom_pre);
  auto tops = enumerate_maps(bd.presheaf, top_nerve, tc);
  auto bottoms = enumerate_maps(y, bottom_nerve, bc);
  if (tops.size() != 1 || bottoms.size() != 1) return false;
  LiftingProblem p{bd.inclusion, f, tops.front(), bottoms.front()};
  return commutes(p) && count_lifts(p) == 0;
}

}  // namespace

CounterexampleReport verify_counterexample(int n, int k, int anodyne_width) {
  if (k != 2 || n < 2) throw std::invalid_argument("counterexample is built for k = 2 <= n");
  CounterexampleReport r;
  r.table = Table{{k - 1, k - 1}, {k - 2}};
  Interval it = build_interval(k);
  auto run = [&](const ThetaSitePtr& site) {
    NervePtr jk = nerve(site, it.j, "J_" + std::to_string(k));
    NervePtr dk = nerve(site, it.globe, "D_" + std::to_string(k - 1));
    PresheafMap f = nerve_map(jk, dk, it.collapse);
    FinitelyGenerated bd = boundary(site, r.table);
    return std::make_tuple(jk, dk, f, bd);
  };
  ThetaSitePtr site = make_theta_site(n, k - 1, 2);
  auto [jk, dk, f, bd] = run(site);
  r.rlp = has_rlp(f, {{"boundary(" + r.table.str() + ")", bd.inclusion}});

  {
    // id_0, a, b on the edges 0->1, 1->2, 0->2; the bottom collapses 0 and 1.
    const FiniteNCat& j2 = *jk->category();
    int a = -1, b = -1;
    for (int x = 0; x < j2.counts[1]; ++x)
      if (j2.src[1][x] == 0 && j2.tgt[1][x] == 1) (a < 0 ? a : b) = x;
    const FiniteNCat& d1 = *dk->category();
    int gen = -1;
    for (int x = 0; x < d1.counts[1]; ++x)
      if (!d1.is_identity(1, x)) gen = x;
    auto y = representable(site, r.table);
    r.named_square_no_lift = triangle_square_has_no_lift(jk, dk, bd, y, f, {j2.ident[0][0], a, b},
                                                         {d1.ident[0][0], gen, gen});
  }

  if (r.rlp.witness) {
    ThetaSitePtr larger = make_theta_site(n, std::min(n, k), 3);
    r.larger_bounds = larger->bounds();
    auto [jk2, dk2, f2, bd2] = run(larger);
    auto y2 = representable(larger, r.table);
    PresheafMap top = transport(r.rlp.witness->top, bd2.presheaf, jk2);
    PresheafMap bottom = transport(r.rlp.witness->bottom, y2, dk2);
    LiftingProblem p{bd2.inclusion, f2, top, bottom};
    r.larger_bounds_no_lift = commutes(p) && count_lifts(p) == 0;
  }

  r.iso_fibration = is_iso_fibration(truncate_right(it.collapse));

  ThetaSitePtr small = make_theta_site(n, std::min(n, k), anodyne_width);
  auto [jk3, dk3, f3, bd3] = run(small);
  GeneratorSet gens = anodyne_generators(spine_generators(small), nerve_interval(small), 1, small);
  r.anodyne_generators = gens.size();
  r.anodyne = has_rlp(f3, gens);
  return r;
}

NotQcatReport check_not_2qcat() {
  ThetaSitePtr site = make_theta_site(2, 2, 2);
  Interval it = build_interval(2);
  NervePtr j2 = nerve(site, it.j, "J_2");
  NervePtr d1 = nerve(site, it.globe, "D_1");
  PresheafMap u = nerve_map(d1, j2, it.section0);
  IntervalData i = nerve_interval(site);
  PresheafMap left = interval_pushout_product(u, i, EndpointMode::Both);
  NotQcatReport r;
  r.left_is_mono = is_mono(left);
  ObjId point = *site->terminal();
  r.domain_points = left.source->size(point);
  r.codomain_points = left.target->size(point);
  PresheafPtr one = terminal_presheaf(site);
  r.rlp = has_rlp(to_terminal(j2, one), {{"interval(N(s0_2))", left}});
  return r;
}

}  // namespace thetacat
