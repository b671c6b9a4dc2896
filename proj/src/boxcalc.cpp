#include "thetacat/boxcalc.hpp"

#include <random>
#include <sstream>

namespace thetacat {

ProductSitePtr make_bisite(const ThetaSitePtr& theta, const ThetaSitePtr& delta) {
  if (delta->level() != 1) throw std::invalid_argument("right factor must be a Delta site");
  return std::make_shared<const ProductSite>(theta, delta);
}

ThetaSitePtr theta_factor(const ProductSite& s) {
  auto t = std::dynamic_pointer_cast<const ThetaSite>(s.left());
  if (!t) throw std::invalid_argument("left factor is not a Theta site");
  return t;
}

ThetaSitePtr delta_factor(const ProductSite& s) {
  auto t = std::dynamic_pointer_cast<const ThetaSite>(s.right());
  if (!t || t->level() != 1) throw std::invalid_argument("right factor is not a Delta site");
  return t;
}

ExternalProduct::ExternalProduct(ProductSitePtr site, PresheafPtr left, PresheafPtr right)
    : Presheaf(site), bisite_(std::move(site)), left_(std::move(left)), right_(std::move(right)) {
  if (left_->site_ptr() != bisite_->left() || right_->site_ptr() != bisite_->right())
    throw std::invalid_argument("external product factors live on other sites");
}

std::size_t ExternalProduct::size(ObjId ab) const {
  auto [a, b] = bisite().split(ab);
  return left_->size(a) * right_->size(b);
}

Elem ExternalProduct::pair(ObjId ab, Elem x, Elem y) const {
  auto [a, b] = bisite().split(ab);
  (void)a;
  return static_cast<Elem>(x * right_->size(b) + y);
}

std::pair<Elem, Elem> ExternalProduct::split(ObjId ab, Elem z) const {
  Elem w = static_cast<Elem>(right_->size(bisite().split(ab).second));
  return {z / w, z % w};
}

std::string ExternalProduct::encode(ObjId ab, Elem z) const {
  auto [a, b] = bisite().split(ab);
  auto [x, y] = split(ab, z);
  return "(" + left_->encode(a, x) + "," + right_->encode(b, y) + ")";
}

std::vector<Elem> ExternalProduct::compute_action(MorId g) const {
  auto [gl, gr] = bisite().factors(g);
  ObjId from = site().target(g), to = site().source(g);
  const auto& al = left_->action(gl);
  const auto& ar = right_->action(gr);
  std::vector<Elem> out(size(from));
  for (Elem z = 0; z < static_cast<Elem>(out.size()); ++z) {
    auto [x, y] = split(from, z);
    out[z] = pair(to, al[x], ar[y]);
  }
  return out;
}

ExternalProductPtr external_product(const ProductSitePtr& site, const PresheafPtr& x, const PresheafPtr& y) {
  return std::make_shared<const ExternalProduct>(site, x, y);
}

PresheafMap external_product_map(const ExternalProductPtr& source, const ExternalProductPtr& target,
                                 const PresheafMap& u, const PresheafMap& v) {
  if (u.source != source->left() || u.target != target->left() || v.source != source->right() ||
      v.target != target->right())
    throw std::invalid_argument("external product map between mismatched factors");
  const auto& s = dynamic_cast<const ProductSite&>(source->site());
  PresheafMap m{source, target, {}};
  for (ObjId ab = 0; ab < s.size(); ++ab) {
    auto [a, b] = s.split(ab);
    std::vector<Elem> c(source->size(ab));
    for (Elem z = 0; z < static_cast<Elem>(c.size()); ++z) {
      auto [x, y] = source->split(ab, z);
      c[z] = target->pair(ab, u.component[a][x], v.component[b][y]);
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

ExternalProductPtr p_star(const ProductSitePtr& site, const PresheafPtr& x) {
  return external_product(site, x, terminal_presheaf(site->right()));
}

PresheafMap p_star(const ProductSitePtr& site, const PresheafMap& u) {
  PresheafPtr one = terminal_presheaf(site->right());
  return external_product_map(external_product(site, u.source, one), external_product(site, u.target, one), u,
                              identity_map(one));
}

ExternalProductPtr q_star(const ProductSitePtr& site, const PresheafPtr& y) {
  return external_product(site, terminal_presheaf(site->left()), y);
}

PresheafMap q_star(const ProductSitePtr& site, const PresheafMap& v) {
  PresheafPtr one = terminal_presheaf(site->left());
  return external_product_map(external_product(site, one, v.source), external_product(site, one, v.target),
                              identity_map(one), v);
}

PresheafMap pushout_product(const ProductSitePtr& site, const PresheafMap& u, const PresheafMap& v) {
  auto us = external_product(site, u.source, v.source);
  auto ut = external_product(site, u.source, v.target);
  auto vs = external_product(site, u.target, v.source);
  auto vt = external_product(site, u.target, v.target);
  PresheafMap to_ut = external_product_map(us, ut, identity_map(u.source), v);
  PresheafMap to_vs = external_product_map(us, vs, u, identity_map(v.source));
  PushoutPtr p = pushout(to_ut, to_vs);
  return pushout_copair(p, external_product_map(ut, vt, u, identity_map(v.target)),
                        external_product_map(vs, vt, identity_map(u.target), v));
}

MapSpacePresheaf::MapSpacePresheaf(SitePtr site, std::vector<PresheafPtr> probes, ProbeMap probe_map,
                                   PresheafPtr target, std::string label)
    : Presheaf(std::move(site)),
      probes_(std::move(probes)),
      probe_map_(std::move(probe_map)),
      target_(std::move(target)),
      label_(std::move(label)) {
  for (ObjId a = 0; a < this->site().size(); ++a) {
    elements_.push_back(enumerate_maps(probes_[a], target_));
    std::map<std::vector<std::vector<Elem>>, Elem> idx;
    for (Elem x = 0; x < static_cast<Elem>(elements_[a].size()); ++x) idx.emplace(elements_[a][x].component, x);
    index_.push_back(std::move(idx));
  }
}

std::optional<Elem> MapSpacePresheaf::index(ObjId a, const PresheafMap& m) const {
  auto it = index_[a].find(m.component);
  if (it == index_[a].end()) return std::nullopt;
  return it->second;
}

std::string MapSpacePresheaf::encode(ObjId a, Elem x) const {
  std::ostringstream out;
  out << "{";
  for (const auto& level : elements_[a][x].component) {
    out << "[";
    for (std::size_t i = 0; i < level.size(); ++i) out << (i ? "," : "") << level[i];
    out << "]";
  }
  out << "}";
  return out.str();
}

std::vector<Elem> MapSpacePresheaf::compute_action(MorId g) const {
  ObjId from = site().target(g), to = site().source(g);
  PresheafMap pre = probe_map_(g);
  std::vector<Elem> out;
  for (const PresheafMap& m : elements_[from]) out.push_back(*index(to, compose(m, pre)));
  return out;
}

namespace {

RepresentablePtr yoneda(const SitePtr& site, ObjId a) {
  return std::make_shared<const RepresentablePresheaf>(site, a);
}

std::vector<RepresentablePtr> all_representables(const SitePtr& site) {
  std::vector<RepresentablePtr> out;
  for (ObjId a = 0; a < site->size(); ++a) out.push_back(yoneda(site, a));
  return out;
}

// Map of map spaces m -> post o m o pre(a).
PresheafMap induced(const MapSpacePtr& source, const MapSpacePtr& target,
                    const std::function<std::optional<PresheafMap>(ObjId)>& pre,
                    const std::optional<PresheafMap>& post) {
  PresheafMap out{source, target, {}};
  for (ObjId a = 0; a < source->site().size(); ++a) {
    std::optional<PresheafMap> p = pre(a);
    std::vector<Elem> c;
    for (Elem x = 0; x < static_cast<Elem>(source->size(a)); ++x) {
      PresheafMap m = source->element(a, x);
      if (p) m = compose(m, *p);
      if (post) m = compose(*post, m);
      c.push_back(*target->index(a, m));
    }
    out.component.push_back(std::move(c));
  }
  return out;
}

}  // namespace

MapSpacePtr under(const ProductSitePtr& site, const PresheafPtr& v, const BiPresheafPtr& x) {
  auto reps = all_representables(site->right());
  std::vector<PresheafPtr> probes;
  std::vector<ExternalProductPtr> eps;
  for (const auto& r : reps) eps.push_back(external_product(site, v, r));
  probes.assign(eps.begin(), eps.end());
  PresheafMap idv = identity_map(v);
  const Site& d = *site->right();
  auto probe_map = [site, reps, eps, idv, &d](MorId g) {
    ObjId b = d.source(g), a = d.target(g);
    return external_product_map(eps[b], eps[a], idv, representable_map(reps[b], reps[a], g));
  };
  return std::make_shared<const MapSpacePresheaf>(site->right(), probes, probe_map, x,
                                                  v->name() + "\\" + x->name());
}

MapSpacePtr over(const ProductSitePtr& site, const BiPresheafPtr& x, const PresheafPtr& t) {
  auto reps = all_representables(site->left());
  std::vector<ExternalProductPtr> eps;
  for (const auto& r : reps) eps.push_back(external_product(site, r, t));
  std::vector<PresheafPtr> probes(eps.begin(), eps.end());
  PresheafMap idt = identity_map(t);
  const Site& th = *site->left();
  auto probe_map = [site, reps, eps, idt, &th](MorId g) {
    ObjId b = th.source(g), a = th.target(g);
    return external_product_map(eps[b], eps[a], representable_map(reps[b], reps[a], g), idt);
  };
  return std::make_shared<const MapSpacePresheaf>(site->left(), probes, probe_map, x,
                                                  x->name() + "/" + t->name());
}

namespace {

// Identity between two separately built copies of one representable.
PresheafMap same_elements(const PresheafPtr& a, const PresheafPtr& b) {
  return PresheafMap{a, b, identity_map(a).component};
}

PresheafMap comparison(const PresheafMap& first, const PresheafMap& second, const PullbackPtr& fiber) {
  PresheafMap out{first.source, fiber, {}};
  for (ObjId a = 0; a < first.source->site().size(); ++a) {
    std::vector<Elem> c;
    for (Elem x = 0; x < static_cast<Elem>(first.source->size(a)); ++x)
      c.push_back(*fiber->index(a, first.component[a][x], second.component[a][x]));
    out.component.push_back(std::move(c));
  }
  return out;
}

}  // namespace

DivisionMap under_division(const ProductSitePtr& site, const PresheafMap& u, const PresheafMap& f) {
  MapSpacePtr vx = under(site, u.target, f.source), vy = under(site, u.target, f.target);
  MapSpacePtr ux = under(site, u.source, f.source), uy = under(site, u.source, f.target);
  auto restrict_along_u = [&](const MapSpacePtr& from, const MapSpacePtr& to) {
    return induced(from, to,
                   [&](ObjId m) -> std::optional<PresheafMap> {
                     auto s = std::dynamic_pointer_cast<const ExternalProduct>(to->probe(m));
                     auto t = std::dynamic_pointer_cast<const ExternalProduct>(from->probe(m));
                     return external_product_map(s, t, u, same_elements(s->right(), t->right()));
                   },
                   std::nullopt);
  };
  auto none = [](ObjId) -> std::optional<PresheafMap> { return std::nullopt; };
  PresheafMap u_y = restrict_along_u(vy, uy);
  PresheafMap f_u = induced(ux, uy, none, f);
  PullbackPtr fiber = pullback(u_y, f_u);
  PresheafMap f_v = induced(vx, vy, none, f);
  PresheafMap u_x = restrict_along_u(vx, ux);
  return {fiber, comparison(f_v, u_x, fiber)};
}

DivisionMap over_division(const ProductSitePtr& site, const PresheafMap& f, const PresheafMap& v) {
  MapSpacePtr xt = over(site, f.source, v.target), yt = over(site, f.target, v.target);
  MapSpacePtr xs = over(site, f.source, v.source), ys = over(site, f.target, v.source);
  auto restrict_along_v = [&](const MapSpacePtr& from, const MapSpacePtr& to) {
    return induced(from, to,
                   [&](ObjId a) -> std::optional<PresheafMap> {
                     auto s = std::dynamic_pointer_cast<const ExternalProduct>(to->probe(a));
                     auto t = std::dynamic_pointer_cast<const ExternalProduct>(from->probe(a));
                     return external_product_map(s, t, same_elements(s->left(), t->left()), v);
                   },
                   std::nullopt);
  };
  auto none = [](ObjId) -> std::optional<PresheafMap> { return std::nullopt; };
  PresheafMap v_y = restrict_along_v(yt, ys);
  PresheafMap f_s = induced(xs, ys, none, f);
  PullbackPtr fiber = pullback(v_y, f_s);
  PresheafMap f_t = induced(xt, yt, none, f);
  PresheafMap v_x = restrict_along_v(xt, xs);
  return {fiber, comparison(f_t, v_x, fiber)};
}

OrthogonalityReport orthogonality_equivalence_test(const ProductSitePtr& site, const PresheafMap& u,
                                                   const PresheafMap& v, const PresheafMap& f) {
  OrthogonalityReport r;
  r.box = has_rlp(f, {{"box'", pushout_product(site, u, v)}});
  r.over = has_rlp(over_division(site, f, v).map, {{"u", u}});
  r.under = has_rlp(under_division(site, u, f).map, {{"v", v}});
  return r;
}

GeneratorSet bisite_boundary_generators(const ProductSitePtr& site) {
  ThetaSitePtr theta = theta_factor(*site), delta = delta_factor(*site);
  GeneratorSet out;
  for (const LabeledMap& u : boundary_generators(theta))
    for (const LabeledMap& v : boundary_generators(delta))
      out.push_back({u.label + " [] " + v.label, pushout_product(site, u.map, v.map)});
  return out;
}

RlpReport check_bisite_trivial_fibration(const PresheafMap& f, const ProductSitePtr& site) {
  return has_rlp(f, bisite_boundary_generators(site));
}

GeneratorSet rezk_generators(const ProductSitePtr& site, LocalizerPart part) {
  ThetaSitePtr theta = theta_factor(*site);
  GeneratorSet out;
  for (const LabeledMap& g : qcat_generators(theta, part)) out.push_back({"p*" + g.label, p_star(site, g.map)});
  IntervalData i = nerve_interval(theta);
  if (part == LocalizerPart::Collapse)
    out.push_back({"p*N(j)", p_star(site, to_terminal(i.interval, terminal_presheaf(theta)))});
  else
    out.push_back({"p*N(e0)", p_star(site, i.end0)});
  return out;
}

bool ResolutionReport::ok() const {
  if (!endpoints_mono) return false;
  for (const RlpReport& r : trivial_fibration)
    if (!r.holds) return false;
  for (bool b : codiscrete_match)
    if (!b) return false;
  return true;
}

ResolutionReport resolution_check(const ThetaSitePtr& site, int k_max) {
  if (k_max < 1) throw std::invalid_argument("resolution check needs k_max >= 1");
  ResolutionReport r;
  NervePtr d0 = nerve(site, simply_connected_groupoid(0), "D~_0");
  NervePtr d1 = nerve(site, simply_connected_groupoid(1), "D~_1");
  NCatPtr point = simply_connected_groupoid(0);
  auto object_functor = [&](int obj) {
    NCatPtr target = simply_connected_groupoid(1);
    NFunctor u{point, target, {}};
    u.map.assign(point->level + 1, {});
    for (int k = 0; k <= point->level; ++k) u.map[k] = {target->identity(0, k, obj)};
    return u;
  };
  CoproductPtr ends = coproduct(d0, d0);
  PresheafMap m = copairing(ends, nerve_map(d0, d1, object_functor(0)), nerve_map(d0, d1, object_functor(1)));
  r.endpoints_mono = is_mono(m);
  PresheafPtr one = terminal_presheaf(site);
  for (int k = 0; k <= k_max; ++k) {
    NervePtr dk = nerve(site, simply_connected_groupoid(k), "D~_" + std::to_string(k));
    r.trivial_fibration.push_back(check_trivial_fibration(to_terminal(dk, one), site));
    auto cod = std::make_shared<const CodiscretePresheaf>(site, k + 1);
    bool same = true;
    for (ObjId a = 0; a < site->size(); ++a) same = same && cod->size(a) == dk->size(a);
    r.codiscrete_match.push_back(same);
  }
  return r;
}

OrthogonalityPools orthogonality_pools(int n, int max_dim, int max_width, int max_m) {
  OrthogonalityPools p;
  ThetaSitePtr theta = make_theta_site(n, max_dim, max_width);
  ThetaSitePtr delta = make_delta_site(max_m);
  p.site = make_bisite(theta, delta);

  IntervalData i = nerve_interval(theta);
  PresheafPtr one = terminal_presheaf(theta);
  auto y1 = representable(theta, Table::globe(1));
  p.theta_monos.push_back({"id(y(1))", identity_map(y1)});
  for (const LabeledMap& b : boundary_generators(theta)) p.theta_monos.push_back(b);
  for (const LabeledMap& s : spine_generators(theta))
    if (s.map.source->total_size() != s.map.target->total_size()) p.theta_monos.push_back(s);
  p.theta_monos.push_back({"e0", i.end0});
  p.theta_monos.push_back({"empty->N(J)", from_empty(empty_presheaf(theta), i.interval)});

  auto simp = [&](const SimplicialSetFinite& d, const std::string& name) {
    return simplicial_presheaf(delta, d, name);
  };
  for (int m = 0; m <= max_m; ++m) {
    auto full = simp(standard_simplex(m), "D" + std::to_string(m));
    auto bd = simp(simplex_boundary(m), "dD" + std::to_string(m));
    p.delta_monos.push_back({"boundary[" + std::to_string(m) + "]", simplicial_inclusion(bd, full)});
    if (m >= 2)
      for (int k = 0; k <= m; ++k) {
        auto h = simp(horn(m, k), "L" + std::to_string(m) + std::to_string(k));
        p.delta_monos.push_back({"horn[" + std::to_string(m) + "," + std::to_string(k) + "]",
                                 simplicial_inclusion(h, full)});
      }
  }
  auto d1 = simp(standard_simplex(1), "D1");
  p.delta_monos.push_back({"id[1]", identity_map(d1)});

  PresheafPtr bione = terminal_presheaf(p.site);
  p.bimaps.push_back({"p*N(J)->1", p_star(p.site, to_terminal(i.interval, one))});
  p.bimaps.push_back({"p*id", p_star(p.site, identity_map(i.interval))});
  p.bimaps.push_back({"p*y(1)->1", p_star(p.site, to_terminal(y1, one))});
  auto cod2 = std::make_shared<const CodiscretePresheaf>(p.site, 2);
  p.bimaps.push_back({"codiscrete(2)->1", to_terminal(cod2, bione)});
  auto d1_bi = q_star(p.site, d1);
  p.bimaps.push_back({"q*D1->1", to_terminal(d1_bi, bione)});
  p.bimaps.push_back({"p*e0", p_star(p.site, i.end0)});
  if (n >= 2) {
    Interval it = build_interval(2);
    p.bimaps.push_back({"p*N(j_2)", p_star(p.site, nerve_map(nerve(theta, it.j, "J_2"), nerve(theta, it.globe, "D_1"),
                                                             it.collapse))});
  }
  return p;
}

std::vector<SampledOrthogonality> sample_orthogonality(const OrthogonalityPools& pools, int samples,
                                                       unsigned seed) {
  std::vector<SampledOrthogonality> out;
  ThetaSitePtr theta = theta_factor(*pools.site);
  ThetaSitePtr delta = delta_factor(*pools.site);
  {
    FinitelyGenerated u = boundary(theta, Table::globe(1));
    auto d1 = simplicial_presheaf(delta, standard_simplex(1), "D1");
    auto bd1 = simplicial_presheaf(delta, simplex_boundary(1), "dD1");
    auto j = nerve(theta, build_interval(1).j, "J");
    PresheafMap f = to_terminal(p_star(pools.site, j), terminal_presheaf(pools.site));
    out.push_back({"boundary(1)", "boundary[1]", "p*N(J)->1",
                   orthogonality_equivalence_test(pools.site, u.inclusion, simplicial_inclusion(bd1, d1), f)});
  }
  std::mt19937 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const LabeledMap& u = pools.theta_monos[rng() % pools.theta_monos.size()];
    const LabeledMap& v = pools.delta_monos[rng() % pools.delta_monos.size()];
    const LabeledMap& f = pools.bimaps[rng() % pools.bimaps.size()];
    out.push_back({u.label, v.label, f.label, orthogonality_equivalence_test(pools.site, u.map, v.map, f.map)});
  }
  return out;
}

}  // namespace thetacat
