#include "thetacat/presheaf.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace thetacat {

Presheaf::Presheaf(SitePtr site) : site_(std::move(site)) {}

std::size_t Presheaf::total_size() const {
  std::size_t t = 0;
  for (ObjId a = 0; a < site_->size(); ++a) t += size(a);
  return t;
}

const std::vector<Elem>& Presheaf::action(MorId g) const {
  {
    std::lock_guard lock(mu_);
    if (cache_.empty()) cache_.resize(site_->morphism_count());
    if (cache_[g]) return *cache_[g];
  }
  auto computed = std::make_unique<const std::vector<Elem>>(compute_action(g));
  std::lock_guard lock(mu_);
  if (!cache_[g]) cache_[g] = std::move(computed);
  return *cache_[g];
}

std::string Presheaf::encode(ObjId, Elem x) const { return "#" + std::to_string(x); }

PresheafMap identity_map(const PresheafPtr& x) {
  PresheafMap m{x, x, {}};
  for (ObjId a = 0; a < x->site().size(); ++a) {
    std::vector<Elem> c(x->size(a));
    std::iota(c.begin(), c.end(), 0);
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap compose(const PresheafMap& g, const PresheafMap& f) {
  PresheafMap m{f.source, g.target, f.component};
  for (ObjId a = 0; a < static_cast<ObjId>(m.component.size()); ++a)
    for (Elem& x : m.component[a]) x = g.component[a][x];
  return m;
}

bool is_natural(const PresheafMap& f) {
  const Site& s = f.source->site();
  for (MorId g = 0; g < s.morphism_count(); ++g) {
    ObjId a = s.source(g), b = s.target(g);
    const auto& sa = f.source->action(g);
    const auto& ta = f.target->action(g);
    for (Elem x = 0; x < static_cast<Elem>(f.source->size(b)); ++x)
      if (f.component[a][sa[x]] != ta[f.component[b][x]]) return false;
  }
  return true;
}

bool is_mono(const PresheafMap& f) {
  for (const auto& c : f.component) {
    std::vector<Elem> s = c;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

bool is_iso(const PresheafMap& f) {
  if (!is_mono(f)) return false;
  for (ObjId a = 0; a < static_cast<ObjId>(f.component.size()); ++a)
    if (f.component[a].size() != f.target->size(a)) return false;
  return true;
}

namespace {

class ConstantPresheaf : public Presheaf {
 public:
  ConstantPresheaf(SitePtr site, std::size_t n) : Presheaf(std::move(site)), n_(n) {}
  std::size_t size(ObjId) const override { return n_; }
  std::string name() const override { return n_ ? "1" : "0"; }

 protected:
  std::vector<Elem> compute_action(MorId) const override { return std::vector<Elem>(n_, 0); }

 private:
  std::size_t n_;
};

}  // namespace

PresheafPtr terminal_presheaf(const SitePtr& site) { return std::make_shared<ConstantPresheaf>(site, 1); }
PresheafPtr empty_presheaf(const SitePtr& site) { return std::make_shared<ConstantPresheaf>(site, 0); }

PresheafMap to_terminal(const PresheafPtr& x, const PresheafPtr& terminal) {
  PresheafMap m{x, terminal, {}};
  for (ObjId a = 0; a < x->site().size(); ++a) m.component.emplace_back(x->size(a), 0);
  return m;
}

PresheafMap from_empty(const PresheafPtr& empty, const PresheafPtr& x) {
  return PresheafMap{empty, x, std::vector<std::vector<Elem>>(x->site().size())};
}

RepresentablePresheaf::RepresentablePresheaf(SitePtr site, ObjId object)
    : Presheaf(std::move(site)), object_(object) {
  const Site& s = this->site();
  position_.assign(s.morphism_count(), -1);
  for (ObjId b = 0; b < s.size(); ++b) {
    const auto& h = s.hom(b, object_);
    for (std::size_t i = 0; i < h.size(); ++i) position_[h[i]] = static_cast<int>(i);
  }
}

Elem RepresentablePresheaf::index(MorId g) const { return position_[g]; }

std::vector<Elem> RepresentablePresheaf::compute_action(MorId g) const {
  const Site& s = site();
  const auto& h = s.hom(s.target(g), object_);
  std::vector<Elem> out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = position_[s.compose(h[x], g)];
  return out;
}

std::string RepresentablePresheaf::encode(ObjId b, Elem x) const {
  if (auto* t = dynamic_cast<const ThetaSite*>(&site()))
    return functor_key(t->morphism(morphism(b, x)).functor);
  return "m" + std::to_string(morphism(b, x));
}

PresheafMap representable_map(const RepresentablePtr& from, const RepresentablePtr& to, MorId g) {
  const Site& s = from->site();
  PresheafMap m{from, to, {}};
  for (ObjId b = 0; b < s.size(); ++b) {
    std::vector<Elem> c;
    for (MorId f : s.hom(b, from->object())) c.push_back(to->index(s.compose(g, f)));
    m.component.push_back(std::move(c));
  }
  return m;
}

NervePresheaf::NervePresheaf(ThetaSitePtr site, NCatPtr cat, std::string label)
    : Presheaf(site), theta_(std::move(site)), label_(std::move(label)) {
  int n = theta_->level();
  if (cat->level > n) throw LevelMismatch("category level exceeds site level");
  cat_ = promote(cat, n);
  for (ObjId a = 0; a < theta_->size(); ++a) {
    elements_.push_back(enumerate_functors(free_ncat(theta_->table(a), n).cat, cat_));
    std::unordered_map<std::string, Elem> idx;
    for (std::size_t x = 0; x < elements_[a].size(); ++x)
      idx.emplace(functor_key(elements_[a][x]), static_cast<Elem>(x));
    index_.push_back(std::move(idx));
  }
}

std::optional<Elem> NervePresheaf::index(ObjId a, const NFunctor& u) const {
  auto it = index_[a].find(functor_key(u));
  if (it == index_[a].end()) return std::nullopt;
  return it->second;
}

std::vector<Elem> NervePresheaf::compute_action(MorId g) const {
  ObjId a = theta_->source(g), b = theta_->target(g);
  const NFunctor& shape = theta_->morphism(g).functor;
  std::vector<Elem> out(elements_[b].size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    auto r = index(a, compose(elements_[b][x], shape));
    if (!r) throw std::logic_error("nerve is not closed under restriction");
    out[x] = *r;
  }
  return out;
}

std::string NervePresheaf::encode(ObjId a, Elem x) const { return functor_key(elements_[a][x]); }

NervePtr nerve(const ThetaSitePtr& site, const NCatPtr& cat, const std::string& label) {
  return std::make_shared<const NervePresheaf>(site, cat, label);
}

PresheafMap nerve_map(const NervePtr& source, const NervePtr& target, const NFunctor& u) {
  int n = source->theta().level();
  NFunctor v = u.source->level < n ? promote(u, n) : u;
  PresheafMap m{source, target, {}};
  for (ObjId a = 0; a < source->site().size(); ++a) {
    std::vector<Elem> c;
    for (std::size_t x = 0; x < source->size(a); ++x) {
      NFunctor w = compose(v, source->element(a, static_cast<Elem>(x)));
      auto r = target->index(a, w);
      if (!r) throw std::invalid_argument("functor does not map between the given nerves");
      c.push_back(*r);
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

SubPresheaf::SubPresheaf(PresheafPtr ambient, std::vector<std::vector<Elem>> members, std::string label)
    : Presheaf(ambient->site_ptr()), ambient_(std::move(ambient)), members_(std::move(members)),
      label_(std::move(label)) {
  for (ObjId a = 0; a < site().size(); ++a) {
    std::sort(members_[a].begin(), members_[a].end());
    std::vector<Elem> pos(ambient_->size(a), -1);
    for (std::size_t i = 0; i < members_[a].size(); ++i) pos[members_[a][i]] = static_cast<Elem>(i);
    position_.push_back(std::move(pos));
  }
}

std::optional<Elem> SubPresheaf::index(ObjId a, Elem ambient_x) const {
  Elem p = position_[a][ambient_x];
  if (p < 0) return std::nullopt;
  return p;
}

std::vector<Elem> SubPresheaf::compute_action(MorId g) const {
  ObjId a = site().source(g), b = site().target(g);
  const auto& amb = ambient_->action(g);
  std::vector<Elem> out(members_[b].size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    Elem p = position_[a][amb[members_[b][x]]];
    if (p < 0) throw std::logic_error("subpresheaf not closed under restriction");
    out[x] = p;
  }
  return out;
}

SubPtr generated_subpresheaf(const PresheafPtr& ambient,
                             const std::vector<std::pair<ObjId, Elem>>& generators,
                             const std::string& label) {
  const Site& s = ambient->site();
  std::vector<std::set<Elem>> members(s.size());
  for (auto [a, x] : generators)
    for (MorId g : s.into(a)) members[s.source(g)].insert(ambient->act(g, x));
  std::vector<std::vector<Elem>> lists;
  for (auto& m : members) lists.emplace_back(m.begin(), m.end());
  return std::make_shared<const SubPresheaf>(ambient, std::move(lists), label);
}

SubPtr union_of(const SubPtr& a, const SubPtr& b, const std::string& label) {
  if (a->ambient() != b->ambient()) throw std::invalid_argument("union of subpresheaves of different presheaves");
  std::vector<std::vector<Elem>> lists;
  for (ObjId o = 0; o < a->site().size(); ++o) {
    std::set<Elem> m;
    for (Elem x = 0; x < static_cast<Elem>(a->size(o)); ++x) m.insert(a->ambient_element(o, x));
    for (Elem x = 0; x < static_cast<Elem>(b->size(o)); ++x) m.insert(b->ambient_element(o, x));
    lists.emplace_back(m.begin(), m.end());
  }
  return std::make_shared<const SubPresheaf>(a->ambient(), std::move(lists), label);
}

SubPtr image(const PresheafMap& f, const std::string& label) {
  std::vector<std::vector<Elem>> lists;
  for (const auto& c : f.component) {
    std::set<Elem> m(c.begin(), c.end());
    lists.emplace_back(m.begin(), m.end());
  }
  return std::make_shared<const SubPresheaf>(f.target, std::move(lists), label);
}

PresheafMap inclusion(const SubPtr& sub) {
  PresheafMap m{sub, sub->ambient(), {}};
  for (ObjId a = 0; a < sub->site().size(); ++a) {
    std::vector<Elem> c;
    for (Elem x = 0; x < static_cast<Elem>(sub->size(a)); ++x) c.push_back(sub->ambient_element(a, x));
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap corestrict(const PresheafMap& f, const SubPtr& sub) {
  PresheafMap m{f.source, sub, f.component};
  for (ObjId a = 0; a < static_cast<ObjId>(m.component.size()); ++a)
    for (Elem& x : m.component[a]) {
      auto p = sub->index(a, x);
      if (!p) throw std::invalid_argument("map does not factor through the subpresheaf");
      x = *p;
    }
  return m;
}

ProductPresheaf::ProductPresheaf(PresheafPtr left, PresheafPtr right)
    : Presheaf(left->site_ptr()), left_(std::move(left)), right_(std::move(right)) {}

std::vector<Elem> ProductPresheaf::compute_action(MorId g) const {
  ObjId a = site().source(g), b = site().target(g);
  const auto& la = left_->action(g);
  const auto& ra = right_->action(g);
  std::size_t rb = right_->size(b), ra_size = right_->size(a);
  std::vector<Elem> out(size(b));
  for (std::size_t z = 0; z < out.size(); ++z)
    out[z] = static_cast<Elem>(la[z / rb] * ra_size + ra[z % rb]);
  return out;
}

std::string ProductPresheaf::encode(ObjId a, Elem z) const {
  auto [x, y] = split(a, z);
  return "(" + left_->encode(a, x) + ";" + right_->encode(a, y) + ")";
}

ProductPtr product(const PresheafPtr& x, const PresheafPtr& y) {
  if (x->site_ptr() != y->site_ptr()) throw std::invalid_argument("presheaves on different sites");
  return std::make_shared<const ProductPresheaf>(x, y);
}

PresheafMap product_map(const ProductPtr& source, const ProductPtr& target, const PresheafMap& f,
                        const PresheafMap& g) {
  PresheafMap m{source, target, {}};
  for (ObjId a = 0; a < source->site().size(); ++a) {
    std::vector<Elem> c(source->size(a));
    for (Elem z = 0; z < static_cast<Elem>(c.size()); ++z) {
      auto [x, y] = source->split(a, z);
      c[z] = target->pair(a, f.component[a][x], g.component[a][y]);
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap product_projection(const ProductPtr& p, int which) {
  PresheafMap m{p, which == 0 ? p->left() : p->right(), {}};
  for (ObjId a = 0; a < p->site().size(); ++a) {
    std::vector<Elem> c(p->size(a));
    for (Elem z = 0; z < static_cast<Elem>(c.size()); ++z) {
      auto [x, y] = p->split(a, z);
      c[z] = which == 0 ? x : y;
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap pairing(const PresheafMap& f, const PresheafMap& g, const ProductPtr& target) {
  PresheafMap m{f.source, target, {}};
  for (ObjId a = 0; a < static_cast<ObjId>(f.component.size()); ++a) {
    std::vector<Elem> c(f.component[a].size());
    for (std::size_t x = 0; x < c.size(); ++x) c[x] = target->pair(a, f.component[a][x], g.component[a][x]);
    m.component.push_back(std::move(c));
  }
  return m;
}

CoproductPresheaf::CoproductPresheaf(PresheafPtr left, PresheafPtr right)
    : Presheaf(left->site_ptr()), left_(std::move(left)), right_(std::move(right)) {}

std::vector<Elem> CoproductPresheaf::compute_action(MorId g) const {
  ObjId a = site().source(g), b = site().target(g);
  const auto& la = left_->action(g);
  const auto& ra = right_->action(g);
  std::vector<Elem> out(la.begin(), la.end());
  Elem off = static_cast<Elem>(left_->size(a));
  for (Elem y : ra) out.push_back(off + y);
  (void)b;
  return out;
}

std::string CoproductPresheaf::encode(ObjId a, Elem z) const {
  Elem l = static_cast<Elem>(left_->size(a));
  return z < l ? "L" + left_->encode(a, z) : "R" + right_->encode(a, z - l);
}

CoproductPtr coproduct(const PresheafPtr& x, const PresheafPtr& y) {
  if (x->site_ptr() != y->site_ptr()) throw std::invalid_argument("presheaves on different sites");
  return std::make_shared<const CoproductPresheaf>(x, y);
}

PresheafMap coproduct_injection(const CoproductPtr& s, int which) {
  const PresheafPtr& part = which == 0 ? s->left() : s->right();
  PresheafMap m{part, s, {}};
  for (ObjId a = 0; a < s->site().size(); ++a) {
    std::vector<Elem> c(part->size(a));
    Elem off = which == 0 ? 0 : static_cast<Elem>(s->left()->size(a));
    std::iota(c.begin(), c.end(), off);
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap copairing(const CoproductPtr& s, const PresheafMap& f, const PresheafMap& g) {
  PresheafMap m{s, f.target, {}};
  for (ObjId a = 0; a < s->site().size(); ++a) {
    std::vector<Elem> c = f.component[a];
    c.insert(c.end(), g.component[a].begin(), g.component[a].end());
    m.component.push_back(std::move(c));
  }
  return m;
}

PushoutPresheaf::PushoutPresheaf(PresheafMap f, PresheafMap g)
    : Presheaf(f.source->site_ptr()), f_(std::move(f)), g_(std::move(g)) {
  if (f_.source != g_.source) throw std::invalid_argument("pushout of maps with different sources");
  for (ObjId a = 0; a < site().size(); ++a) {
    std::size_t nb = f_.target->size(a), nc = g_.target->size(a);
    std::vector<Elem> parent(nb + nc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Elem x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t x = 0; x < f_.component[a].size(); ++x) {
      Elem p = find(f_.component[a][x]);
      Elem q = find(static_cast<Elem>(nb) + g_.component[a][x]);
      if (p != q) parent[std::max(p, q)] = std::min(p, q);
    }
    std::vector<Elem> cls(nb + nc, -1), reps;
    for (std::size_t x = 0; x < nb + nc; ++x) {
      Elem r = find(static_cast<Elem>(x));
      if (cls[r] < 0) {
        cls[r] = static_cast<Elem>(reps.size());
        reps.push_back(r);
      }
      cls[x] = cls[r];
    }
    class_.push_back(std::move(cls));
    reps_.push_back(std::move(reps));
  }
}

Elem PushoutPresheaf::class_of(ObjId a, int side, Elem x) const {
  return class_[a][side == 0 ? x : static_cast<Elem>(f_.target->size(a)) + x];
}

std::vector<Elem> PushoutPresheaf::compute_action(MorId g) const {
  ObjId a = site().source(g), b = site().target(g);
  Elem nb = static_cast<Elem>(f_.target->size(b));
  const auto& ba = f_.target->action(g);
  const auto& ca = g_.target->action(g);
  std::vector<Elem> out;
  for (Elem r : reps_[b]) out.push_back(r < nb ? class_of(a, 0, ba[r]) : class_of(a, 1, ca[r - nb]));
  return out;
}

std::string PushoutPresheaf::encode(ObjId a, Elem z) const {
  Elem r = reps_[a][z];
  Elem nb = static_cast<Elem>(f_.target->size(a));
  return r < nb ? "[" + f_.target->encode(a, r) + "]" : "[" + g_.target->encode(a, r - nb) + "]";
}

PushoutPtr pushout(const PresheafMap& f, const PresheafMap& g) {
  return std::make_shared<const PushoutPresheaf>(f, g);
}

PresheafMap pushout_injection(const PushoutPtr& p, int which, const PresheafPtr& side) {
  PresheafMap m{side, p, {}};
  for (ObjId a = 0; a < p->site().size(); ++a) {
    std::vector<Elem> c(side->size(a));
    for (Elem x = 0; x < static_cast<Elem>(c.size()); ++x) c[x] = p->class_of(a, which, x);
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap pushout_copair(const PushoutPtr& p, const PresheafMap& u, const PresheafMap& v) {
  PresheafMap m{p, u.target, {}};
  for (ObjId a = 0; a < p->site().size(); ++a) {
    std::vector<Elem> c(p->size(a), -1);
    for (Elem x = 0; x < static_cast<Elem>(u.component[a].size()); ++x) {
      Elem& slot = c[p->class_of(a, 0, x)];
      if (slot >= 0 && slot != u.component[a][x]) throw std::invalid_argument("maps do not agree on the pushout");
      slot = u.component[a][x];
    }
    for (Elem x = 0; x < static_cast<Elem>(v.component[a].size()); ++x) {
      Elem& slot = c[p->class_of(a, 1, x)];
      if (slot >= 0 && slot != v.component[a][x]) throw std::invalid_argument("maps do not agree on the pushout");
      slot = v.component[a][x];
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

PullbackPresheaf::PullbackPresheaf(PresheafMap f, PresheafMap g)
    : Presheaf(f.source->site_ptr()), f_(std::move(f)), g_(std::move(g)) {
  if (f_.target != g_.target) throw std::invalid_argument("pullback of maps with different targets");
  for (ObjId a = 0; a < site().size(); ++a) {
    std::vector<std::pair<Elem, Elem>> pairs;
    std::unordered_map<std::uint64_t, Elem> idx;
    for (Elem x = 0; x < static_cast<Elem>(f_.component[a].size()); ++x)
      for (Elem y = 0; y < static_cast<Elem>(g_.component[a].size()); ++y)
        if (f_.component[a][x] == g_.component[a][y]) {
          idx.emplace((static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y),
                      static_cast<Elem>(pairs.size()));
          pairs.emplace_back(x, y);
        }
    pairs_.push_back(std::move(pairs));
    index_.push_back(std::move(idx));
  }
}

std::optional<Elem> PullbackPresheaf::index(ObjId a, Elem x, Elem y) const {
  auto it = index_[a].find((static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y));
  if (it == index_[a].end()) return std::nullopt;
  return it->second;
}

std::vector<Elem> PullbackPresheaf::compute_action(MorId g) const {
  ObjId a = site().source(g), b = site().target(g);
  const auto& xa = f_.source->action(g);
  const auto& ya = g_.source->action(g);
  std::vector<Elem> out;
  for (auto [x, y] : pairs_[b]) out.push_back(*index(a, xa[x], ya[y]));
  return out;
}

std::string PullbackPresheaf::encode(ObjId a, Elem z) const {
  auto [x, y] = pairs_[a][z];
  return "(" + f_.source->encode(a, x) + ";" + g_.source->encode(a, y) + ")";
}

PullbackPtr pullback(const PresheafMap& f, const PresheafMap& g) {
  return std::make_shared<const PullbackPresheaf>(f, g);
}

PresheafMap pullback_projection(const PullbackPtr& p, int which, const PresheafPtr& side) {
  PresheafMap m{p, side, {}};
  for (ObjId a = 0; a < p->site().size(); ++a) {
    std::vector<Elem> c(p->size(a));
    for (Elem z = 0; z < static_cast<Elem>(c.size()); ++z) {
      auto [x, y] = p->split(a, z);
      c[z] = which == 0 ? x : y;
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

CodiscretePresheaf::CodiscretePresheaf(SitePtr site, int k) : Presheaf(std::move(site)), k_(k) {
  auto t = this->site().terminal();
  if (!t) throw std::invalid_argument("site has no terminal object");
  terminal_ = *t;
  for (ObjId a = 0; a < this->site().size(); ++a) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < this->site().hom(terminal_, a).size(); ++i) s *= static_cast<std::size_t>(k_);
    sizes_.push_back(s);
  }
}

std::vector<Elem> CodiscretePresheaf::compute_action(MorId g) const {
  const Site& s = site();
  ObjId a = s.source(g), b = s.target(g);
  const auto& pa = s.hom(terminal_, a);
  const auto& pb = s.hom(terminal_, b);
  std::vector<int> where(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    MorId q = s.compose(g, pa[i]);
    where[i] = static_cast<int>(std::find(pb.begin(), pb.end(), q) - pb.begin());
  }
  std::vector<Elem> out(sizes_[b]);
  std::vector<int> digits(pb.size());
  for (std::size_t x = 0; x < sizes_[b]; ++x) {
    std::size_t v = x;
    for (std::size_t i = pb.size(); i-- > 0;) {
      digits[i] = static_cast<int>(v % k_);
      v /= k_;
    }
    std::size_t r = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) r = r * k_ + digits[where[i]];
    out[x] = static_cast<Elem>(r);
  }
  return out;
}

std::string CodiscretePresheaf::encode(ObjId a, Elem x) const {
  std::size_t n = site().hom(terminal_, a).size();
  std::string s(n, '0');
  std::size_t v = static_cast<std::size_t>(x);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<char>('0' + v % k_);
    v /= k_;
  }
  return s;
}

PresheafMap codiscrete_map(const std::shared_ptr<const CodiscretePresheaf>& source,
                           const std::shared_ptr<const CodiscretePresheaf>& target,
                           const std::vector<int>& values) {
  PresheafMap m{source, target, {}};
  int ks = source->values(), kt = target->values();
  for (ObjId a = 0; a < source->site().size(); ++a) {
    std::vector<Elem> c(source->size(a));
    for (std::size_t x = 0; x < c.size(); ++x) {
      std::size_t v = x, r = 0, mult = 1;
      std::size_t n = source->points(a);
      for (std::size_t i = 0; i < n; ++i) {
        r += values[v % ks] * mult;
        mult *= kt;
        v /= ks;
      }
      c[x] = static_cast<Elem>(r);
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

bool check_generation(const PresheafPtr& x, const std::vector<std::pair<ObjId, Elem>>& generators) {
  SubPtr s = generated_subpresheaf(x, generators, "generated");
  for (ObjId a = 0; a < x->site().size(); ++a)
    if (s->size(a) != x->size(a)) return false;
  return true;
}

RepresentablePtr representable(const ThetaSitePtr& site, const Table& t) {
  auto a = site->find(t);
  if (!a) throw BoundExhausted("table " + t.str() + " lies outside " + site->bounds());
  return std::make_shared<const RepresentablePresheaf>(site, *a);
}

FinitelyGenerated boundary(const ThetaSitePtr& site, const Table& t) {
  RepresentablePtr y = representable(site, t);
  ObjId a = y->object();
  std::vector<std::pair<ObjId, Elem>> gens;
  for (ObjId b = 0; b < site->size(); ++b)
    for (MorId g : site->hom(b, a))
      if (g != site->identity(a) && site->is_mono(g)) gens.emplace_back(b, y->index(g));
  SubPtr sub = generated_subpresheaf(y, gens, "boundary(" + t.str() + ")");
  FinitelyGenerated out{sub, inclusion(sub), {}};
  for (auto [b, x] : gens) out.generators.emplace_back(b, *sub->index(b, x));
  return out;
}

FinitelyGenerated spine(const ThetaSitePtr& site, const Table& t) {
  RepresentablePtr y = representable(site, t);
  ObjId a = y->object();
  std::vector<std::pair<ObjId, Elem>> gens;
  for (const ThetaMorphism& leg : spine_inclusions(t, site->level()).globes) {
    auto b = site->find(leg.source);
    if (!b) throw BoundExhausted("globe " + leg.source.str() + " lies outside " + site->bounds());
    auto g = site->find(*b, a, leg.functor);
    gens.emplace_back(*b, y->index(*g));
  }
  SubPtr sub = generated_subpresheaf(y, gens, "spine(" + t.str() + ")");
  FinitelyGenerated out{sub, inclusion(sub), {}};
  for (auto [b, x] : gens) out.generators.emplace_back(b, *sub->index(b, x));
  return out;
}

std::vector<std::pair<ObjId, Elem>> nondegenerate_cells(const Presheaf& x) {
  const Site& s = x.site();
  std::vector<std::vector<char>> degenerate(s.size());
  for (ObjId a = 0; a < s.size(); ++a) degenerate[a].assign(x.size(a), 0);
  for (MorId e = 0; e < s.morphism_count(); ++e) {
    ObjId a = s.source(e), b = s.target(e);
    if (e == s.identity(a) || !s.is_split_epi(e)) continue;
    for (Elem y : x.action(e)) degenerate[a][y] = 1;
    (void)b;
  }
  std::vector<std::pair<ObjId, Elem>> out;
  for (ObjId a = 0; a < s.size(); ++a)
    for (Elem v = 0; v < static_cast<Elem>(x.size(a)); ++v)
      if (!degenerate[a][v]) out.emplace_back(a, v);
  std::stable_sort(out.begin(), out.end(), [&](const auto& p, const auto& q) {
    return s.degree(p.first) < s.degree(q.first);
  });
  return out;
}

}  // namespace thetacat
