#include <algorithm>
#include <set>

#include "thetacat/presheaf.hpp"

namespace thetacat {

namespace {

class MapSearch {
 public:
  MapSearch(const PresheafPtr& v, const PresheafPtr& x, const MapConstraints& c)
      : v_(v), x_(x), c_(c), site_(v->site()) {
    if (v->site_ptr() != x->site_ptr()) throw std::invalid_argument("presheaves on different sites");
    assign_.resize(site_.size());
    for (ObjId a = 0; a < site_.size(); ++a) assign_[a].assign(v->size(a), -1);
    auto cells = nondegenerate_cells(*v);
    // Highest degree first: each choice then forces all of its faces.
    std::stable_sort(cells.begin(), cells.end(), [&](const auto& p, const auto& q) {
      return site_.degree(p.first) > site_.degree(q.first);
    });
    vars_ = std::move(cells);
    into_.resize(site_.size());
  }

  void run(const std::function<bool(const PresheafMap&)>& visit) {
    visit_ = &visit;
    if (!c_.preassign.empty())
      for (ObjId a = 0; a < site_.size(); ++a)
        for (Elem e = 0; e < static_cast<Elem>(c_.preassign[a].size()); ++e)
          if (c_.preassign[a][e] >= 0 && !set(a, e, c_.preassign[a][e])) return;
    recurse(0);
  }

 private:
  struct Restriction {
    ObjId source;
    const std::vector<Elem>* v_action;
    const std::vector<Elem>* x_action;
  };

  const std::vector<Restriction>& restrictions(ObjId a) {
    if (into_[a].empty())
      for (MorId g : site_.into(a))
        if (g != site_.identity(a)) into_[a].push_back({site_.source(g), &v_->action(g), &x_->action(g)});
    return into_[a];
  }

  bool put(ObjId a, Elem e, Elem y) {
    Elem cur = assign_[a][e];
    if (cur >= 0) return cur == y;
    if (c_.filter && !c_.filter(a, e, y)) return false;
    assign_[a][e] = y;
    trail_.emplace_back(a, e);
    return true;
  }

  bool set(ObjId a, Elem e, Elem y) {
    if (assign_[a][e] >= 0) return assign_[a][e] == y;
    if (!put(a, e, y)) return false;
    for (const Restriction& r : restrictions(a))
      if (!put(r.source, (*r.v_action)[e], (*r.x_action)[y])) return false;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [a, e] = trail_.back();
      trail_.pop_back();
      assign_[a][e] = -1;
    }
  }

  bool recurse(std::size_t i) {
    while (i < vars_.size() && assign_[vars_[i].first][vars_[i].second] >= 0) ++i;
    if (i == vars_.size()) {
      if (!checked_) {
        for (const auto& level : assign_)
          for (Elem y : level)
            if (y < 0) throw BoundExhausted("presheaf is not generated by its cells within the site");
        checked_ = true;
      }
      return (*visit_)(PresheafMap{v_, x_, assign_});
    }
    auto [a, e] = vars_[i];
    for (Elem y = 0; y < static_cast<Elem>(x_->size(a)); ++y) {
      std::size_t mark = trail_.size();
      bool keep = true;
      if (set(a, e, y)) keep = recurse(i + 1);
      undo(mark);
      if (!keep) return false;
    }
    return true;
  }

  PresheafPtr v_, x_;
  const MapConstraints& c_;
  const Site& site_;
  std::vector<std::vector<Elem>> assign_;
  std::vector<std::pair<ObjId, Elem>> vars_;
  std::vector<std::vector<Restriction>> into_;
  std::vector<std::pair<ObjId, Elem>> trail_;
  const std::function<bool(const PresheafMap&)>* visit_ = nullptr;
  bool checked_ = false;
};

}  // namespace

void for_each_map(const PresheafPtr& v, const PresheafPtr& x, const MapConstraints& c,
                  const std::function<bool(const PresheafMap&)>& visit) {
  MapSearch s(v, x, c);
  s.run(visit);
}

std::vector<PresheafMap> enumerate_maps(const PresheafPtr& v, const PresheafPtr& x,
                                        const MapConstraints& c) {
  std::vector<PresheafMap> out;
  for_each_map(v, x, c, [&](const PresheafMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_maps(const PresheafPtr& v, const PresheafPtr& x, const MapConstraints& c) {
  std::size_t n = 0;
  for_each_map(v, x, c, [&](const PresheafMap&) {
    ++n;
    return true;
  });
  return n;
}

TruncationPullback::TruncationPullback(ThetaSitePtr site, PresheafPtr simplicial)
    : Presheaf(site), theta_(std::move(site)), base_(std::move(simplicial)) {
  auto delta = std::dynamic_pointer_cast<const ThetaSite>(base_->site_ptr());
  if (!delta || delta->level() != 1) throw std::invalid_argument("pullback along truncation needs a simplicial presheaf");
  for (ObjId a = 0; a < theta_->size(); ++a) {
    Truncation t = truncate(free_ncat(theta_->table(a), theta_->level()).cat);
    int s = t.cat->counts[0] - 1;
    int arrows = t.cat->level >= 1 ? t.cat->counts[1] : 0;
    if (arrows != (s + 1) * (s + 2) / 2 && !(s == 0 && t.cat->level == 0))
      throw std::logic_error("truncation is not a linear order");
    auto b = delta->find(delta_bridge(s));
    if (!b) throw BoundExhausted("simplex [" + std::to_string(s) + "] lies outside " + delta->bounds());
    simplex_.push_back(*b);
  }
}

std::size_t TruncationPullback::size(ObjId a) const { return base_->size(simplex_[a]); }

std::string TruncationPullback::encode(ObjId a, Elem x) const { return base_->encode(simplex_[a], x); }

std::vector<Elem> TruncationPullback::compute_action(MorId g) const {
  auto delta = std::static_pointer_cast<const ThetaSite>(base_->site_ptr());
  ObjId a = theta_->source(g), b = theta_->target(g);
  const std::vector<int>& objects = theta_->morphism(g).functor.map[0];
  for (MorId h : delta->hom(simplex_[a], simplex_[b]))
    if (delta->morphism(h).functor.map[0] == objects) return base_->action(h);
  throw std::logic_error("object map is not a simplicial operator");
}

PresheafPtr pullback_t(const ThetaSitePtr& site, const PresheafPtr& simplicial) {
  return std::make_shared<const TruncationPullback>(site, simplicial);
}

SegalReport segal_check(const ThetaSitePtr& site, const NCatPtr& c, const Table& t) {
  NervePtr x = nerve(site, c);
  FinitelyGenerated sp = spine(site, t);
  ObjId a = *site->find(t);
  SegalReport report;
  report.elements = x->size(a);
  std::set<std::vector<Elem>> from_maps, from_elements;
  for_each_map(sp.presheaf, x, {}, [&](const PresheafMap& m) {
    std::vector<Elem> sig;
    for (auto [b, e] : sp.generators) sig.push_back(m(b, e));
    from_maps.insert(sig);
    ++report.spine_maps;
    return true;
  });
  for (Elem e = 0; e < static_cast<Elem>(x->size(a)); ++e) {
    std::vector<Elem> sig;
    for (auto [b, g] : sp.generators) {
      MorId leg = site->hom(b, a)[sp.presheaf->ambient_element(b, g)];
      sig.push_back(x->act(leg, e));
    }
    from_elements.insert(sig);
  }
  report.holds = from_elements.size() == report.elements && from_elements == from_maps &&
                 from_maps.size() == report.spine_maps;
  return report;
}

}  // namespace thetacat
