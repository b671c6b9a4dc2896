#include "thetacat/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace thetacat {

namespace {

using Subset = std::vector<int>;

std::string subset_name(const Subset& s) {
  std::string r;
  for (int v : s) r += std::to_string(v);
  return r;
}

// Simplicial set whose nondegenerate simplices are the given vertex subsets
// (closed under removing vertices).
SimplicialSetFinite from_subsets(const std::set<Subset>& subsets) {
  SimplicialSetFinite x;
  int top = -1;
  for (const Subset& s : subsets) top = std::max(top, static_cast<int>(s.size()) - 1);
  std::vector<std::vector<Subset>> by_level(top + 1);
  for (const Subset& s : subsets) by_level[s.size() - 1].push_back(s);
  x.nondegenerate.resize(top + 1);
  x.names.resize(top + 1);
  x.faces.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    x.nondegenerate[k] = static_cast<int>(by_level[k].size());
    for (const Subset& s : by_level[k]) x.names[k].push_back(subset_name(s));
    if (k == 0) continue;
    for (const Subset& s : by_level[k]) {
      std::vector<SimplicialSetFinite::Face> fs;
      for (int i = 0; i <= k; ++i) {
        Subset f = s;
        f.erase(f.begin() + i);
        auto& lvl = by_level[k - 1];
        int y = static_cast<int>(std::find(lvl.begin(), lvl.end(), f) - lvl.begin());
        if (y == static_cast<int>(lvl.size())) throw std::invalid_argument("subsets not closed under faces");
        std::vector<int> id(k);
        std::iota(id.begin(), id.end(), 0);
        fs.push_back({k - 1, y, id});
      }
      x.faces[k].push_back(std::move(fs));
    }
  }
  return x;
}

std::set<Subset> all_faces(int m, const std::function<bool(const Subset&)>& keep) {
  std::set<Subset> out;
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    Subset s;
    for (int v = 0; v <= m; ++v)
      if (mask & (1 << v)) s.push_back(v);
    if (keep(s)) out.insert(s);
  }
  return out;
}

// Reduce (h: [p] -> [k], y) to a degeneracy of a nondegenerate simplex.
SimplexElement normalize(const SimplicialSetFinite& x, std::vector<int> h, int k, int y) {
  while (true) {
    std::vector<char> hit(k + 1, 0);
    for (int v : h) hit[v] = 1;
    int missing = static_cast<int>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
    if (missing > k) return {h, k, y};
    const auto& face = x.faces[k][y][missing];
    for (int& v : h) v = face.degeneracy[v > missing ? v - 1 : v];
    k = face.level;
    y = face.simplex;
  }
}

std::vector<int> coface(int k, int i) {  // [k-1] -> [k] skipping i
  std::vector<int> m(k);
  for (int t = 0; t < k; ++t) m[t] = t < i ? t : t + 1;
  return m;
}

SimplexElement apply_map(const SimplicialSetFinite& x, const std::vector<int>& g, const SimplexElement& e) {
  std::vector<int> h(g.size());
  for (std::size_t t = 0; t < g.size(); ++t) h[t] = e.degeneracy[g[t]];
  return normalize(x, h, e.level, e.simplex);
}

}  // namespace

std::vector<std::string> validate(const SimplicialSetFinite& x) {
  std::vector<std::string> out;
  int top = x.dimension();
  if (static_cast<int>(x.faces.size()) != top + 1 && !(top < 0 && x.faces.empty())) {
    out.push_back("face table size");
    return out;
  }
  for (int k = 1; k <= top; ++k) {
    if (static_cast<int>(x.faces[k].size()) != x.nondegenerate[k]) {
      out.push_back("face list count at level " + std::to_string(k));
      continue;
    }
    for (int y = 0; y < x.nondegenerate[k]; ++y) {
      if (static_cast<int>(x.faces[k][y].size()) != k + 1) {
        out.push_back("simplex needs k+1 faces");
        continue;
      }
      for (const auto& f : x.faces[k][y]) {
        bool ok = f.level >= 0 && f.level < k && f.simplex >= 0 && f.level <= top &&
                  f.simplex < x.nondegenerate[f.level] && static_cast<int>(f.degeneracy.size()) == k;
        if (ok) {
          std::vector<char> hit(f.level + 1, 0);
          for (std::size_t t = 0; t < f.degeneracy.size(); ++t) {
            int v = f.degeneracy[t];
            if (v < 0 || v > f.level || (t > 0 && v < f.degeneracy[t - 1])) ok = false;
            else hit[v] = 1;
          }
          ok = ok && std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
        }
        if (!ok) out.push_back("malformed face at level " + std::to_string(k));
      }
    }
  }
  if (!out.empty()) return out;
  for (int k = 2; k <= top; ++k)
    for (int y = 0; y < x.nondegenerate[k]; ++y) {
      std::vector<int> id(k + 1);
      std::iota(id.begin(), id.end(), 0);
      SimplexElement e{id, k, y};
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i) {
          auto a = apply_map(x, coface(k - 1, i), apply_map(x, coface(k, j), e));
          auto b = apply_map(x, coface(k - 1, j - 1), apply_map(x, coface(k, i), e));
          if (!(a == b))
            out.push_back("simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) +
                          " fails on simplex " + std::to_string(y) + " of level " + std::to_string(k));
        }
    }
  return out;
}

SimplicialSetFinite standard_simplex(int m) {
  return from_subsets(all_faces(m, [](const Subset&) { return true; }));
}

SimplicialSetFinite simplex_boundary(int m) {
  return from_subsets(all_faces(m, [m](const Subset& s) { return static_cast<int>(s.size()) <= m; }));
}

SimplicialSetFinite horn(int m, int k) {
  return from_subsets(all_faces(m, [m, k](const Subset& s) {
    if (static_cast<int>(s.size()) == m + 1) return false;
    if (static_cast<int>(s.size()) == m && std::find(s.begin(), s.end(), k) == s.end()) return false;
    return true;
  }));
}

SimplicialSetFinite empty_simplicial_set() { return {}; }

SimplicialPresheaf::SimplicialPresheaf(ThetaSitePtr delta, SimplicialSetFinite data)
    : Presheaf(delta), delta_(std::move(delta)), data_(std::move(data)) {
  if (delta_->level() != 1) throw std::invalid_argument("simplicial presheaves live on a Delta site");
  auto problems = validate(data_);
  if (!problems.empty()) throw std::invalid_argument("invalid simplicial set: " + problems.front());
  int max_m = 0;
  for (ObjId a = 0; a < delta_->size(); ++a) max_m = std::max(max_m, delta_index(delta_->table(a)));
  if (data_.dimension() > max_m)
    throw BoundExhausted("simplicial set has simplices above " + delta_->bounds());
  for (ObjId a = 0; a < delta_->size(); ++a) {
    int m = delta_index(delta_->table(a));
    std::vector<SimplexElement> elems;
    ObjId self = a;
    for (int k = 0; k <= std::min(m, data_.dimension()); ++k) {
      ObjId b = *delta_->find(delta_bridge(k));
      std::vector<std::vector<int>> surj;
      for (MorId s : delta_->hom(self, b))
        if (delta_->is_split_epi(s)) surj.push_back(delta_->morphism(s).functor.map[0]);
      std::sort(surj.begin(), surj.end());
      for (int y = 0; y < data_.nondegenerate[k]; ++y)
        for (const auto& s : surj) elems.push_back({s, k, y});
    }
    std::map<SimplexElement, Elem> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], static_cast<Elem>(i));
    elements_.push_back(std::move(elems));
    index_.push_back(std::move(idx));
  }
}

Elem SimplicialPresheaf::index(ObjId a, const SimplexElement& e) const {
  auto it = index_[a].find(e);
  if (it == index_[a].end()) throw std::logic_error("simplex element not found");
  return it->second;
}

SimplexElement SimplicialPresheaf::apply(const std::vector<int>& objects, const SimplexElement& e) const {
  return apply_map(data_, objects, e);
}

std::vector<Elem> SimplicialPresheaf::compute_action(MorId g) const {
  ObjId a = delta_->source(g), b = delta_->target(g);
  const std::vector<int>& objects = delta_->morphism(g).functor.map[0];
  std::vector<Elem> out;
  for (const SimplexElement& e : elements_[b]) out.push_back(index(a, apply(objects, e)));
  return out;
}

std::string SimplicialPresheaf::encode(ObjId a, Elem x) const {
  const SimplexElement& e = elements_[a][x];
  std::string s;
  if (e.level < static_cast<int>(data_.names.size()) && e.simplex < static_cast<int>(data_.names[e.level].size()))
    s = data_.names[e.level][e.simplex];
  else
    s = std::to_string(e.level) + ":" + std::to_string(e.simplex);
  bool degenerate = static_cast<int>(e.degeneracy.size()) != e.level + 1;
  if (degenerate) {
    s += "^";
    for (int v : e.degeneracy) s += std::to_string(v);
  }
  return s;
}

SimplicialPtr simplicial_presheaf(const ThetaSitePtr& delta, const SimplicialSetFinite& data,
                                  const std::string& name) {
  auto p = std::make_shared<SimplicialPresheaf>(delta, data);
  p->set_name(name);
  return p;
}

PresheafMap simplicial_map(const SimplicialPtr& source, const SimplicialPtr& target,
                           const std::vector<std::vector<SimplexElement>>& image) {
  PresheafMap m{source, target, {}};
  const Site& s = source->site();
  for (ObjId a = 0; a < s.size(); ++a) {
    std::vector<Elem> c;
    for (Elem x = 0; x < static_cast<Elem>(source->size(a)); ++x) {
      const SimplexElement& e = source->element(a, x);
      c.push_back(target->index(a, target->apply(e.degeneracy, image[e.level][e.simplex])));
    }
    m.component.push_back(std::move(c));
  }
  return m;
}

PresheafMap simplicial_inclusion(const SimplicialPtr& sub, const SimplicialPtr& ambient) {
  const auto& sn = sub->data().names;
  const auto& an = ambient->data().names;
  std::vector<std::vector<SimplexElement>> image(sn.size());
  for (std::size_t k = 0; k < sn.size(); ++k)
    for (const std::string& name : sn[k]) {
      auto it = std::find(an[k].begin(), an[k].end(), name);
      if (it == an[k].end()) throw std::invalid_argument("simplex " + name + " missing from ambient");
      std::vector<int> id(k + 1);
      std::iota(id.begin(), id.end(), 0);
      image[k].push_back({id, static_cast<int>(k), static_cast<int>(it - an[k].begin())});
    }
  return simplicial_map(sub, ambient, image);
}

}  // namespace thetacat
