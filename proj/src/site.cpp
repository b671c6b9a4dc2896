#include "thetacat/site.hpp"

#include <algorithm>
#include <sstream>

namespace thetacat {

void Site::finish() {
  int objs = size();
  identity_.assign(objs, -1);
  into_.assign(objs, {});
  for (ObjId b = 0; b < objs; ++b) {
    for (ObjId a = 0; a < objs; ++a)
      for (MorId g : hom_[a][b]) into_[b].push_back(g);
  }
  split_epi_.assign(src_.size(), -1);
}

MorId Site::compose(MorId g, MorId f) const {
  if (tgt_[f] != src_[g]) throw std::invalid_argument("site morphisms are not composable");
  if (g == identity_[tgt_[f]]) return f;
  if (f == identity_[src_[g]]) return g;
  std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint32_t>(f);
  {
    std::lock_guard lock(mu_);
    auto it = compose_cache_.find(key);
    if (it != compose_cache_.end()) return it->second;
  }
  MorId r = compose_uncached(g, f);
  std::lock_guard lock(mu_);
  compose_cache_.emplace(key, r);
  return r;
}

bool Site::is_split_epi(MorId g) const {
  {
    std::lock_guard lock(mu_);
    if (split_epi_[g] >= 0) return split_epi_[g] == 1;
  }
  bool found = false;
  for (MorId s : hom_[tgt_[g]][src_[g]])
    if (compose(g, s) == identity_[tgt_[g]]) {
      found = true;
      break;
    }
  std::lock_guard lock(mu_);
  split_epi_[g] = found ? 1 : 0;
  return found;
}

std::optional<ObjId> Site::terminal() const {
  for (ObjId t = 0; t < size(); ++t) {
    bool ok = true;
    for (ObjId a = 0; a < size() && ok; ++a) ok = hom_[a][t].size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

std::string functor_key(const NFunctor& u) {
  std::string s;
  for (const auto& level : u.map) {
    for (int y : level) {
      s += std::to_string(y);
      s += ',';
    }
    s += '/';
  }
  return s;
}

ThetaSite::ThetaSite(int n, int max_dim, int max_width)
    : n_(n), max_dim_(max_dim), max_width_(max_width) {
  if (max_dim > n) throw LevelMismatch("site dimension bound exceeds level");
  tables_ = enumerate_objects(max_dim, max_width);
  int objs = static_cast<int>(tables_.size());
  hom_.assign(objs, std::vector<std::vector<MorId>>(objs));
  lookup_.assign(objs, std::vector<std::unordered_map<std::string, MorId>>(objs));
  for (ObjId a = 0; a < objs; ++a)
    degree_.push_back(static_cast<int>(free_ncat(tables_[a], n).cat->total_cells()));
  for (ObjId a = 0; a < objs; ++a)
    for (ObjId b = 0; b < objs; ++b)
      for (const ThetaMorphism& f : thetacat::hom(tables_[a], tables_[b], n)) {
        MorId id = static_cast<MorId>(src_.size());
        src_.push_back(a);
        tgt_.push_back(b);
        morphisms_.push_back(&f);
        is_mono_.push_back(thetacat::is_mono(f) ? 1 : 0);
        hom_[a][b].push_back(id);
        lookup_[a][b].emplace(functor_key(f.functor), id);
      }
  finish();
  for (ObjId a = 0; a < objs; ++a) {
    auto it = lookup_[a][a].find(functor_key(identity_functor(free_ncat(tables_[a], n).cat)));
    identity_[a] = it->second;
    auto& list = into_[a];
    std::stable_partition(list.begin(), list.end(), [&](MorId g) { return g == identity_[a]; });
  }
}

std::optional<ObjId> ThetaSite::find(const Table& t) const {
  for (ObjId a = 0; a < size(); ++a)
    if (tables_[a] == t) return a;
  return std::nullopt;
}

std::optional<MorId> ThetaSite::find(ObjId a, ObjId b, const NFunctor& u) const {
  auto it = lookup_[a][b].find(functor_key(u));
  if (it == lookup_[a][b].end()) return std::nullopt;
  return it->second;
}

MorId ThetaSite::compose_uncached(MorId g, MorId f) const {
  NFunctor u = thetacat::compose(morphisms_[g]->functor, morphisms_[f]->functor);
  auto r = find(src_[f], tgt_[g], u);
  if (!r) throw std::logic_error("composite missing from site");
  return *r;
}

std::pair<MorId, MorId> ThetaSite::ez_factorize(MorId f) const {
  std::vector<std::pair<MorId, MorId>> found;
  ObjId a = src_[f], b = tgt_[f];
  for (ObjId m = 0; m < size(); ++m)
    for (MorId mono : hom_[m][b]) {
      if (!is_mono_[mono]) continue;
      for (MorId epi : hom_[a][m])
        if (compose(mono, epi) == f && is_split_epi(epi)) found.emplace_back(epi, mono);
    }
  if (found.empty()) throw BoundExhausted("no Eilenberg-Zilber factorization within the site");
  if (found.size() > 1) throw std::logic_error("Eilenberg-Zilber factorization is not unique");
  return found.front();
}

std::string ThetaSite::bounds() const {
  std::ostringstream os;
  os << "Theta_" << n_ << " dim<=" << max_dim_ << " width<=" << max_width_;
  return os.str();
}

ThetaSitePtr make_theta_site(int n, int max_dim, int max_width) {
  return std::make_shared<const ThetaSite>(n, max_dim, max_width);
}

ThetaSitePtr make_delta_site(int max_m) {
  return std::make_shared<const ThetaSite>(1, max_m == 0 ? 0 : 1, std::max(max_m, 1));
}

ProductSite::ProductSite(SitePtr left, SitePtr right) : left_(std::move(left)), right_(std::move(right)) {
  int nl = left_->size(), nr = right_->size();
  int objs = nl * nr;
  for (ObjId x = 0; x < objs; ++x) degree_.push_back(left_->degree(x / nr) + right_->degree(x % nr));
  hom_.assign(objs, std::vector<std::vector<MorId>>(objs));
  base_.assign(objs, std::vector<MorId>(objs, 0));
  position_left_.assign(left_->morphism_count(), 0);
  position_right_.assign(right_->morphism_count(), 0);
  for (ObjId a = 0; a < nl; ++a)
    for (ObjId b = 0; b < nl; ++b)
      for (std::size_t i = 0; i < left_->hom(a, b).size(); ++i) position_left_[left_->hom(a, b)[i]] = static_cast<int>(i);
  for (ObjId a = 0; a < nr; ++a)
    for (ObjId b = 0; b < nr; ++b)
      for (std::size_t i = 0; i < right_->hom(a, b).size(); ++i) position_right_[right_->hom(a, b)[i]] = static_cast<int>(i);
  for (ObjId x = 0; x < objs; ++x)
    for (ObjId y = 0; y < objs; ++y) {
      base_[x][y] = static_cast<MorId>(src_.size());
      for (MorId g : left_->hom(x / nr, y / nr))
        for (MorId h : right_->hom(x % nr, y % nr)) {
          hom_[x][y].push_back(static_cast<MorId>(src_.size()));
          src_.push_back(x);
          tgt_.push_back(y);
          factors_.emplace_back(g, h);
        }
    }
  finish();
  for (ObjId x = 0; x < objs; ++x) {
    identity_[x] = pair_morphism(left_->identity(x / nr), right_->identity(x % nr));
    auto& list = into_[x];
    std::stable_partition(list.begin(), list.end(), [&](MorId g) { return g == identity_[x]; });
  }
}

MorId ProductSite::pair_morphism(MorId g, MorId h) const {
  ObjId x = pair(left_->source(g), right_->source(h));
  ObjId y = pair(left_->target(g), right_->target(h));
  int width = static_cast<int>(right_->hom(right_->source(h), right_->target(h)).size());
  return base_[x][y] + position_left_[g] * width + position_right_[h];
}

MorId ProductSite::compose_uncached(MorId g, MorId f) const {
  auto [g1, g2] = factors_[g];
  auto [f1, f2] = factors_[f];
  return pair_morphism(left_->compose(g1, f1), right_->compose(g2, f2));
}

bool ProductSite::is_mono(MorId g) const {
  return left_->is_mono(factors_[g].first) && right_->is_mono(factors_[g].second);
}

std::string ProductSite::label(ObjId a) const {
  return "(" + left_->label(a / right_->size()) + ")x[" + right_->label(a % right_->size()) + "]";
}

std::string ProductSite::bounds() const { return left_->bounds() + " x " + right_->bounds(); }

}  // namespace thetacat
