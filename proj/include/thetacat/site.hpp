#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "thetacat/theta.hpp"

namespace thetacat {

using ObjId = int;
using MorId = int;

// A finite category used as the indexing site of presheaves. Derived classes
// fill the object and morphism tables; composition is memoized.
class Site {
 public:
  virtual ~Site() = default;

  int size() const { return static_cast<int>(degree_.size()); }
  int morphism_count() const { return static_cast<int>(src_.size()); }
  virtual std::string label(ObjId a) const = 0;
  virtual std::string bounds() const = 0;
  int degree(ObjId a) const { return degree_[a]; }
  ObjId source(MorId g) const { return src_[g]; }
  ObjId target(MorId g) const { return tgt_[g]; }
  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return hom_[a][b]; }
  // Morphisms with the given target, identity first.
  const std::vector<MorId>& into(ObjId b) const { return into_[b]; }
  MorId identity(ObjId a) const { return identity_[a]; }
  MorId compose(MorId g, MorId f) const;  // g after f
  bool is_split_epi(MorId g) const;
  virtual bool is_mono(MorId g) const = 0;
  // Object t with exactly one morphism from every object, if any.
  std::optional<ObjId> terminal() const;

 protected:
  virtual MorId compose_uncached(MorId g, MorId f) const = 0;
  // Called by derived constructors once src_, tgt_, degree_ and hom_ are set.
  void finish();

  std::vector<int> degree_;
  std::vector<ObjId> src_, tgt_;
  std::vector<std::vector<std::vector<MorId>>> hom_;
  std::vector<std::vector<MorId>> into_;
  std::vector<MorId> identity_;

 private:
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, MorId> compose_cache_;
  mutable std::vector<signed char> split_epi_;
};

using SitePtr = std::shared_ptr<const Site>;

// Theta_n truncated to tables of dimension <= max_dim and width <= max_width.
class ThetaSite : public Site {
 public:
  ThetaSite(int n, int max_dim, int max_width);

  int level() const { return n_; }
  int max_dim() const { return max_dim_; }
  int max_width() const { return max_width_; }
  const Table& table(ObjId a) const { return tables_[a]; }
  const std::vector<Table>& tables() const { return tables_; }
  std::optional<ObjId> find(const Table& t) const;
  const ThetaMorphism& morphism(MorId g) const { return *morphisms_[g]; }
  std::optional<MorId> find(ObjId a, ObjId b, const NFunctor& u) const;
  // Unique (epi, mono) pair with f = mono o epi.
  std::pair<MorId, MorId> ez_factorize(MorId f) const;

  std::string label(ObjId a) const override { return tables_[a].str(); }
  std::string bounds() const override;
  bool is_mono(MorId g) const override { return is_mono_[g]; }

 protected:
  MorId compose_uncached(MorId g, MorId f) const override;

 private:
  int n_, max_dim_, max_width_;
  std::vector<Table> tables_;
  std::vector<const ThetaMorphism*> morphisms_;
  std::vector<char> is_mono_;
  std::vector<std::vector<std::unordered_map<std::string, MorId>>> lookup_;
};

using ThetaSitePtr = std::shared_ptr<const ThetaSite>;
ThetaSitePtr make_theta_site(int n, int max_dim, int max_width);
// The simplex category Delta truncated at [m] for m <= max_m.
ThetaSitePtr make_delta_site(int max_m);

// Product of two sites; object (a, b) has id a * |right| + b.
class ProductSite : public Site {
 public:
  ProductSite(SitePtr left, SitePtr right);

  const SitePtr& left() const { return left_; }
  const SitePtr& right() const { return right_; }
  ObjId pair(ObjId a, ObjId b) const { return a * right_->size() + b; }
  std::pair<ObjId, ObjId> split(ObjId x) const { return {x / right_->size(), x % right_->size()}; }
  std::pair<MorId, MorId> factors(MorId g) const { return factors_[g]; }
  MorId pair_morphism(MorId g, MorId h) const;

  std::string label(ObjId a) const override;
  std::string bounds() const override;
  bool is_mono(MorId g) const override;

 protected:
  MorId compose_uncached(MorId g, MorId f) const override;

 private:
  SitePtr left_, right_;
  std::vector<std::pair<MorId, MorId>> factors_;
  std::vector<int> position_left_, position_right_;
  std::vector<std::vector<MorId>> base_;  // base_[x][y]
};

using ProductSitePtr = std::shared_ptr<const ProductSite>;

std::string functor_key(const NFunctor& u);

}  // namespace thetacat
