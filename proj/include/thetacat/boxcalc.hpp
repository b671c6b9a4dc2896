#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetacat/lifting.hpp"
#include "thetacat/simplicial.hpp"

namespace thetacat {

// Presheaves on Theta x Delta are presheaves on a ProductSite whose left
// factor is a Theta site and whose right factor is a Delta site.
using BiPresheafPtr = PresheafPtr;

ProductSitePtr make_bisite(const ThetaSitePtr& theta, const ThetaSitePtr& delta);
ThetaSitePtr theta_factor(const ProductSite& s);
ThetaSitePtr delta_factor(const ProductSite& s);

// (X box Y)(a, b) = X(a) x Y(b).
class ExternalProduct : public Presheaf {
 public:
  ExternalProduct(ProductSitePtr site, PresheafPtr left, PresheafPtr right);
  const PresheafPtr& left() const { return left_; }
  const PresheafPtr& right() const { return right_; }
  Elem pair(ObjId ab, Elem x, Elem y) const;
  std::pair<Elem, Elem> split(ObjId ab, Elem z) const;
  std::size_t size(ObjId ab) const override;
  std::string encode(ObjId ab, Elem z) const override;
  std::string name() const override { return left_->name() + " [] " + right_->name(); }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  const ProductSite& bisite() const { return *bisite_; }
  ProductSitePtr bisite_;
  PresheafPtr left_, right_;
};

using ExternalProductPtr = std::shared_ptr<const ExternalProduct>;
ExternalProductPtr external_product(const ProductSitePtr& site, const PresheafPtr& x, const PresheafPtr& y);
PresheafMap external_product_map(const ExternalProductPtr& source, const ExternalProductPtr& target,
                                 const PresheafMap& u, const PresheafMap& v);

// p*(X) = X box Delta_0 and q*(Y) = 1 box Y.
ExternalProductPtr p_star(const ProductSitePtr& site, const PresheafPtr& x);
PresheafMap p_star(const ProductSitePtr& site, const PresheafMap& u);
ExternalProductPtr q_star(const ProductSitePtr& site, const PresheafPtr& y);
PresheafMap q_star(const ProductSitePtr& site, const PresheafMap& v);

// u box' v : U box T +_{U box S} V box S -> V box T.
PresheafMap pushout_product(const ProductSitePtr& site, const PresheafMap& u, const PresheafMap& v);

// Elements at a are the maps probe(a) -> target; g: b -> a acts by
// precomposition with probe_map(g): probe(b) -> probe(a).
class MapSpacePresheaf : public Presheaf {
 public:
  using ProbeMap = std::function<PresheafMap(MorId)>;
  MapSpacePresheaf(SitePtr site, std::vector<PresheafPtr> probes, ProbeMap probe_map, PresheafPtr target,
                   std::string label);
  const PresheafPtr& probe(ObjId a) const { return probes_[a]; }
  const PresheafPtr& target() const { return target_; }
  const PresheafMap& element(ObjId a, Elem x) const { return elements_[a][x]; }
  std::optional<Elem> index(ObjId a, const PresheafMap& m) const;
  std::size_t size(ObjId a) const override { return elements_[a].size(); }
  std::string encode(ObjId a, Elem x) const override;
  std::string name() const override { return label_; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  std::vector<PresheafPtr> probes_;
  ProbeMap probe_map_;
  PresheafPtr target_;
  std::string label_;
  std::vector<std::vector<PresheafMap>> elements_;
  std::vector<std::map<std::vector<std::vector<Elem>>, Elem>> index_;
};

using MapSpacePtr = std::shared_ptr<const MapSpacePresheaf>;

// (V\X)_m = maps V box Delta_m -> X, a presheaf on the Delta factor.
MapSpacePtr under(const ProductSitePtr& site, const PresheafPtr& v, const BiPresheafPtr& x);
// (X/T)_a = maps y(a) box T -> X, a presheaf on the Theta factor.
MapSpacePtr over(const ProductSitePtr& site, const BiPresheafPtr& x, const PresheafPtr& t);

struct DivisionMap {
  PullbackPtr fiber;  // pairs (element of V\Y or Y/T, element of U\X or X/S)
  PresheafMap map;    // comparison into the fiber product
};
// <u\f> : V\X -> V\Y x_{U\Y} U\X.
DivisionMap under_division(const ProductSitePtr& site, const PresheafMap& u, const PresheafMap& f);
// <f/v> : X/T -> Y/T x_{Y/S} X/S.
DivisionMap over_division(const ProductSitePtr& site, const PresheafMap& f, const PresheafMap& v);

struct OrthogonalityReport {
  RlpReport box, over, under;  // (u box' v) vs f, u vs <f/v>, v vs <u\f>
  bool agree() const { return box.holds == over.holds && over.holds == under.holds; }
};
OrthogonalityReport orthogonality_equivalence_test(const ProductSitePtr& site, const PresheafMap& u,
                                                   const PresheafMap& v, const PresheafMap& f);

// delta_T box' delta_m over the bounded objects of both factors.
GeneratorSet bisite_boundary_generators(const ProductSitePtr& site);
RlpReport check_bisite_trivial_fibration(const PresheafMap& f, const ProductSitePtr& site);

// p* of the spines and of N(J) -> 1 and N(j_k) (Collapse), or of the
// endpoint N(D_0) -> N(J) and N(s^e_k) (Sections).
GeneratorSet rezk_generators(const ProductSitePtr& site, LocalizerPart part = LocalizerPart::Collapse);

struct ResolutionReport {
  bool endpoints_mono = false;            // N(D~_0) + N(D~_0) -> N(D~_1)
  std::vector<RlpReport> trivial_fibration;  // N(D~_k) -> 1 for k <= k_max
  std::vector<bool> codiscrete_match;     // N(D~_k) and codiscrete(k + 1) agree pointwise
  bool ok() const;
};
ResolutionReport resolution_check(const ThetaSitePtr& site, int k_max);

// Small pools of monos on each factor and of maps on the product, for
// sampled orthogonality checks.
struct OrthogonalityPools {
  ProductSitePtr site;
  GeneratorSet theta_monos, delta_monos, bimaps;
};
OrthogonalityPools orthogonality_pools(int n, int max_dim, int max_width, int max_m);

struct SampledOrthogonality {
  std::string u, v, f;
  OrthogonalityReport report;
};
// The named instance (boundary of (1), boundary of [1], p*N(J) -> 1) first,
// then samples drawn with std::mt19937 from the pools.
std::vector<SampledOrthogonality> sample_orthogonality(const OrthogonalityPools& pools, int samples,
                                                       unsigned seed);

}  // namespace thetacat
