#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "thetacat/site.hpp"

namespace thetacat {

using Elem = int;

// A set-valued presheaf on a finite site. Elements of X(a) are 0..size(a)-1;
// action(g) for g: a -> b maps X(b) to X(a) and is computed lazily.
class Presheaf {
 public:
  explicit Presheaf(SitePtr site);
  virtual ~Presheaf() = default;
  Presheaf(const Presheaf&) = delete;
  Presheaf& operator=(const Presheaf&) = delete;

  const Site& site() const { return *site_; }
  const SitePtr& site_ptr() const { return site_; }
  virtual std::size_t size(ObjId a) const = 0;
  std::size_t total_size() const;
  const std::vector<Elem>& action(MorId g) const;
  Elem act(MorId g, Elem x) const { return action(g)[x]; }
  virtual std::string encode(ObjId a, Elem x) const;
  virtual std::string name() const { return "presheaf"; }

 protected:
  virtual std::vector<Elem> compute_action(MorId g) const = 0;

 private:
  SitePtr site_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<const std::vector<Elem>>> cache_;
};

using PresheafPtr = std::shared_ptr<const Presheaf>;

struct PresheafMap {
  PresheafPtr source, target;
  std::vector<std::vector<Elem>> component;  // component[a][x]

  Elem operator()(ObjId a, Elem x) const { return component[a][x]; }
  bool operator==(const PresheafMap& o) const { return component == o.component; }
};

PresheafMap identity_map(const PresheafPtr& x);
PresheafMap compose(const PresheafMap& g, const PresheafMap& f);  // g after f
bool is_natural(const PresheafMap& f);
bool is_mono(const PresheafMap& f);  // pointwise injective
bool is_iso(const PresheafMap& f);

// Constant presheaves.
PresheafPtr terminal_presheaf(const SitePtr& site);
PresheafPtr empty_presheaf(const SitePtr& site);
PresheafMap to_terminal(const PresheafPtr& x, const PresheafPtr& terminal);
PresheafMap from_empty(const PresheafPtr& empty, const PresheafPtr& x);

// Yoneda: elements of representable(a)(b) are the morphisms b -> a.
class RepresentablePresheaf : public Presheaf {
 public:
  RepresentablePresheaf(SitePtr site, ObjId object);
  ObjId object() const { return object_; }
  MorId morphism(ObjId b, Elem x) const { return site().hom(b, object_)[x]; }
  Elem index(MorId g) const;
  std::size_t size(ObjId b) const override { return site().hom(b, object_).size(); }
  std::string encode(ObjId b, Elem x) const override;
  std::string name() const override { return "y(" + site().label(object_) + ")"; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  ObjId object_;
  std::vector<int> position_;
};

// Yoneda image of a site morphism.
PresheafMap representable_map(const std::shared_ptr<const RepresentablePresheaf>& from,
                              const std::shared_ptr<const RepresentablePresheaf>& to, MorId g);

// Nerve of a strict n-category on a Theta site.
class NervePresheaf : public Presheaf {
 public:
  NervePresheaf(ThetaSitePtr site, NCatPtr cat, std::string label = "C");
  const NCatPtr& category() const { return cat_; }
  const NFunctor& element(ObjId a, Elem x) const { return elements_[a][x]; }
  std::optional<Elem> index(ObjId a, const NFunctor& u) const;
  std::size_t size(ObjId a) const override { return elements_[a].size(); }
  std::string encode(ObjId a, Elem x) const override;
  std::string name() const override { return "N(" + label_ + ")"; }
  const ThetaSite& theta() const { return *theta_; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  ThetaSitePtr theta_;
  NCatPtr cat_;
  std::string label_;
  std::vector<std::vector<NFunctor>> elements_;
  std::vector<std::unordered_map<std::string, Elem>> index_;
};

using NervePtr = std::shared_ptr<const NervePresheaf>;
NervePtr nerve(const ThetaSitePtr& site, const NCatPtr& cat, const std::string& label = "C");
PresheafMap nerve_map(const NervePtr& source, const NervePtr& target, const NFunctor& u);

// Subpresheaf given by sorted element lists of an ambient presheaf.
class SubPresheaf : public Presheaf {
 public:
  SubPresheaf(PresheafPtr ambient, std::vector<std::vector<Elem>> members, std::string label);
  const PresheafPtr& ambient() const { return ambient_; }
  Elem ambient_element(ObjId a, Elem x) const { return members_[a][x]; }
  std::optional<Elem> index(ObjId a, Elem ambient_x) const;
  std::size_t size(ObjId a) const override { return members_[a].size(); }
  std::string encode(ObjId a, Elem x) const override { return ambient_->encode(a, members_[a][x]); }
  std::string name() const override { return label_; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  PresheafPtr ambient_;
  std::vector<std::vector<Elem>> members_;
  std::vector<std::vector<Elem>> position_;
  std::string label_;
};

using SubPtr = std::shared_ptr<const SubPresheaf>;
// Smallest subpresheaf containing the given (object, element) generators.
SubPtr generated_subpresheaf(const PresheafPtr& ambient,
                             const std::vector<std::pair<ObjId, Elem>>& generators,
                             const std::string& label);
SubPtr union_of(const SubPtr& a, const SubPtr& b, const std::string& label);
SubPtr image(const PresheafMap& f, const std::string& label);
PresheafMap inclusion(const SubPtr& sub);
// Corestriction of f to a subpresheaf containing its image.
PresheafMap corestrict(const PresheafMap& f, const SubPtr& sub);

class ProductPresheaf : public Presheaf {
 public:
  ProductPresheaf(PresheafPtr left, PresheafPtr right);
  const PresheafPtr& left() const { return left_; }
  const PresheafPtr& right() const { return right_; }
  Elem pair(ObjId a, Elem x, Elem y) const { return static_cast<Elem>(x * right_->size(a) + y); }
  std::pair<Elem, Elem> split(ObjId a, Elem z) const {
    Elem w = static_cast<Elem>(right_->size(a));
    return {z / w, z % w};
  }
  std::size_t size(ObjId a) const override { return left_->size(a) * right_->size(a); }
  std::string encode(ObjId a, Elem z) const override;
  std::string name() const override { return left_->name() + " x " + right_->name(); }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  PresheafPtr left_, right_;
};

using ProductPtr = std::shared_ptr<const ProductPresheaf>;
ProductPtr product(const PresheafPtr& x, const PresheafPtr& y);
PresheafMap product_map(const ProductPtr& source, const ProductPtr& target, const PresheafMap& f,
                        const PresheafMap& g);
PresheafMap product_projection(const ProductPtr& p, int which);
PresheafMap pairing(const PresheafMap& f, const PresheafMap& g, const ProductPtr& target);

class CoproductPresheaf : public Presheaf {
 public:
  CoproductPresheaf(PresheafPtr left, PresheafPtr right);
  const PresheafPtr& left() const { return left_; }
  const PresheafPtr& right() const { return right_; }
  std::size_t size(ObjId a) const override { return left_->size(a) + right_->size(a); }
  std::string encode(ObjId a, Elem z) const override;
  std::string name() const override { return left_->name() + " + " + right_->name(); }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  PresheafPtr left_, right_;
};

using CoproductPtr = std::shared_ptr<const CoproductPresheaf>;
CoproductPtr coproduct(const PresheafPtr& x, const PresheafPtr& y);
PresheafMap coproduct_injection(const CoproductPtr& s, int which);
PresheafMap copairing(const CoproductPtr& s, const PresheafMap& f, const PresheafMap& g);

// Pointwise pushout of f: a -> b and g: a -> c.
class PushoutPresheaf : public Presheaf {
 public:
  PushoutPresheaf(PresheafMap f, PresheafMap g);
  // Class of an element of b (side 0) or c (side 1).
  Elem class_of(ObjId a, int side, Elem x) const;
  std::size_t size(ObjId a) const override { return reps_[a].size(); }
  std::string encode(ObjId a, Elem z) const override;
  std::string name() const override { return "pushout"; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  PresheafMap f_, g_;
  std::vector<std::vector<Elem>> class_;  // over b then c
  std::vector<std::vector<Elem>> reps_;   // representative per class
};

using PushoutPtr = std::shared_ptr<const PushoutPresheaf>;
PushoutPtr pushout(const PresheafMap& f, const PresheafMap& g);
PresheafMap pushout_injection(const PushoutPtr& p, int which, const PresheafPtr& side);
// Induced map out of the pushout from maps u: b -> d, v: c -> d.
PresheafMap pushout_copair(const PushoutPtr& p, const PresheafMap& u, const PresheafMap& v);

// Pointwise pullback of f: a -> c and g: b -> c.
class PullbackPresheaf : public Presheaf {
 public:
  PullbackPresheaf(PresheafMap f, PresheafMap g);
  std::pair<Elem, Elem> split(ObjId a, Elem z) const { return pairs_[a][z]; }
  std::optional<Elem> index(ObjId a, Elem x, Elem y) const;
  std::size_t size(ObjId a) const override { return pairs_[a].size(); }
  std::string encode(ObjId a, Elem z) const override;
  std::string name() const override { return "pullback"; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  PresheafMap f_, g_;
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs_;
  std::vector<std::unordered_map<std::uint64_t, Elem>> index_;
};

using PullbackPtr = std::shared_ptr<const PullbackPresheaf>;
PullbackPtr pullback(const PresheafMap& f, const PresheafMap& g);
PresheafMap pullback_projection(const PullbackPtr& p, int which, const PresheafPtr& side);

// Functions from the points of each object (morphisms from the terminal
// object) to a k-element set. On Theta sites this is the nerve of the
// chaotic category on k objects.
class CodiscretePresheaf : public Presheaf {
 public:
  CodiscretePresheaf(SitePtr site, int k);
  int values() const { return k_; }
  std::size_t points(ObjId a) const { return site().hom(terminal_, a).size(); }
  std::size_t size(ObjId a) const override { return sizes_[a]; }
  std::string encode(ObjId a, Elem x) const override;
  std::string name() const override { return "codiscrete(" + std::to_string(k_) + ")"; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  int k_;
  ObjId terminal_;
  std::vector<std::size_t> sizes_;
};

// Map between codiscrete presheaves induced by a function on values.
PresheafMap codiscrete_map(const std::shared_ptr<const CodiscretePresheaf>& source,
                           const std::shared_ptr<const CodiscretePresheaf>& target,
                           const std::vector<int>& values);

// A presheaf with a list of generating elements.
struct FinitelyGenerated {
  SubPtr presheaf;
  PresheafMap inclusion;  // into the representable or ambient presheaf
  std::vector<std::pair<ObjId, Elem>> generators;
};
// Whether every element is a restriction of a generator.
bool check_generation(const PresheafPtr& x, const std::vector<std::pair<ObjId, Elem>>& generators);

using RepresentablePtr = std::shared_ptr<const RepresentablePresheaf>;
RepresentablePtr representable(const ThetaSitePtr& site, const Table& t);
FinitelyGenerated boundary(const ThetaSitePtr& site, const Table& t);
FinitelyGenerated spine(const ThetaSitePtr& site, const Table& t);

// Elements not of the form act(e, y) for a non-identity split epi e.
std::vector<std::pair<ObjId, Elem>> nondegenerate_cells(const Presheaf& x);

// Enumeration of presheaf maps v -> x. Unassigned preassign entries are -1;
// filter vetoes (object, element of v, image) choices.
struct MapConstraints {
  std::vector<std::vector<Elem>> preassign;
  std::function<bool(ObjId, Elem, Elem)> filter;
};
void for_each_map(const PresheafPtr& v, const PresheafPtr& x, const MapConstraints& c,
                  const std::function<bool(const PresheafMap&)>& visit);
std::vector<PresheafMap> enumerate_maps(const PresheafPtr& v, const PresheafPtr& x,
                                        const MapConstraints& c = {});
std::size_t count_maps(const PresheafPtr& v, const PresheafPtr& x, const MapConstraints& c = {});

// Pullback along truncation: (t* x)(T) = x([s]) with s the number of
// segments of T; x lives on a Delta site.
class TruncationPullback : public Presheaf {
 public:
  TruncationPullback(ThetaSitePtr site, PresheafPtr simplicial);
  std::size_t size(ObjId a) const override;
  std::string encode(ObjId a, Elem x) const override;
  std::string name() const override { return "t*" + base_->name(); }
  ObjId simplex_of(ObjId a) const { return simplex_[a]; }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  ThetaSitePtr theta_;
  PresheafPtr base_;
  std::vector<ObjId> simplex_;
};

PresheafPtr pullback_t(const ThetaSitePtr& site, const PresheafPtr& simplicial);

struct SegalReport {
  bool holds = false;
  std::size_t elements = 0;      // |X(T)|
  std::size_t spine_maps = 0;    // |maps(spine(T), X)|
};
SegalReport segal_check(const ThetaSitePtr& site, const NCatPtr& c, const Table& t);

}  // namespace thetacat
