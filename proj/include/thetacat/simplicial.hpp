#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetacat/presheaf.hpp"

namespace thetacat {

// A finite simplicial set stored by its nondegenerate simplices and their
// faces. A face is a nondegenerate simplex of some level together with the
// degeneracy (a monotone surjection) applied to it.
struct SimplicialSetFinite {
  struct Face {
    int level = 0;
    int simplex = 0;
    std::vector<int> degeneracy;  // monotone surjection [k-1] -> [level]
  };
  std::vector<int> nondegenerate;                    // per level
  std::vector<std::vector<std::vector<Face>>> faces;  // faces[k][y][i], k >= 1
  std::vector<std::vector<std::string>> names;       // optional

  int dimension() const { return static_cast<int>(nondegenerate.size()) - 1; }
};

// Simplicial identities and shape checks; empty means valid.
std::vector<std::string> validate(const SimplicialSetFinite& x);

SimplicialSetFinite standard_simplex(int m);
SimplicialSetFinite simplex_boundary(int m);
SimplicialSetFinite horn(int m, int k);
SimplicialSetFinite empty_simplicial_set();

// An element: degeneracy sigma applied to nondegenerate y of level k.
struct SimplexElement {
  std::vector<int> degeneracy;
  int level;
  int simplex;
  auto operator<=>(const SimplexElement&) const = default;
};

// The presheaf on a Delta site determined by the data.
class SimplicialPresheaf : public Presheaf {
 public:
  SimplicialPresheaf(ThetaSitePtr delta, SimplicialSetFinite data);
  const SimplicialSetFinite& data() const { return data_; }
  const SimplexElement& element(ObjId a, Elem x) const { return elements_[a][x]; }
  Elem index(ObjId a, const SimplexElement& e) const;
  // Apply a monotone map [p] -> [m] to an element of level m.
  SimplexElement apply(const std::vector<int>& objects, const SimplexElement& e) const;
  std::size_t size(ObjId a) const override { return elements_[a].size(); }
  std::string encode(ObjId a, Elem x) const override;
  std::string name() const override { return label_; }
  void set_name(std::string s) { label_ = std::move(s); }

 protected:
  std::vector<Elem> compute_action(MorId g) const override;

 private:
  ThetaSitePtr delta_;
  SimplicialSetFinite data_;
  std::vector<std::vector<SimplexElement>> elements_;
  std::vector<std::map<SimplexElement, Elem>> index_;
  std::string label_ = "X";
};

using SimplicialPtr = std::shared_ptr<const SimplicialPresheaf>;
SimplicialPtr simplicial_presheaf(const ThetaSitePtr& delta, const SimplicialSetFinite& data,
                                  const std::string& name = "X");

// Map determined by images of nondegenerate simplices (image[k][y] is an
// element of the target at level k).
PresheafMap simplicial_map(const SimplicialPtr& source, const SimplicialPtr& target,
                           const std::vector<std::vector<SimplexElement>>& image);
// Inclusion between subset-built simplicial sets (names must match).
PresheafMap simplicial_inclusion(const SimplicialPtr& sub, const SimplicialPtr& ambient);

}  // namespace thetacat
