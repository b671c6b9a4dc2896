#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "thetacat/ncat.hpp"

namespace thetacat {

// An object of Theta_n written as a table of dimensions: top row i_1..i_m,
// bottom row i'_1..i'_{m-1} with i_k > i'_k < i_{k+1}.
struct Table {
  std::vector<int> top;
  std::vector<int> bottom;

  int width() const { return static_cast<int>(top.size()); }
  int dimension() const;
  bool valid() const;
  std::string str() const;  // "1 1 / 0"
  static Table parse(const std::string& text);
  static Table globe(int d) { return Table{{d}, {}}; }

  auto operator<=>(const Table&) const = default;
  bool operator==(const Table&) const = default;
};

// Tables of dimension <= max_dim and width <= max_width, ordered by width,
// then lexicographically.
std::vector<Table> enumerate_objects(int max_dim, int max_width);

// A finite n-graph: cells per dimension with source and target maps.
struct NGraph {
  std::vector<int> counts;
  std::vector<std::vector<int>> src, tgt;  // src[k][x] for k >= 1
};
NGraph globular_graph(const Table& t);

// Free strict n-category on the globular sum of t, with the top cell of each
// globe recorded as (dimension, cell id).
struct FreeNCat {
  NCatPtr cat;
  std::vector<std::pair<int, int>> globes;
};
const FreeNCat& free_ncat(const Table& t, int n);

struct ThetaMorphism {
  Table source, target;
  NFunctor functor;
  bool operator==(const ThetaMorphism& o) const {
    return source == o.source && target == o.target && functor == o.functor;
  }
};

const std::vector<ThetaMorphism>& hom(const Table& s, const Table& t, int n);
ThetaMorphism compose(const ThetaMorphism& g, const ThetaMorphism& f);
ThetaMorphism identity(const Table& t, int n);

Table delta_bridge(int m);
int delta_index(const Table& t);  // inverse of delta_bridge; throws on other shapes

bool is_mono(const ThetaMorphism& f);
bool is_split_epi(const ThetaMorphism& f, int n);

struct EzFactorization {
  ThetaMorphism epi, mono;  // f = mono o epi
};
// Searches middle objects with dimension and width bounded by the source.
EzFactorization ez_factorize(const ThetaMorphism& f, int n);

// Proper monos into t from tables of no larger dimension and width.
std::vector<ThetaMorphism> boundary_monos(const Table& t, int n);

struct SpineLegs {
  std::vector<ThetaMorphism> globes;     // D_{i_k} -> T
  std::vector<ThetaMorphism> relations;  // D_{i'_k} -> T, shared faces
};
SpineLegs spine_inclusions(const Table& t, int n);

// The functor out of D_d (at level n) sending the top cell to `cell`.
NFunctor globe_functor(int d, int n, const NCatPtr& target, int cell);

}  // namespace thetacat
