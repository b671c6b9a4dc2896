#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thetacat/errors.hpp"

namespace thetacat {

// A strict n-category stored as explicit finite tables. Cells of each
// dimension are dense ids. comp[k][j] is a dense count(k) x count(k) table
// holding comp_j(g, f) at index g * count(k) + f ("g after f"), or -1.
struct FiniteNCat {
  int level = 0;
  std::vector<int> counts;
  std::vector<std::vector<int>> src, tgt;    // src[k][x] for k >= 1
  std::vector<std::vector<int>> ident;       // ident[k][x] for k < level
  std::vector<std::vector<std::vector<int>>> comp;
  std::vector<std::vector<std::string>> labels;  // optional, per dimension

  int count(int k) const { return counts[k]; }
  int compose(int j, int k, int g, int f) const {
    return comp[k][j][static_cast<std::size_t>(g) * counts[k] + f];
  }
  void set_compose(int j, int k, int g, int f, int r) {
    comp[k][j][static_cast<std::size_t>(g) * counts[k] + f] = r;
  }
  // Iterated source/target down to dimension j (j <= k).
  int source(int j, int k, int x) const;
  int target(int j, int k, int x) const;
  // Iterated identity from dimension k up to dimension to.
  int identity(int k, int to, int x) const;
  bool is_identity(int k, int x) const;
  std::size_t total_cells() const;
  std::string label(int k, int x) const;

  // Allocates empty tables for the given counts.
  static FiniteNCat with_counts(int level, std::vector<int> counts);
};

using NCatPtr = std::shared_ptr<const FiniteNCat>;

struct Violation {
  std::string law;
  std::string detail;
};

// Checks every strict n-category law; an empty result means valid.
std::vector<Violation> validate(const FiniteNCat& c);

struct NFunctor {
  NCatPtr source, target;
  std::vector<std::vector<int>> map;  // map[k][x]

  int operator()(int k, int x) const { return map[k][x]; }
  bool operator==(const NFunctor& o) const { return map == o.map; }
};

std::vector<Violation> validate(const NFunctor& u);
NFunctor identity_functor(const NCatPtr& c);
NFunctor compose(const NFunctor& g, const NFunctor& f);  // g after f
bool is_injective(const NFunctor& u);

// Basic categories.
NCatPtr terminal_ncat(int level);
NCatPtr empty_ncat(int level);
NCatPtr simply_connected_groupoid(int k);  // objects 0..k, one arrow per pair
NCatPtr linear_order(int k);               // 0 < 1 < ... < k
NCatPtr promote(const NCatPtr& c, int level);
NFunctor promote(const NFunctor& u, int level);

NCatPtr product(const NCatPtr& a, const NCatPtr& b);
NCatPtr product_many(const std::vector<NCatPtr>& factors, int level);
NFunctor product(const NFunctor& u, const NFunctor& v);
NFunctor projection(const NCatPtr& a, const NCatPtr& b, int which);
NCatPtr coproduct(const NCatPtr& a, const NCatPtr& b);
NFunctor coproduct_injection(const NCatPtr& a, const NCatPtr& b, int which);
// Induced map out of a coproduct.
NFunctor copair(const NCatPtr& sum, const NFunctor& u, const NFunctor& v);

// Category enriched over (level-1)-categories on objects 0..objects-1,
// flattened into an ordinary strict category.
struct EnrichedData {
  int objects = 0;
  int level = 1;
  std::vector<std::vector<NCatPtr>> hom;  // nullptr = empty hom
  std::vector<int> unit;                  // unit object in hom[i][i]
  // compose(i, j, l, dim, g, f): g in hom[j][l], f in hom[i][j], both of dim.
  std::function<int(int, int, int, int, int, int)> compose;
};

struct Flattened {
  FiniteNCat cat;
  // offset[i][j][k]: first id among (k+1)-cells of cells from hom[i][j] at dim k
  std::vector<std::vector<std::vector<int>>> offset;
};

Flattened flatten(const EnrichedData& data);

// Functor enumeration. preassign entries of -1 are free; filter may veto
// (dim, cell, image) choices.
struct SearchOptions {
  std::vector<std::vector<int>> preassign;
  std::function<bool(int, int, int)> filter;
  std::size_t limit = 0;
};

// Visits assignments in canonical search order; visitor returns false to stop.
void for_each_functor(const FiniteNCat& c, const FiniteNCat& d, const SearchOptions& opts,
                      const std::function<bool(const std::vector<std::vector<int>>&)>& visit);
std::vector<NFunctor> enumerate_functors(const NCatPtr& c, const NCatPtr& d,
                                         const SearchOptions& opts = {});

// Constructions used for intervals and hom-objects.
NCatPtr wreath_delta1(const NCatPtr& c);
NFunctor wreath_delta1(const NFunctor& u, const NCatPtr& source, const NCatPtr& target);

struct Interval {
  NCatPtr j;                // J_k
  NCatPtr globe;            // D_{k-1}
  NFunctor collapse;        // j_k : J_k -> D_{k-1}
  NFunctor section0, section1;  // s^0_k, s^1_k : D_{k-1} -> J_k
};
// J_k, D_{k-1} and the structure maps, all at level k.
Interval build_interval(int k);

// Hom-object whose k-cells are functors c x D_k -> d.
struct InternalHom {
  NCatPtr cat;
  NCatPtr exponent, base;
  std::vector<std::vector<NFunctor>> cells;  // cells[k][x]
};
InternalHom internal_hom_data(const NCatPtr& c, const NCatPtr& d);
NCatPtr internal_hom(const NCatPtr& c, const NCatPtr& d);
// Evaluation at an object of the exponent: internal_hom(e, c) -> c.
NFunctor evaluate_at(const InternalHom& h, int object);

struct Truncation {
  NCatPtr cat;
  std::vector<int> object_class, arrow_class;
};
Truncation truncate(const NCatPtr& c);                 // identify 1-cells joined by 2-cells
NFunctor truncate(const NFunctor& u, const Truncation& s, const Truncation& t);
NCatPtr truncate_right(const NCatPtr& c);              // drop cells of dim >= 2
NFunctor truncate_right(const NFunctor& u);

bool is_fully_faithful(const NFunctor& u);
bool is_iso_fibration(const NFunctor& u);

enum class LiftOutcome { NoLift, UniqueLift, MultipleLifts };
struct UniqueLiftResult {
  LiftOutcome outcome;
  std::optional<NFunctor> lift;
};
// Square u: a -> b, v: c -> d, f: a -> c (top), g: b -> d (bottom).
UniqueLiftResult unique_lift(const NFunctor& u, const NFunctor& v, const NFunctor& f,
                             const NFunctor& g);

}  // namespace thetacat
