#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetacat/presheaf.hpp"

namespace thetacat {

struct LabeledMap {
  std::string label;
  PresheafMap map;
};
using GeneratorSet = std::vector<LabeledMap>;

// Square with left leg u: U -> V, right leg f: X -> Y, top U -> X, bottom V -> Y.
struct LiftingProblem {
  PresheafMap left, right, top, bottom;
};

bool commutes(const LiftingProblem& p);
std::optional<PresheafMap> find_lift(const LiftingProblem& p);
std::size_t count_lifts(const LiftingProblem& p, std::size_t limit = 0);

struct FailingSquare {
  std::size_t generator = 0;
  std::string label;
  PresheafMap top, bottom;
};

struct RlpReport {
  bool holds = true;
  std::string bounds;
  std::size_t squares = 0;
  std::optional<FailingSquare> witness;  // least failing square in search order
};

RlpReport has_rlp(const PresheafMap& f, const GeneratorSet& gens);

GeneratorSet boundary_generators(const ThetaSitePtr& site);
// Positive verdicts hold up to the site bounds; negative ones are unconditional.
RlpReport check_trivial_fibration(const PresheafMap& f, const ThetaSitePtr& site);

// An interval: presheaf with two points from a one-element presheaf.
struct IntervalData {
  PresheafPtr interval;
  PresheafPtr point;
  PresheafMap end0, end1;
};
// N(J) with its two objects as endpoints.
IntervalData nerve_interval(const ThetaSitePtr& site);

enum class EndpointMode { Zero, One, Both };
// Inclusion of U x I u V x {e} (or V x boundary of I) into V x I.
PresheafMap interval_pushout_product(const PresheafMap& u, const IntervalData& i, EndpointMode mode);

GeneratorSet anodyne_generators(const GeneratorSet& s, const IntervalData& i, int depth,
                                const ThetaSitePtr& site);

enum class LocalizerPart { Collapse, Sections };
GeneratorSet spine_generators(const ThetaSitePtr& site);
// Spines plus nerves of j_k (Collapse) or of s^0_k, s^1_k (Sections), 1 < k <= n.
GeneratorSet qcat_generators(const ThetaSitePtr& site, LocalizerPart part = LocalizerPart::Collapse);

// Move a map to another site by matching object labels and element encodings
// on the nondegenerate cells of the source.
PresheafMap transport(const PresheafMap& m, const PresheafPtr& source, const PresheafPtr& target);

struct CounterexampleReport {
  Table table;
  RlpReport rlp;                 // nerve(j_k) against the boundary of table
  bool named_square_no_lift = false;
  bool larger_bounds_no_lift = false;
  std::string larger_bounds;
  bool iso_fibration = false;    // of the right truncation of j_k
  RlpReport anodyne;             // nerve(j_k) against depth-1 anodyne maps
  std::size_t anodyne_generators = 0;
  bool ok() const {
    return !rlp.holds && named_square_no_lift && larger_bounds_no_lift && iso_fibration && anodyne.holds;
  }
};
CounterexampleReport verify_counterexample(int n = 2, int k = 2, int anodyne_width = 2);

struct NotQcatReport {
  RlpReport rlp;
  bool left_is_mono = false;
  std::size_t domain_points = 0, codomain_points = 0;
};
NotQcatReport check_not_2qcat();

}  // namespace thetacat
