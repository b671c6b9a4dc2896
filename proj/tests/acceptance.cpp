#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "thetacat/boxcalc.hpp"

using namespace thetacat;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  bool ok = problem.empty();
  failures += ok ? 0 : 1;
  std::printf("%s %2d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), took.count(),
              ok ? "" : ": ", problem.c_str());
  std::fflush(stdout);
}

std::string theta_one_homs() {
  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= 4; ++k) {
      std::size_t got = hom(delta_bridge(m), delta_bridge(k), 1).size();
      if (got != oracle::count_monotone(m, k))
        return "hom([" + std::to_string(m) + "],[" + std::to_string(k) + "]) = " + std::to_string(got);
    }
  return "";
}

std::string ez_unique() {
  auto tables = enumerate_objects(2, 2);
  auto middles = enumerate_objects(2, 3);
  for (const Table& a : tables)
    for (const Table& b : tables)
      for (const ThetaMorphism& f : hom(a, b, 2)) {
        int pairs = 0;
        for (const Table& c : middles)
          for (const ThetaMorphism& e : hom(a, c, 2)) {
            if (!is_split_epi(e, 2)) continue;
            for (const ThetaMorphism& m : hom(c, b, 2))
              if (is_mono(m) && compose(m, e) == f) ++pairs;
          }
        if (pairs != 1) return a.str() + " -> " + b.str() + " has " + std::to_string(pairs) + " factorizations";
        EzFactorization ez = ez_factorize(f, 2);
        if (!(compose(ez.mono, ez.epi) == f)) return "ez_factorize does not recompose";
      }
  return "";
}

std::string segal() {
  auto site = make_theta_site(2, 2, 3);
  std::vector<std::pair<std::string, NCatPtr>> cats = {
      {"J_2", build_interval(2).j}, {"L(D_2)", free_ncat(Table::globe(2), 2).cat}, {"J", build_interval(1).j}};
  for (const auto& [name, c] : cats)
    for (const Table& t : site->tables()) {
      SegalReport r = segal_check(site, c, t);
      if (!r.holds) return name + " at " + t.str();
    }
  return "";
}

std::string boundary_points() {
  auto site = make_theta_site(2, 2, 2);
  ObjId point = *site->find(Table::globe(0));
  for (const Table& t : site->tables()) {
    if (t == Table::globe(0)) continue;
    std::size_t objects = globular_graph(t).counts[0];
    std::size_t rep = representable(site, t)->size(point);
    std::size_t bd = boundary(site, t).presheaf->size(point);
    if (rep != objects || bd != rep) return t.str() + ": " + std::to_string(bd) + " vs " + std::to_string(rep);
  }
  return "";
}

std::string counterexample() {
  CounterexampleReport r = verify_counterexample(2, 2);
  if (r.rlp.holds || !r.rlp.witness) return "no failing square found";
  if (!r.named_square_no_lift) return "named square lifts";
  if (!r.larger_bounds_no_lift) return "witness lifts at " + r.larger_bounds;
  if (!r.iso_fibration) return "right truncation is not an iso-fibration";
  if (!r.anodyne.holds) return "anodyne lifting fails at " + r.anodyne.witness->label;
  return "";
}

std::string trivial_fibrations() {
  auto site = make_theta_site(2, 2, 2);
  PresheafPtr one = terminal_presheaf(site);
  for (const auto& [name, c] : std::vector<std::pair<std::string, NCatPtr>>{
           {"J", build_interval(1).j}, {"Dt_2", simply_connected_groupoid(2)}}) {
    RlpReport r = check_trivial_fibration(to_terminal(nerve(site, c, name), one), site);
    if (!r.holds) return name + " fails at " + r.witness->label;
  }
  return "";
}

std::string evaluation_fully_faithful() {
  for (int level = 1; level <= 2; ++level) {
    NCatPtr j = promote(build_interval(1).j, level);
    NCatPtr c = level == 1 ? free_ncat(Table::globe(1), 1).cat : build_interval(2).j;
    InternalHom h = internal_hom_data(j, c);
    for (int object = 0; object < 2; ++object) {
      NFunctor ev = evaluate_at(h, object);
      if (!validate(ev).empty()) return "evaluation is not a functor";
      if (!oracle::fully_faithful_brute(ev) || !is_fully_faithful(ev))
        return "evaluation at " + std::to_string(object) + " is not fully faithful (level " + std::to_string(level) + ")";
    }
  }
  return "";
}

std::string unique_lifts() {
  std::vector<std::vector<NCatPtr>> pools;
  NCatPtr point = terminal_ncat(1), d1 = free_ncat(Table::globe(1), 1).cat, j = build_interval(1).j;
  pools.push_back({point, coproduct(point, point), d1, j, linear_order(2), coproduct(d1, point)});
  pools.push_back({promote(point, 2), promote(d1, 2), promote(j, 2), build_interval(2).j,
                   free_ncat(Table::globe(2), 2).cat});
  std::size_t squares = 0, proper = 0;
  for (const auto& pool : pools) {
    for (const NCatPtr& c : pool)
      for (int k = 0; k <= c->level; ++k)
        if (c->counts[k] > 6) return "pool category exceeds six cells";
    std::vector<NFunctor> lefts, rights;
    for (const NCatPtr& a : pool)
      for (const NCatPtr& b : pool)
        for (const NFunctor& u : enumerate_functors(a, b)) {
          std::vector<int> objs = u.map[0];
          std::sort(objs.begin(), objs.end());
          bool bijective = static_cast<int>(objs.size()) == b->counts[0] &&
                           std::adjacent_find(objs.begin(), objs.end()) == objs.end();
          if (bijective) lefts.push_back(u);
          bool ff = oracle::fully_faithful_brute(u);
          if (ff != is_fully_faithful(u)) throw std::logic_error("fully faithful oracle disagrees");
          if (ff) rights.push_back(u);
        }
    for (const NFunctor& u : lefts)
      for (const NFunctor& v : rights) {
        int per_pair = 0;
        for (const NFunctor& f : enumerate_functors(u.source, v.source)) {
          for (const NFunctor& g : enumerate_functors(u.target, v.target)) {
            if (!(compose(v, f) == compose(g, u))) continue;
            UniqueLiftResult r = unique_lift(u, v, f, g);
            std::size_t brute = oracle::count_functors_brute(*u.target, *v.source, [&](const auto& h) {
              for (int k = 0; k <= u.source->level; ++k)
                for (int x = 0; x < u.source->counts[k]; ++x)
                  if (h[k][u.map[k][x]] != f.map[k][x]) return false;
              for (int k = 0; k <= u.target->level; ++k)
                for (int x = 0; x < u.target->counts[k]; ++x)
                  if (v.map[k][h[k][x]] != g.map[k][x]) return false;
              return true;
            });
            if (r.outcome != LiftOutcome::UniqueLift || brute != 1)
              return "square without a unique lift (brute count " + std::to_string(brute) + ")";
            ++squares;
            if (u.source != u.target || v.source != v.target) ++proper;
            if (++per_pair == 2) break;
          }
          if (per_pair == 2) break;
        }
      }
  }
  if (squares < 20 || proper == 0) return "only " + std::to_string(squares) + " squares";
  return "";
}

std::string orthogonality() {
  OrthogonalityPools pools = orthogonality_pools(2, 1, 2, 2);
  auto runs = sample_orthogonality(pools, 50, 20261016);
  if (runs.size() != 51) return "wrong sample count";
  for (const auto& r : runs)
    if (!r.report.agree()) return r.u + " / " + r.v + " / " + r.f;
  return "";
}

std::string not_2qcat() {
  NotQcatReport r = check_not_2qcat();
  if (!r.left_is_mono) return "left map is not mono";
  if (r.domain_points != 4 || r.codomain_points != 4) return "unexpected point counts";
  if (r.rlp.holds || !r.rlp.witness) return "a lift exists";
  return "";
}

std::string resolution() {
  ResolutionReport r = resolution_check(make_theta_site(2, 2, 2), 2);
  if (!r.endpoints_mono) return "endpoint map is not mono";
  for (std::size_t k = 0; k < r.trivial_fibration.size(); ++k)
    if (!r.trivial_fibration[k].holds) return "N(Dt_" + std::to_string(k) + ") -> 1 fails";
  if (!r.ok()) return "codiscrete comparison fails";
  return "";
}

std::string goldens() {
  if (enumerate_objects(2, 2).size() != 8 || oracle::count_tables(2, 2) != 8) return "object count";
  if (free_ncat(Table::globe(2), 2).cat->counts != std::vector<int>{2, 4, 5}) return "free((2)) counts";
  NCatPtr j2 = build_interval(2).j;
  if (j2->counts != std::vector<int>{2, 4, 6}) return "J_2 counts";
  auto site = make_theta_site(2, 2, 2);
  std::size_t edges = nerve(site, j2, "J_2")->size(*site->find(Table::globe(1)));
  if (edges != 4 || oracle::count_functors_brute(*free_ncat(Table::globe(1), 2).cat, *j2) != 4)
    return "nerve of J_2 at (1) has " + std::to_string(edges);
  return "";
}

}  // namespace

int main() {
  criterion(1, "Theta_1 homs match order-preserving maps, m, k <= 4", theta_one_homs);
  criterion(2, "unique split-epi/mono factorization over dim <= 2, width <= 2", ez_unique);
  criterion(3, "Segal condition for J_2, L(D_2), J over dim <= 2, width <= 3", segal);
  criterion(4, "boundary and representable agree at (0)", boundary_points);
  criterion(5, "N(j_2) is not a trivial fibration but passes anodyne lifting", counterexample);
  criterion(6, "N(J) -> 1 and N(Dt_2) -> 1 are trivial fibrations at (2,2)", trivial_fibrations);
  criterion(7, "evaluation from internal_hom(J, C) is fully faithful", evaluation_fully_faithful);
  criterion(8, "bijective-on-objects against fully faithful squares lift uniquely", unique_lifts);
  criterion(9, "three-way orthogonality agreement on the named and 50 sampled triples", orthogonality);
  criterion(10, "N(J_2) fails lifting against the interval pushout-product", not_2qcat);
  criterion(11, "resolution by nerves of chaotic categories at (2,2)", resolution);
  criterion(12, "counting goldens", goldens);
  return failures == 0 ? 0 : 1;
}
