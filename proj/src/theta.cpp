#include "thetacat/theta.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace thetacat {

int Table::dimension() const { return top.empty() ? -1 : *std::max_element(top.begin(), top.end()); }

bool Table::valid() const {
  if (top.empty() || bottom.size() + 1 != top.size()) return false;
  for (int v : top)
    if (v < 0) return false;
  for (std::size_t k = 0; k < bottom.size(); ++k)
    if (bottom[k] < 0 || top[k] <= bottom[k] || top[k + 1] <= bottom[k]) return false;
  return true;
}

std::string Table::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < top.size(); ++k) os << (k ? " " : "") << top[k];
  if (!bottom.empty()) {
    os << " /";
    for (int v : bottom) os << " " << v;
  }
  return os.str();
}

Table Table::parse(const std::string& text) {
  Table t;
  std::istringstream is(text);
  std::string tok;
  bool lower = false;
  while (is >> tok) {
    if (tok == "/") {
      if (lower) throw std::invalid_argument("table has more than one '/'");
      lower = true;
      continue;
    }
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad table entry '" + tok + "'");
    (lower ? t.bottom : t.top).push_back(v);
  }
  if (!t.valid()) throw std::invalid_argument("not a table of dimensions: '" + text + "'");
  return t;
}

std::vector<Table> enumerate_objects(int max_dim, int max_width) {
  std::vector<Table> out;
  for (int w = 1; w <= max_width; ++w) {
    std::vector<Table> level;
    int slots = 2 * w - 1;
    std::vector<int> v(slots, 0);
    while (true) {
      Table t{std::vector<int>(v.begin(), v.begin() + w), std::vector<int>(v.begin() + w, v.end())};
      if (t.valid()) level.push_back(t);
      int i = slots - 1;
      while (i >= 0 && v[i] == max_dim) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

NGraph globular_graph(const Table& t) {
  if (!t.valid()) throw std::invalid_argument("invalid table");
  int w = t.width();
  int d = t.dimension();
  // Temporary cells (globe, dim, side) numbered per dimension in globe order.
  std::vector<std::map<std::pair<int, int>, int>> temp(d + 1);
  std::vector<std::vector<std::pair<int, int>>> owner(d + 1);
  for (int k = 0; k < w; ++k)
    for (int e = 0; e <= t.top[k]; ++e)
      for (int side = 0; side < (e < t.top[k] ? 2 : 1); ++side) {
        temp[e][{k, side}] = static_cast<int>(owner[e].size());
        owner[e].emplace_back(k, side);
      }
  std::vector<std::vector<int>> parent(d + 1);
  for (int e = 0; e <= d; ++e) {
    parent[e].resize(owner[e].size());
    std::iota(parent[e].begin(), parent[e].end(), 0);
  }
  auto find = [&](int e, int x) {
    while (parent[e][x] != x) x = parent[e][x] = parent[e][parent[e][x]];
    return x;
  };
  auto unite = [&](int e, int a, int b) {
    a = find(e, a);
    b = find(e, b);
    if (a != b) parent[e][std::max(a, b)] = std::min(a, b);
  };
  for (int k = 0; k + 1 < w; ++k) {
    int b = t.bottom[k];
    for (int e = 0; e < b; ++e)
      for (int side = 0; side < 2; ++side) unite(e, temp[e][{k, side}], temp[e][{k + 1, side}]);
    unite(b, temp[b][{k, 1}], temp[b][{k + 1, 0}]);
  }
  NGraph g;
  g.counts.assign(d + 1, 0);
  g.src.assign(d + 1, {});
  g.tgt.assign(d + 1, {});
  std::vector<std::vector<int>> cls(d + 1);
  for (int e = 0; e <= d; ++e) {
    cls[e].assign(owner[e].size(), -1);
    for (std::size_t x = 0; x < owner[e].size(); ++x) {
      int r = find(e, static_cast<int>(x));
      if (cls[e][r] < 0) cls[e][r] = g.counts[e]++;
      cls[e][x] = cls[e][r];
    }
  }
  for (int e = 1; e <= d; ++e) {
    g.src[e].assign(g.counts[e], -1);
    g.tgt[e].assign(g.counts[e], -1);
    for (std::size_t x = 0; x < owner[e].size(); ++x) {
      int k = owner[e][x].first;
      g.src[e][cls[e][x]] = cls[e - 1][temp[e - 1][{k, 0}]];
      g.tgt[e][cls[e][x]] = cls[e - 1][temp[e - 1][{k, 1}]];
    }
  }
  return g;
}

namespace {

std::recursive_mutex& cache_mutex() {
  static std::recursive_mutex m;
  return m;
}

Table shifted(const Table& t, std::size_t from, std::size_t to) {
  Table s;
  for (std::size_t k = from; k < to; ++k) s.top.push_back(t.top[k] - 1);
  for (std::size_t k = from; k + 1 < to; ++k) s.bottom.push_back(t.bottom[k] - 1);
  return s;
}

FreeNCat build_free(const Table& t, int n) {
  FreeNCat out;
  if (t.top.size() == 1 && t.top[0] == 0) {
    out.cat = terminal_ncat(n);
    out.globes = {{0, 0}};
    return out;
  }
  std::vector<Table> segments;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= t.bottom.size(); ++k)
    if (k == t.bottom.size() || t.bottom[k] == 0) {
      segments.push_back(shifted(t, start, k + 1));
      start = k + 1;
    }
  int s = static_cast<int>(segments.size());
  std::vector<const FreeNCat*> parts;
  for (const Table& seg : segments) parts.push_back(&free_ncat(seg, n - 1));
  EnrichedData data;
  data.objects = s + 1;
  data.level = n;
  data.hom.assign(s + 1, std::vector<NCatPtr>(s + 1));
  data.unit.assign(s + 1, 0);
  // sizes[i][j][dim] = number of dim-cells of hom[i][j]
  std::vector<std::vector<std::vector<int>>> sizes(s + 1, std::vector<std::vector<int>>(s + 1));
  for (int i = 0; i <= s; ++i)
    for (int j = i; j <= s; ++j) {
      std::vector<NCatPtr> factors;
      for (int q = i; q < j; ++q) factors.push_back(parts[q]->cat);
      data.hom[i][j] = factors.empty() ? terminal_ncat(n - 1) : product_many(factors, n - 1);
      sizes[i][j] = data.hom[i][j]->counts;
    }
  data.compose = [sizes](int, int j, int l, int dim, int g, int f) {
    return f * sizes[j][l][dim] + g;
  };
  Flattened flat = flatten(data);
  for (int q = 0; q < s; ++q)
    for (auto [d, c] : parts[q]->globes) out.globes.emplace_back(d + 1, flat.offset[q][q + 1][d] + c);
  out.cat = std::make_shared<const FiniteNCat>(std::move(flat.cat));
  return out;
}

}  // namespace

const FreeNCat& free_ncat(const Table& t, int n) {
  if (!t.valid()) throw std::invalid_argument("invalid table " + t.str());
  if (t.dimension() > n) throw LevelMismatch("table " + t.str() + " exceeds level");
  std::lock_guard lock(cache_mutex());
  static std::map<std::pair<Table, int>, std::unique_ptr<FreeNCat>> cache;
  auto key = std::make_pair(t, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto made = std::make_unique<FreeNCat>(build_free(t, n));
  return *cache.emplace(key, std::move(made)).first->second;
}

const std::vector<ThetaMorphism>& hom(const Table& s, const Table& t, int n) {
  std::lock_guard lock(cache_mutex());
  static std::map<std::tuple<Table, Table, int>, std::unique_ptr<std::vector<ThetaMorphism>>> cache;
  auto key = std::make_tuple(s, t, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  const FreeNCat& fs = free_ncat(s, n);
  const FreeNCat& ft = free_ncat(t, n);
  auto list = std::make_unique<std::vector<ThetaMorphism>>();
  for (NFunctor& u : enumerate_functors(fs.cat, ft.cat)) list->push_back({s, t, std::move(u)});
  return *cache.emplace(key, std::move(list)).first->second;
}

ThetaMorphism compose(const ThetaMorphism& g, const ThetaMorphism& f) {
  if (!(f.target == g.source)) throw std::invalid_argument("morphisms are not composable");
  return {f.source, g.target, compose(g.functor, f.functor)};
}

ThetaMorphism identity(const Table& t, int n) {
  return {t, t, identity_functor(free_ncat(t, n).cat)};
}

Table delta_bridge(int m) {
  if (m < 0) throw std::invalid_argument("negative simplex dimension");
  if (m == 0) return Table{{0}, {}};
  return Table{std::vector<int>(m, 1), std::vector<int>(m - 1, 0)};
}

int delta_index(const Table& t) {
  if (t == Table{{0}, {}}) return 0;
  for (int v : t.top)
    if (v != 1) throw std::invalid_argument("table " + t.str() + " is not a simplex");
  for (int v : t.bottom)
    if (v != 0) throw std::invalid_argument("table " + t.str() + " is not a simplex");
  return t.width();
}

bool is_mono(const ThetaMorphism& f) { return is_injective(f.functor); }

bool is_split_epi(const ThetaMorphism& f, int n) {
  ThetaMorphism id = identity(f.target, n);
  for (const ThetaMorphism& s : hom(f.target, f.source, n))
    if (compose(f, s) == id) return true;
  return false;
}

EzFactorization ez_factorize(const ThetaMorphism& f, int n) {
  std::vector<EzFactorization> found;
  for (const Table& m : enumerate_objects(f.source.dimension(), f.source.width())) {
    if (m.dimension() > n) continue;
    for (const ThetaMorphism& mono : hom(m, f.target, n)) {
      if (!is_mono(mono)) continue;
      for (const ThetaMorphism& epi : hom(f.source, m, n)) {
        if (!(compose(mono, epi) == f)) continue;
        if (!is_split_epi(epi, n)) continue;
        found.push_back({epi, mono});
      }
    }
  }
  if (found.empty()) throw BoundExhausted("no Eilenberg-Zilber factorization within bounds");
  if (found.size() > 1) throw std::logic_error("Eilenberg-Zilber factorization is not unique");
  return found.front();
}

std::vector<ThetaMorphism> boundary_monos(const Table& t, int n) {
  std::vector<ThetaMorphism> out;
  for (const Table& s : enumerate_objects(t.dimension(), t.width()))
    for (const ThetaMorphism& f : hom(s, t, n))
      if (is_mono(f) && !(s == t)) out.push_back(f);
  return out;
}

NFunctor globe_functor(int d, int n, const NCatPtr& target, int cell) {
  const FreeNCat& g = free_ncat(Table::globe(d), n);
  SearchOptions opts;
  opts.preassign.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) opts.preassign[k].assign(g.cat->counts[k], -1);
  opts.preassign[d][g.globes[0].second] = cell;
  opts.limit = 2;
  auto found = enumerate_functors(g.cat, target, opts);
  if (found.size() != 1) throw std::invalid_argument("cell does not determine a globe functor");
  return found.front();
}

SpineLegs spine_inclusions(const Table& t, int n) {
  const FreeNCat& f = free_ncat(t, n);
  SpineLegs legs;
  for (int k = 0; k < t.width(); ++k) {
    auto [d, c] = f.globes[k];
    legs.globes.push_back({Table::globe(d), t, globe_functor(d, n, f.cat, c)});
  }
  for (int k = 0; k + 1 < t.width(); ++k) {
    int b = t.bottom[k];
    int face = f.cat->target(b, t.top[k], f.globes[k].second);
    if (face != f.cat->source(b, t.top[k + 1], f.globes[k + 1].second))
      throw std::logic_error("adjacent globes do not share a face");
    legs.relations.push_back({Table::globe(b), t, globe_functor(b, n, f.cat, face)});
  }
  return legs;
}

}  // namespace thetacat
