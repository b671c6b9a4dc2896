#include "thetacat/ncat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace thetacat {

int FiniteNCat::source(int j, int k, int x) const {
  for (; k > j; --k) x = src[k][x];
  return x;
}

int FiniteNCat::target(int j, int k, int x) const {
  for (; k > j; --k) x = tgt[k][x];
  return x;
}

int FiniteNCat::identity(int k, int to, int x) const {
  for (; k < to; ++k) x = ident[k][x];
  return x;
}

bool FiniteNCat::is_identity(int k, int x) const {
  return k > 0 && src[k][x] == tgt[k][x] && ident[k - 1][src[k][x]] == x;
}

std::size_t FiniteNCat::total_cells() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::string FiniteNCat::label(int k, int x) const {
  if (k < static_cast<int>(labels.size()) && x < static_cast<int>(labels[k].size()))
    return labels[k][x];
  return std::to_string(k) + ":" + std::to_string(x);
}

FiniteNCat FiniteNCat::with_counts(int level, std::vector<int> counts) {
  FiniteNCat c;
  c.level = level;
  c.counts = std::move(counts);
  c.src.assign(level + 1, {});
  c.tgt.assign(level + 1, {});
  c.ident.assign(level, {});
  c.comp.assign(level + 1, {});
  for (int k = 0; k <= level; ++k) {
    if (k > 0) {
      c.src[k].assign(c.counts[k], -1);
      c.tgt[k].assign(c.counts[k], -1);
    }
    if (k < level) c.ident[k].assign(c.counts[k], -1);
    c.comp[k].assign(k, std::vector<int>(static_cast<std::size_t>(c.counts[k]) * c.counts[k], -1));
  }
  return c;
}

namespace {

std::string cell(int k, int x) {
  return std::to_string(k) + "-cell " + std::to_string(x);
}

bool shape_ok(const FiniteNCat& c, std::vector<Violation>& out) {
  auto bad = [&](const std::string& d) {
    out.push_back({"index", d});
    return false;
  };
  int n = c.level;
  if (n < 0) return bad("negative level");
  if (static_cast<int>(c.counts.size()) != n + 1) return bad("counts size");
  if (static_cast<int>(c.src.size()) != n + 1 || static_cast<int>(c.tgt.size()) != n + 1)
    return bad("src/tgt size");
  if (static_cast<int>(c.ident.size()) != n) return bad("ident size");
  if (static_cast<int>(c.comp.size()) != n + 1) return bad("comp size");
  bool ok = true;
  for (int k = 0; k <= n; ++k) {
    int m = c.counts[k];
    if (k > 0) {
      if (static_cast<int>(c.src[k].size()) != m || static_cast<int>(c.tgt[k].size()) != m) {
        ok = bad("src/tgt length at dim " + std::to_string(k));
        continue;
      }
      for (int x = 0; x < m; ++x)
        if (c.src[k][x] < 0 || c.src[k][x] >= c.counts[k - 1] || c.tgt[k][x] < 0 ||
            c.tgt[k][x] >= c.counts[k - 1])
          ok = bad("boundary of " + cell(k, x) + " out of range");
    }
    if (k < n) {
      if (static_cast<int>(c.ident[k].size()) != m) {
        ok = bad("ident length at dim " + std::to_string(k));
        continue;
      }
      for (int x = 0; x < m; ++x)
        if (c.ident[k][x] < 0 || c.ident[k][x] >= c.counts[k + 1])
          ok = bad("identity of " + cell(k, x) + " out of range");
    }
    if (static_cast<int>(c.comp[k].size()) != k) {
      ok = bad("comp tables at dim " + std::to_string(k));
      continue;
    }
    for (int j = 0; j < k; ++j) {
      if (c.comp[k][j].size() != static_cast<std::size_t>(m) * m) {
        ok = bad("comp table size");
        continue;
      }
      for (int r : c.comp[k][j])
        if (r < -1 || r >= m) ok = bad("composite out of range at dim " + std::to_string(k));
    }
  }
  return ok;
}

}  // namespace

std::vector<Violation> validate(const FiniteNCat& c) {
  std::vector<Violation> out;
  if (!shape_ok(c, out)) return out;
  int n = c.level;
  for (int k = 2; k <= n; ++k)
    for (int x = 0; x < c.counts[k]; ++x) {
      int s = c.src[k][x], t = c.tgt[k][x];
      if (c.src[k - 1][s] != c.src[k - 1][t] || c.tgt[k - 1][s] != c.tgt[k - 1][t])
        out.push_back({"globularity", cell(k, x)});
    }
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < c.counts[k]; ++x) {
      int i = c.ident[k][x];
      if (c.src[k + 1][i] != x) out.push_back({"unit-source", cell(k, x)});
      if (c.tgt[k + 1][i] != x) out.push_back({"unit-target", cell(k, x)});
    }
  if (!out.empty()) return out;

  for (int k = 1; k <= n; ++k) {
    int m = c.counts[k];
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
          bool composable = c.target(j, k, f) == c.source(j, k, g);
          int r = c.compose(j, k, g, f);
          std::string where = "comp_" + std::to_string(j) + "(" + std::to_string(g) + "," +
                              std::to_string(f) + ") at dim " + std::to_string(k);
          if (composable != (r >= 0)) {
            out.push_back({"comp-domain", where});
            continue;
          }
          if (r < 0) continue;
          if (j == k - 1) {
            if (c.src[k][r] != c.src[k][f] || c.tgt[k][r] != c.tgt[k][g])
              out.push_back({"comp-boundary", where});
          } else {
            int es = c.compose(j, k - 1, c.src[k][g], c.src[k][f]);
            int et = c.compose(j, k - 1, c.tgt[k][g], c.tgt[k][f]);
            if (c.src[k][r] != es || c.tgt[k][r] != et) out.push_back({"comp-boundary", where});
          }
        }
  }
  if (!out.empty()) return out;

  for (int k = 1; k <= n; ++k) {
    int m = c.counts[k];
    for (int j = 0; j < k; ++j) {
      for (int f = 0; f < m; ++f) {
        int left = c.identity(j, k, c.target(j, k, f));
        int right = c.identity(j, k, c.source(j, k, f));
        if (c.compose(j, k, left, f) != f || c.compose(j, k, f, right) != f)
          out.push_back({"unit-law", "comp_" + std::to_string(j) + " with " + cell(k, f)});
      }
      for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
          int hg = c.compose(j, k, h, g);
          if (hg < 0) continue;
          for (int f = 0; f < m; ++f) {
            int gf = c.compose(j, k, g, f);
            if (gf < 0) continue;
            if (c.compose(j, k, hg, f) != c.compose(j, k, h, gf))
              out.push_back({"associativity", "comp_" + std::to_string(j) + " of (" +
                                                  std::to_string(h) + "," + std::to_string(g) +
                                                  "," + std::to_string(f) + ") at dim " +
                                                  std::to_string(k)});
          }
        }
    }
    // Interchange for i < j: (d o_j c) o_i (b o_j a) = (d o_i b) o_j (c o_i a).
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i)
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            int ba = c.compose(j, k, b, a);
            if (ba < 0) continue;
            for (int g = 0; g < m; ++g) {
              int ga = c.compose(i, k, g, a);
              if (ga < 0) continue;
              for (int d = 0; d < m; ++d) {
                int dg = c.compose(j, k, d, g);
                int db = c.compose(i, k, d, b);
                if (dg < 0 || db < 0) continue;
                int lhs = c.compose(i, k, dg, ba);
                int rhs = c.compose(j, k, db, ga);
                if (lhs != rhs || lhs < 0)
                  out.push_back({"interchange", "i=" + std::to_string(i) + " j=" +
                                                    std::to_string(j) + " cells (" +
                                                    std::to_string(a) + "," + std::to_string(b) +
                                                    "," + std::to_string(g) + "," +
                                                    std::to_string(d) + ") at dim " +
                                                    std::to_string(k)});
              }
            }
          }
  }
  // Identities are compatible with lower composition.
  for (int k = 1; k < n; ++k) {
    int m = c.counts[k];
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
          int r = c.compose(j, k, g, f);
          if (r < 0) continue;
          if (c.compose(j, k + 1, c.ident[k][g], c.ident[k][f]) != c.ident[k][r])
            out.push_back({"ident-comp", "comp_" + std::to_string(j) + "(" + std::to_string(g) +
                                             "," + std::to_string(f) + ") at dim " +
                                             std::to_string(k)});
        }
  }
  return out;
}

std::vector<Violation> validate(const NFunctor& u) {
  std::vector<Violation> out;
  const FiniteNCat& c = *u.source;
  const FiniteNCat& d = *u.target;
  if (c.level != d.level) {
    out.push_back({"level", "source and target levels differ"});
    return out;
  }
  if (static_cast<int>(u.map.size()) != c.level + 1) {
    out.push_back({"index", "map size"});
    return out;
  }
  for (int k = 0; k <= c.level; ++k) {
    if (static_cast<int>(u.map[k].size()) != c.counts[k]) {
      out.push_back({"index", "map length at dim " + std::to_string(k)});
      return out;
    }
    for (int y : u.map[k])
      if (y < 0 || y >= d.counts[k]) {
        out.push_back({"index", "image out of range"});
        return out;
      }
  }
  for (int k = 1; k <= c.level; ++k)
    for (int x = 0; x < c.counts[k]; ++x) {
      int y = u.map[k][x];
      if (d.src[k][y] != u.map[k - 1][c.src[k][x]] || d.tgt[k][y] != u.map[k - 1][c.tgt[k][x]])
        out.push_back({"globularity", cell(k, x)});
    }
  for (int k = 0; k < c.level; ++k)
    for (int x = 0; x < c.counts[k]; ++x)
      if (u.map[k + 1][c.ident[k][x]] != d.ident[k][u.map[k][x]])
        out.push_back({"unit-law", cell(k, x)});
  for (int k = 1; k <= c.level; ++k)
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < c.counts[k]; ++g)
        for (int f = 0; f < c.counts[k]; ++f) {
          int r = c.compose(j, k, g, f);
          if (r < 0) continue;
          if (d.compose(j, k, u.map[k][g], u.map[k][f]) != u.map[k][r])
            out.push_back({"comp-domain", "composite " + cell(k, r) + " not preserved"});
        }
  return out;
}

NFunctor identity_functor(const NCatPtr& c) {
  NFunctor u{c, c, {}};
  for (int k = 0; k <= c->level; ++k) {
    std::vector<int> m(c->counts[k]);
    std::iota(m.begin(), m.end(), 0);
    u.map.push_back(std::move(m));
  }
  return u;
}

NFunctor compose(const NFunctor& g, const NFunctor& f) {
  NFunctor r{f.source, g.target, f.map};
  for (std::size_t k = 0; k < r.map.size(); ++k)
    for (int& x : r.map[k]) x = g.map[k][x];
  return r;
}

bool is_injective(const NFunctor& u) {
  for (const auto& m : u.map) {
    std::vector<int> s = m;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

NCatPtr terminal_ncat(int level) {
  FiniteNCat c = FiniteNCat::with_counts(level, std::vector<int>(level + 1, 1));
  for (int k = 0; k <= level; ++k) {
    if (k > 0) c.src[k][0] = c.tgt[k][0] = 0;
    if (k < level) c.ident[k][0] = 0;
    for (int j = 0; j < k; ++j) c.comp[k][j][0] = 0;
  }
  return std::make_shared<const FiniteNCat>(std::move(c));
}

NCatPtr empty_ncat(int level) {
  return std::make_shared<const FiniteNCat>(
      FiniteNCat::with_counts(level, std::vector<int>(level + 1, 0)));
}

namespace {

// Level-1 category from objects, arrows (src, tgt) with identities first,
// and a composition rule on arrows.
NCatPtr level_one(int objects, const std::vector<std::pair<int, int>>& arrows,
                  const std::function<int(int, int)>& comp) {
  FiniteNCat c = FiniteNCat::with_counts(1, {objects, static_cast<int>(arrows.size())});
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    c.src[1][a] = arrows[a].first;
    c.tgt[1][a] = arrows[a].second;
  }
  for (int o = 0; o < objects; ++o) c.ident[0][o] = o;
  for (int g = 0; g < c.counts[1]; ++g)
    for (int f = 0; f < c.counts[1]; ++f)
      if (c.tgt[1][f] == c.src[1][g]) c.set_compose(0, 1, g, f, comp(g, f));
  return std::make_shared<const FiniteNCat>(std::move(c));
}

NCatPtr pair_category(int k, bool all_pairs) {
  std::vector<std::pair<int, int>> arrows;
  for (int o = 0; o <= k; ++o) arrows.emplace_back(o, o);
  for (int s = 0; s <= k; ++s)
    for (int t = 0; t <= k; ++t)
      if (s != t && (all_pairs || s < t)) arrows.emplace_back(s, t);
  auto find = [arrows](int s, int t) {
    return static_cast<int>(std::find(arrows.begin(), arrows.end(), std::make_pair(s, t)) -
                            arrows.begin());
  };
  return level_one(k + 1, arrows, [&](int g, int f) {
    return find(arrows[f].first, arrows[g].second);
  });
}

}  // namespace

NCatPtr simply_connected_groupoid(int k) { return pair_category(k, true); }
NCatPtr linear_order(int k) { return pair_category(k, false); }

NCatPtr promote(const NCatPtr& c, int level) {
  if (level < c->level) throw LevelMismatch("promote to a lower level");
  if (level == c->level) return c;
  int n = c->level;
  std::vector<int> counts = c->counts;
  for (int k = n + 1; k <= level; ++k) counts.push_back(c->counts[n]);
  FiniteNCat r = FiniteNCat::with_counts(level, counts);
  for (int k = 0; k <= level; ++k) {
    int m = counts[k];
    if (k > 0) {
      for (int x = 0; x < m; ++x) {
        r.src[k][x] = k <= n ? c->src[k][x] : x;
        r.tgt[k][x] = k <= n ? c->tgt[k][x] : x;
      }
    }
    if (k < level)
      for (int x = 0; x < m; ++x) r.ident[k][x] = k < n ? c->ident[k][x] : x;
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
          int v;
          if (k <= n)
            v = c->compose(j, k, g, f);
          else if (j < n)
            v = c->compose(j, n, g, f);
          else
            v = g == f ? g : -1;
          r.set_compose(j, k, g, f, v);
        }
  }
  if (!c->labels.empty()) {
    r.labels = c->labels;
    while (static_cast<int>(r.labels.size()) <= level) r.labels.push_back(r.labels.back());
  }
  return std::make_shared<const FiniteNCat>(std::move(r));
}

NFunctor promote(const NFunctor& u, int level) {
  NFunctor r{promote(u.source, level), promote(u.target, level), u.map};
  while (static_cast<int>(r.map.size()) <= level) r.map.push_back(r.map.back());
  return r;
}

NCatPtr product_many(const std::vector<NCatPtr>& factors, int level) {
  for (const auto& f : factors)
    if (f->level != level) throw LevelMismatch("product of categories with different levels");
  std::vector<int> counts(level + 1, 1);
  for (const auto& f : factors)
    for (int k = 0; k <= level; ++k) counts[k] *= f->counts[k];
  FiniteNCat r = FiniteNCat::with_counts(level, counts);
  std::size_t nf = factors.size();
  std::vector<int> digits(nf), gd(nf), fd(nf);
  auto decode = [&](int k, int x, std::vector<int>& out) {
    for (std::size_t i = nf; i-- > 0;) {
      out[i] = x % factors[i]->counts[k];
      x /= factors[i]->counts[k];
    }
  };
  auto encode = [&](int k, const std::vector<int>& d) {
    int x = 0;
    for (std::size_t i = 0; i < nf; ++i) x = x * factors[i]->counts[k] + d[i];
    return x;
  };
  for (int k = 0; k <= level; ++k) {
    for (int x = 0; x < counts[k]; ++x) {
      decode(k, x, digits);
      if (k > 0) {
        std::vector<int> s(nf), t(nf);
        for (std::size_t i = 0; i < nf; ++i) {
          s[i] = factors[i]->src[k][digits[i]];
          t[i] = factors[i]->tgt[k][digits[i]];
        }
        r.src[k][x] = encode(k - 1, s);
        r.tgt[k][x] = encode(k - 1, t);
      }
      if (k < level) {
        std::vector<int> e(nf);
        for (std::size_t i = 0; i < nf; ++i) e[i] = factors[i]->ident[k][digits[i]];
        r.ident[k][x] = encode(k + 1, e);
      }
    }
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < counts[k]; ++g) {
        decode(k, g, gd);
        for (int f = 0; f < counts[k]; ++f) {
          decode(k, f, fd);
          bool ok = true;
          for (std::size_t i = 0; i < nf && ok; ++i) {
            digits[i] = factors[i]->compose(j, k, gd[i], fd[i]);
            ok = digits[i] >= 0;
          }
          if (ok) r.set_compose(j, k, g, f, encode(k, digits));
        }
      }
  }
  return std::make_shared<const FiniteNCat>(std::move(r));
}

NCatPtr product(const NCatPtr& a, const NCatPtr& b) {
  if (a->level != b->level) throw LevelMismatch("product of categories with different levels");
  return product_many({a, b}, a->level);
}

NFunctor product(const NFunctor& u, const NFunctor& v) {
  NFunctor r{product(u.source, v.source), product(u.target, v.target), {}};
  for (int k = 0; k <= r.source->level; ++k) {
    int vs = v.source->counts[k], vt = v.target->counts[k];
    std::vector<int> m(r.source->counts[k]);
    for (int x = 0; x < r.source->counts[k]; ++x)
      m[x] = u.map[k][x / vs] * vt + v.map[k][x % vs];
    r.map.push_back(std::move(m));
  }
  return r;
}

NFunctor projection(const NCatPtr& a, const NCatPtr& b, int which) {
  NCatPtr p = product(a, b);
  NFunctor r{p, which == 0 ? a : b, {}};
  for (int k = 0; k <= p->level; ++k) {
    std::vector<int> m(p->counts[k]);
    for (int x = 0; x < p->counts[k]; ++x)
      m[x] = which == 0 ? x / b->counts[k] : x % b->counts[k];
    r.map.push_back(std::move(m));
  }
  return r;
}

NCatPtr coproduct(const NCatPtr& a, const NCatPtr& b) {
  if (a->level != b->level) throw LevelMismatch("coproduct of categories with different levels");
  int n = a->level;
  std::vector<int> counts(n + 1);
  for (int k = 0; k <= n; ++k) counts[k] = a->counts[k] + b->counts[k];
  FiniteNCat r = FiniteNCat::with_counts(n, counts);
  for (int k = 0; k <= n; ++k) {
    for (int side = 0; side < 2; ++side) {
      const FiniteNCat& c = side == 0 ? *a : *b;
      int off = side == 0 ? 0 : a->counts[k];
      int offd = k > 0 ? (side == 0 ? 0 : a->counts[k - 1]) : 0;
      int offu = k < n ? (side == 0 ? 0 : a->counts[k + 1]) : 0;
      for (int x = 0; x < c.counts[k]; ++x) {
        if (k > 0) {
          r.src[k][off + x] = offd + c.src[k][x];
          r.tgt[k][off + x] = offd + c.tgt[k][x];
        }
        if (k < n) r.ident[k][off + x] = offu + c.ident[k][x];
      }
      for (int j = 0; j < k; ++j)
        for (int g = 0; g < c.counts[k]; ++g)
          for (int f = 0; f < c.counts[k]; ++f) {
            int v = c.compose(j, k, g, f);
            if (v >= 0) r.set_compose(j, k, off + g, off + f, off + v);
          }
    }
  }
  return std::make_shared<const FiniteNCat>(std::move(r));
}

NFunctor coproduct_injection(const NCatPtr& a, const NCatPtr& b, int which) {
  NCatPtr s = coproduct(a, b);
  const NCatPtr& part = which == 0 ? a : b;
  NFunctor r{part, s, {}};
  for (int k = 0; k <= s->level; ++k) {
    std::vector<int> m(part->counts[k]);
    for (int x = 0; x < part->counts[k]; ++x) m[x] = (which == 0 ? 0 : a->counts[k]) + x;
    r.map.push_back(std::move(m));
  }
  return r;
}

NFunctor copair(const NCatPtr& sum, const NFunctor& u, const NFunctor& v) {
  NFunctor r{sum, u.target, {}};
  for (int k = 0; k <= sum->level; ++k) {
    std::vector<int> m = u.map[k];
    m.insert(m.end(), v.map[k].begin(), v.map[k].end());
    r.map.push_back(std::move(m));
  }
  return r;
}

Flattened flatten(const EnrichedData& data) {
  int n = data.level;
  int objs = data.objects;
  Flattened out;
  out.offset.assign(objs, std::vector<std::vector<int>>(objs, std::vector<int>(n, -1)));
  std::vector<int> counts(n + 1, 0);
  counts[0] = objs;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < objs; ++i)
      for (int j = 0; j < objs; ++j) {
        const NCatPtr& h = data.hom[i][j];
        if (!h) continue;
        if (h->level != n - 1) throw LevelMismatch("hom category has the wrong level");
        out.offset[i][j][k - 1] = counts[k];
        counts[k] += h->counts[k - 1];
      }
  FiniteNCat r = FiniteNCat::with_counts(n, counts);
  for (int o = 0; o < objs; ++o) {
    if (!data.hom[o][o]) throw std::invalid_argument("missing identity hom");
    if (n > 0) r.ident[0][o] = out.offset[o][o][0] + data.unit[o];
  }
  for (int i = 0; i < objs; ++i)
    for (int j = 0; j < objs; ++j) {
      const NCatPtr& h = data.hom[i][j];
      if (!h) continue;
      const auto& off = out.offset[i][j];
      for (int k = 1; k <= n; ++k) {
        int base = off[k - 1];
        for (int x = 0; x < h->counts[k - 1]; ++x) {
          if (k == 1) {
            r.src[1][base + x] = i;
            r.tgt[1][base + x] = j;
          } else {
            r.src[k][base + x] = off[k - 2] + h->src[k - 1][x];
            r.tgt[k][base + x] = off[k - 2] + h->tgt[k - 1][x];
          }
          if (k < n) r.ident[k][base + x] = off[k] + h->ident[k - 1][x];
        }
        for (int jj = 1; jj < k; ++jj)
          for (int g = 0; g < h->counts[k - 1]; ++g)
            for (int f = 0; f < h->counts[k - 1]; ++f) {
              int v = h->compose(jj - 1, k - 1, g, f);
              if (v >= 0) r.set_compose(jj, k, base + g, base + f, base + v);
            }
      }
    }
  for (int i = 0; i < objs; ++i)
    for (int j = 0; j < objs; ++j) {
      if (!data.hom[i][j]) continue;
      for (int l = 0; l < objs; ++l) {
        if (!data.hom[j][l]) continue;
        const NCatPtr& hf = data.hom[i][j];
        const NCatPtr& hg = data.hom[j][l];
        for (int k = 1; k <= n; ++k)
          for (int g = 0; g < hg->counts[k - 1]; ++g)
            for (int f = 0; f < hf->counts[k - 1]; ++f) {
              int v = data.compose(i, j, l, k - 1, g, f);
              r.set_compose(0, k, out.offset[j][l][k - 1] + g, out.offset[i][j][k - 1] + f,
                            out.offset[i][l][k - 1] + v);
            }
      }
    }
  out.cat = std::move(r);
  return out;
}

}  // namespace thetacat
