#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "thetacat/ncat.hpp"

namespace thetacat {

namespace {

struct Occurrence {
  int j;
  int other;
  bool left;  // the cell is the left factor g in comp_j(g, other)
  int result;
};

class FunctorSearch {
 public:
  FunctorSearch(const FiniteNCat& c, const FiniteNCat& d, const SearchOptions& opts)
      : c_(c), d_(d), opts_(opts) {
    if (c.level != d.level) throw LevelMismatch("functor between categories of different levels");
    n_ = c.level;
    occ_.resize(n_ + 1);
    std::vector<std::vector<char>> decomposable(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
      occ_[k].resize(c.counts[k]);
      decomposable[k].assign(c.counts[k], 0);
      if (k > 0)
        for (int x = 0; x < c.counts[k - 1]; ++x)
          if (k - 1 < n_) decomposable[k][c.ident[k - 1][x]] = 1;
      for (int j = 0; j < k; ++j)
        for (int g = 0; g < c.counts[k]; ++g)
          for (int f = 0; f < c.counts[k]; ++f) {
            int r = c.compose(j, k, g, f);
            if (r < 0) continue;
            occ_[k][g].push_back({j, f, true, r});
            if (f != g) occ_[k][f].push_back({j, g, false, r});
            if (g != r && f != r) decomposable[k][r] = 1;
          }
    }
    for (int k = 0; k <= n_; ++k) {
      for (int pass = 0; pass < 2; ++pass)
        for (int x = 0; x < c.counts[k]; ++x)
          if (decomposable[k][x] == pass) vars_.emplace_back(k, x);
    }
    buckets_.resize(n_ + 1);
    for (int k = 1; k <= n_; ++k)
      for (int y = 0; y < d.counts[k]; ++y)
        buckets_[k][key(d.src[k][y], d.tgt[k][y])].push_back(y);
    all_objects_.resize(d.counts[0]);
    for (int y = 0; y < d.counts[0]; ++y) all_objects_[y] = y;
    assign_.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) assign_[k].assign(c.counts[k], -1);
  }

  void run(const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    visit_ = &visit;
    if (!opts_.preassign.empty()) {
      for (int k = 0; k <= n_ && k < static_cast<int>(opts_.preassign.size()); ++k)
        for (int x = 0; x < static_cast<int>(opts_.preassign[k].size()); ++x) {
          int y = opts_.preassign[k][x];
          if (y >= 0 && !set(k, x, y)) return;
        }
    }
    recurse(0);
  }

 private:
  static std::uint64_t key(int s, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s)) << 32) |
           static_cast<std::uint32_t>(t);
  }

  bool set(int k, int x, int y) {
    if (assign_[k][x] >= 0) return assign_[k][x] == y;
    if (k > 0) {
      if (!set(k - 1, c_.src[k][x], d_.src[k][y])) return false;
      if (!set(k - 1, c_.tgt[k][x], d_.tgt[k][y])) return false;
      if (assign_[k][x] >= 0) return assign_[k][x] == y;
    }
    if (opts_.filter && !opts_.filter(k, x, y)) return false;
    assign_[k][x] = y;
    trail_.emplace_back(k, x);
    if (k < n_ && !set(k + 1, c_.ident[k][x], d_.ident[k][y])) return false;
    for (const Occurrence& o : occ_[k][x]) {
      int other = assign_[k][o.other];
      if (other < 0) continue;
      int r = o.left ? d_.compose(o.j, k, y, other) : d_.compose(o.j, k, other, y);
      if (r < 0 || !set(k, o.result, r)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [k, x] = trail_.back();
      trail_.pop_back();
      assign_[k][x] = -1;
    }
  }

  bool recurse(std::size_t i) {
    while (i < vars_.size() && assign_[vars_[i].first][vars_[i].second] >= 0) ++i;
    if (i == vars_.size()) return (*visit_)(assign_);
    auto [k, x] = vars_[i];
    const std::vector<int>* cand = &all_objects_;
    if (k > 0) {
      auto it = buckets_[k].find(key(assign_[k - 1][c_.src[k][x]], assign_[k - 1][c_.tgt[k][x]]));
      if (it == buckets_[k].end()) return true;
      cand = &it->second;
    }
    for (int y : *cand) {
      std::size_t mark = trail_.size();
      bool ok = set(k, x, y);
      bool keep_going = true;
      if (ok) keep_going = recurse(i + 1);
      undo(mark);
      if (!keep_going) return false;
    }
    return true;
  }

  const FiniteNCat& c_;
  const FiniteNCat& d_;
  const SearchOptions& opts_;
  int n_ = 0;
  std::vector<std::vector<std::vector<Occurrence>>> occ_;
  std::vector<std::pair<int, int>> vars_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<int>>> buckets_;
  std::vector<int> all_objects_;
  std::vector<std::vector<int>> assign_;
  std::vector<std::pair<int, int>> trail_;
  const std::function<bool(const std::vector<std::vector<int>>&)>* visit_ = nullptr;
};

}  // namespace

void for_each_functor(const FiniteNCat& c, const FiniteNCat& d, const SearchOptions& opts,
                      const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  FunctorSearch search(c, d, opts);
  std::size_t seen = 0;
  search.run([&](const std::vector<std::vector<int>>& a) {
    ++seen;
    if (!visit(a)) return false;
    return opts.limit == 0 || seen < opts.limit;
  });
}

std::vector<NFunctor> enumerate_functors(const NCatPtr& c, const NCatPtr& d,
                                         const SearchOptions& opts) {
  std::vector<NFunctor> out;
  for_each_functor(*c, *d, opts, [&](const std::vector<std::vector<int>>& a) {
    out.push_back(NFunctor{c, d, a});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const NFunctor& x, const NFunctor& y) { return x.map < y.map; });
  return out;
}

}  // namespace thetacat
