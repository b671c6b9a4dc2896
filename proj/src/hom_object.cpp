#include <map>

#include "thetacat/ncat.hpp"
#include "thetacat/theta.hpp"

namespace thetacat {

namespace {

using Index = std::map<std::vector<std::vector<int>>, int>;

int lookup(const Index& idx, const NFunctor& u) {
  auto it = idx.find(u.map);
  if (it == idx.end()) throw std::logic_error("functor missing from hom-object cells");
  return it->second;
}

NFunctor whisker(const NFunctor& phi, const NCatPtr& c, const NFunctor& shape) {
  return compose(phi, product(identity_functor(c), shape));
}

}  // namespace

InternalHom internal_hom_data(const NCatPtr& c, const NCatPtr& d) {
  if (c->level != d->level) throw LevelMismatch("internal hom needs equal levels");
  int n = c->level;
  InternalHom out;
  out.exponent = c;
  out.base = d;
  std::vector<Index> index(n + 1);
  std::vector<const FreeNCat*> globes(n + 1);
  std::vector<int> counts(n + 1);
  for (int k = 0; k <= n; ++k) {
    globes[k] = &free_ncat(Table::globe(k), n);
    out.cells.push_back(enumerate_functors(product(c, globes[k]->cat), d));
    for (std::size_t x = 0; x < out.cells[k].size(); ++x)
      index[k][out.cells[k][x].map] = static_cast<int>(x);
    counts[k] = static_cast<int>(out.cells[k].size());
  }
  FiniteNCat r = FiniteNCat::with_counts(n, counts);
  for (int k = 0; k <= n; ++k) {
    const NCatPtr& gk = globes[k]->cat;
    int top = globes[k]->globes[0].second;
    if (k > 0) {
      NFunctor sigma = globe_functor(k - 1, n, gk, gk->src[k][top]);
      NFunctor tau = globe_functor(k - 1, n, gk, gk->tgt[k][top]);
      for (int x = 0; x < counts[k]; ++x) {
        r.src[k][x] = lookup(index[k - 1], whisker(out.cells[k][x], c, sigma));
        r.tgt[k][x] = lookup(index[k - 1], whisker(out.cells[k][x], c, tau));
      }
    }
    if (k < n) {
      NFunctor proj = globe_functor(k + 1, n, gk, gk->ident[k][top]);
      for (int x = 0; x < counts[k]; ++x)
        r.ident[k][x] = lookup(index[k + 1], whisker(out.cells[k][x], c, proj));
    }
    for (int j = 0; j < k; ++j) {
      Table paste{{k, k}, {j}};
      const FreeNCat& p = free_ncat(paste, n);
      NFunctor first = globe_functor(k, n, p.cat, p.globes[0].second);
      NFunctor second = globe_functor(k, n, p.cat, p.globes[1].second);
      int glued = p.cat->compose(j, k, p.globes[1].second, p.globes[0].second);
      NFunctor diag = globe_functor(k, n, p.cat, glued);
      for (const NFunctor& psi : enumerate_functors(product(c, p.cat), d)) {
        int f = lookup(index[k], whisker(psi, c, first));
        int g = lookup(index[k], whisker(psi, c, second));
        r.set_compose(j, k, g, f, lookup(index[k], whisker(psi, c, diag)));
      }
    }
  }
  out.cat = std::make_shared<const FiniteNCat>(std::move(r));
  return out;
}

NCatPtr internal_hom(const NCatPtr& c, const NCatPtr& d) { return internal_hom_data(c, d).cat; }

NFunctor evaluate_at(const InternalHom& h, int object) {
  int n = h.cat->level;
  NFunctor ev{h.cat, h.base, {}};
  for (int k = 0; k <= n; ++k) {
    const FreeNCat& g = free_ncat(Table::globe(k), n);
    // Cells of exponent x D_k are indexed a * |D_k| + b.
    int cell = h.exponent->identity(0, k, object) * g.cat->counts[k] + g.globes[0].second;
    std::vector<int> m;
    for (const NFunctor& phi : h.cells[k]) m.push_back(phi.map[k][cell]);
    ev.map.push_back(std::move(m));
  }
  return ev;
}

}  // namespace thetacat
