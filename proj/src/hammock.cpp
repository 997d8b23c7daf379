#include "mdeg/hammock.hpp"

#include <algorithm>
#include <vector>

namespace mdeg {

int Hammock::p_max() const { return dims.empty() ? source.p : dims.rbegin()->first.p; }

Hammock knit_hammock(const Quiver& q, const Vertex& source) {
  q.require_hat_i(source, "hammock source");
  const int n = q.rank();
  const auto width = static_cast<std::size_t>(n) + 1;
  Hammock out{source, {}};
  out.dims[source] = 1;

  // Rolling levels p-2, p-1, p indexed by diagram vertex.
  std::vector<int> two_back(width, 0), one_back(width, 0), cur(width, 0);
  one_back[static_cast<std::size_t>(source.i)] = 1;
  int zero_levels = 0;
  for (int p = source.p + 1; zero_levels < 2; ++p) {
    std::fill(cur.begin(), cur.end(), 0);
    bool any = false;
    for (int i = 1; i <= n; ++i) {
      if (!q.in_hat_i({i, p})) continue;
      int s = 0;
      for (int j : q.neighbors(i)) s += one_back[static_cast<std::size_t>(j)];
      s -= two_back[static_cast<std::size_t>(i)];
      int val = std::max(0, s);
      cur[static_cast<std::size_t>(i)] = val;
      if (val > 0) {
        out.dims[{i, p}] = val;
        any = true;
      }
    }
    zero_levels = any ? 0 : zero_levels + 1;
    std::swap(two_back, one_back);
    std::swap(one_back, cur);
  }
  return out;
}

int hom_dim(const Quiver& q, const Vertex& x, const Vertex& y) {
  if (q.is_sentinel(x) || q.is_sentinel(y)) return 0;
  q.require_hat_i(y, "hom_dim target");
  if (y.p < x.p) return 0;
  return knit_hammock(q, x).at(y);
}

int ext1_dim(const Quiver& q, const Vertex& x, const Vertex& y) {
  if (q.is_sentinel(x) || q.is_sentinel(y)) return 0;
  return hom_dim(q, y, translate(x, 1));
}

const Hammock& HomTable::hammock(const Vertex& source) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(source); it != cache_.end()) return it->second;
  }
  Hammock h = knit_hammock(*quiver_, source);
  std::lock_guard lock(mu_);
  // std::map never invalidates references; a racing insert just loses.
  return cache_.emplace(source, std::move(h)).first->second;
}

int HomTable::hom(const Vertex& x, const Vertex& y) const {
  if (quiver_->is_sentinel(x) || quiver_->is_sentinel(y)) return 0;
  quiver_->require_hat_i(y, "hom target");
  if (y.p < x.p) return 0;
  return hammock(x).at(y);
}

int HomTable::ext1(const Vertex& x, const Vertex& y) const {
  if (quiver_->is_sentinel(x) || quiver_->is_sentinel(y)) return 0;
  return hom(y, translate(x, 1));
}

}  // namespace mdeg
