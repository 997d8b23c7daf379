#pragma once

#include <map>
#include <mutex>

#include "mdeg/quiver.hpp"

namespace mdeg {

/// dim Hom(V(source), V(y)) for every y, stored on its (finite) support.
struct Hammock {
  Vertex source;
  std::map<Vertex, int> dims;

  int at(const Vertex& y) const {
    auto it = dims.find(y);
    return it == dims.end() ? 0 : it->second;
  }
  int p_max() const;
};

/// Knits the hammock starting at `source`:
///   h(source) = 1, h(z) = 0 for p(z) <= p(source), z != source,
///   h(z) = max(0, sum_{w in mesh_predecessors(z)} h(w) - h(tau z)) beyond.
/// Knitting stops after two consecutive all-zero levels.
Hammock knit_hammock(const Quiver& q, const Vertex& source);

int hom_dim(const Quiver& q, const Vertex& x, const Vertex& y);

/// dim Ext^1(V(x), V(y)) = dim Hom(V(y), tau V(x)).
int ext1_dim(const Quiver& q, const Vertex& x, const Vertex& y);

/// Memoizes hammocks per source vertex. Safe for concurrent use.
class HomTable {
 public:
  explicit HomTable(const Quiver& q) : quiver_(&q) {}

  const Hammock& hammock(const Vertex& source) const;
  int hom(const Vertex& x, const Vertex& y) const;
  int ext1(const Vertex& x, const Vertex& y) const;

 private:
  const Quiver* quiver_;
  mutable std::mutex mu_;
  mutable std::map<Vertex, Hammock> cache_;
};

}  // namespace mdeg
