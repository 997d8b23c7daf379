#pragma once

#include <random>
#include <vector>

#include "mdeg/object.hpp"
#include "mdeg/quiver.hpp"

namespace mdeg::test {

inline Quiver a1() { return Quiver::build({DynkinType::A, 1, {}, std::map<int, int>{{1, 0}}, {}, 0}); }

inline Quiver a2() {
  return Quiver::build({DynkinType::A, 2, {{1, 2}}, std::map<int, int>{{1, 1}, {2, 0}}, {}, 0});
}

inline Quiver a3() {
  return Quiver::build(
      {DynkinType::A, 3, {{1, 2}, {3, 2}}, std::map<int, int>{{1, 1}, {2, 0}, {3, 1}}, {}, 0});
}

inline Quiver a4() { return Quiver::build({DynkinType::A, 4, {{1, 2}, {2, 3}, {3, 4}}, {}, {}, 0}); }

inline Quiver a5() {
  return Quiver::build({DynkinType::A, 5, {{2, 1}, {2, 3}, {4, 3}, {4, 5}}, {}, {}, 0});
}

inline Quiver d4() { return Quiver::build({DynkinType::D, 4, {{1, 2}, {3, 2}, {4, 2}}, {}, {}, 0}); }

inline Quiver d5() {
  return Quiver::build({DynkinType::D, 5, {{1, 2}, {2, 3}, {4, 3}, {3, 5}}, {}, {}, 0});
}

inline Quiver e6() {
  return Quiver::build({DynkinType::E, 6, {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}}, {}, {}, 0});
}

inline Quiver e8() {
  return Quiver::build(
      {DynkinType::E, 8, {{1, 3}, {4, 3}, {2, 4}, {4, 5}, {6, 5}, {6, 7}, {8, 7}}, {}, {}, 0});
}

inline std::vector<Quiver> sample_quivers() { return {a1(), a2(), a3(), a4(), a5(), d4(), d5(), e6(), e8()}; }

inline std::vector<Quiver> type_a_quivers() { return {a1(), a2(), a3(), a4(), a5()}; }

inline int positive_root_count(const Quiver& q) {
  const int n = q.rank();
  switch (q.type()) {
    case DynkinType::A: return n * (n + 1) / 2;
    case DynkinType::D: return n * (n - 1);
    case DynkinType::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
  }
  return 0;
}

/// Random object with `size` summands drawn from the window.
inline DerivedObject random_object(const Quiver& q, std::mt19937& rng, int p_lo, int p_hi, int size) {
  auto verts = q.hat_i_window(p_lo, p_hi);
  std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
  DerivedObject x;
  for (int k = 0; k < size; ++k) x.add(verts[pick(rng)]);
  return x;
}

}  // namespace mdeg::test
