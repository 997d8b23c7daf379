#pragma once

#include <optional>
#include <utility>

#include "mdeg/monomial.hpp"
#include "mdeg/object.hpp"
#include "mdeg/quiver.hpp"

namespace mdeg {

enum class ParallelogramKind { C1, C2 };

const char* to_string(ParallelogramKind k);

/// Vertex configuration of a non-split triangle
///   V(start) -> V(middles.first) + V(middles.second) -> V(end) -> V(start)[1]
/// in type A_n. Middles may be boundary sentinels (i = 0 or n+1), which are zero.
struct Parallelogram {
  Vertex start;
  Vertex end;
  int a = 0;
  int b = 0;
  ParallelogramKind kind = ParallelogramKind::C1;
  std::pair<Vertex, Vertex> middles;

  friend bool operator==(const Parallelogram&, const Parallelogram&) = default;
};

/// Builds the configuration with bottom corner `start`; nullopt if a >= b >= 1
/// fails or a corner leaves the strip 0..n+1 (end must be a real vertex).
std::optional<Parallelogram> make_parallelogram(const Quiver& q, const Vertex& start, int a, int b,
                                                ParallelogramKind kind);

/// Solves for (a, b) with ends y1 -> y2. When both kinds apply (same i) C1 is reported.
std::optional<Parallelogram> parallelogram_solve(const Quiver& q, const Vertex& y1,
                                                 const Vertex& y2);

/// The middle term with sentinels dropped.
DerivedObject middle_object(const Quiver& q, const Parallelogram& par);

/// V(i, p)[1] = V(n+1-i, p+n+1) in type A_n.
Vertex shift(const Quiver& q, const Vertex& x);

/// The exponent box of Y_start Y_end / Y_middles: v_{i+r-l, p+r+l+1} = 1 (C1) or
/// v_{i-r+l, p+r+l+1} = 1 (C2) for 0 <= r < a, 0 <= l < b.
AMonomialVector formula_a_monomial(const Parallelogram& par);

void require_type_a(const Quiver& q, const char* what);

}  // namespace mdeg
