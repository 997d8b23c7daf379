#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mdeg/monomial.hpp"

namespace mdeg {

struct Stratum {
  AMonomialVector v;  // dim V, equal to the A-exponents taking m(0, W) to m
  LaurentMonomial m;
};

struct StrataResult {
  std::vector<Stratum> strata;  // canonical order of m
  /// True when the list comes from the bounded A^{-1} search and is not
  /// certified complete.
  bool bounded_search = false;
  int search_bound = 0;
};

/// Default search bound: three times the largest exponent of m.
int default_search_bound(const LaurentMonomial& m);

/// Dominant monomials reachable from m by single A^{-1} moves with labels
/// strictly inside (p_min(m), p_max(m)), keeping every intermediate exponent
/// >= -search_bound. Works for every Dynkin type.
StrataResult strata_bounded_search(const Quiver& q, const GradedDims& w, int search_bound);

/// Exact enumeration for every Dynkin type: the A-exponents are chosen level by
/// level in p, each capped by the exponent of Y one level below.
StrataResult strata_by_levels(const Quiver& q, const GradedDims& w);

/// The nonempty strata of the graded quiver variety of W, i.e. every v >= 0
/// with m(V, W) dominant. Type A is exact through the degeneration engine;
/// D/E fall back to the bounded search.
StrataResult strata(const Quiver& q, const GradedDims& w, std::optional<int> search_bound = {});

struct ClosurePoset {
  std::vector<LaurentMonomial> elements;  // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> relation;  // (lower, upper), strict
  std::vector<std::pair<std::size_t, std::size_t>> covers;    // Hasse edges (lower, upper)
  std::size_t top = 0;
  bool exact = true;
  int search_bound = 0;
};

/// {n dominant : n <= m} with the Nakajima order and its Hasse diagram. With
/// by_levels the elements come from the exact level enumeration in every type.
ClosurePoset downward_closure(const Quiver& q, const LaurentMonomial& m,
                              std::optional<int> search_bound = {}, bool by_levels = false);

}  // namespace mdeg
