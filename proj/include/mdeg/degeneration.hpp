#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdeg/object.hpp"
#include "mdeg/type_a.hpp"

namespace mdeg {

/// Replaces summands y1, y2 of an object by the middle term of the non-split
/// triangle V(y1) -> E -> V(y2) -> V(y1)[1] certified by `parallelogram`.
struct FusionMove {
  Vertex y1;
  Vertex y2;
  Parallelogram parallelogram;
  DerivedObject result;
};

/// Moves are ordered by the fused pair; the result is determined by it.
inline bool signature_less(const FusionMove& a, const FusionMove& b) {
  if (a.y1 != b.y1) return a.y1 < b.y1;
  return a.y2 < b.y2;
}

/// All fusion moves on y, ordered by (y1, y2). Type A only.
std::vector<FusionMove> fusion_moves(const Quiver& q, const DerivedObject& y);

/// Dense bitset used for reachability rows.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  BitRow& operator|=(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Deg(Y): the closure of {Y} under fusion moves with its strict order
/// (reachability) and Hasse covers.
class DegPoset {
 public:
  struct Edge {
    std::size_t upper;
    std::size_t lower;
    FusionMove move;
  };

  const DerivedObject& top() const { return elements_[top_]; }
  std::size_t top_index() const { return top_; }
  const std::vector<DerivedObject>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const DerivedObject& x) const;
  bool contains(const DerivedObject& x) const { return index_of(x).has_value(); }

  /// elements[lower] < elements[upper] strictly.
  bool less(std::size_t lower, std::size_t upper) const { return reach_[upper].test(lower); }
  /// All strict pairs (lower, upper), canonical order.
  std::vector<std::pair<std::size_t, std::size_t>> relation() const;

  /// Every fusion move between elements (duplicates collapsed per result).
  const std::vector<Edge>& fusion_edges() const { return fusions_; }
  /// Transitive reduction; each cover carries its smallest certifying move.
  const std::vector<Edge>& covers() const { return covers_; }
  /// Covers with upper == top.
  std::vector<Edge> covers_below(std::size_t upper) const;

  /// Shortest chain of fusion moves from the top down to x, smallest move
  /// signatures first; empty for x == top, nullopt if x is not below top.
  std::optional<std::vector<FusionMove>> chain_to(const DerivedObject& x) const;
  /// Same, but every step is a Hasse cover.
  std::optional<std::vector<FusionMove>> cover_chain_to(const DerivedObject& x) const;

  friend DegPoset deg_set(const Quiver& q, const DerivedObject& y);

 private:
  std::optional<std::vector<FusionMove>> path_to(const DerivedObject& x,
                                                 const std::vector<Edge>& edges) const;

  std::vector<DerivedObject> elements_;
  std::map<DerivedObject, std::size_t> index_;
  std::size_t top_ = 0;
  std::vector<Edge> fusions_;
  std::vector<Edge> covers_;
  std::vector<BitRow> reach_;  // reach_[u].test(w): w strictly below u
};

/// BFS closure of y under fusion moves. Type A only.
DegPoset deg_set(const Quiver& q, const DerivedObject& y);

/// x <=_Delta y, with the witness chain of fusion moves from y down to x.
/// With refine set, every step of the chain is a Hasse cover.
std::optional<std::vector<FusionMove>> leq_delta(const Quiver& q, const DerivedObject& x,
                                                 const DerivedObject& y, bool refine = false);

struct MinimalCover {
  DerivedObject lower;
  FusionMove move;
};

/// The minimal degenerations of y: Hasse covers directly below y inside Deg(y).
std::vector<MinimalCover> minimal_covers(const Quiver& q, const DerivedObject& y);

struct TheoremCounterexample {
  LaurentMonomial n;
  LaurentMonomial m;
  bool nakajima;
  bool degeneration;
};

struct TheoremReport {
  std::string quiver;
  int p_lo = 0;
  int p_hi = 0;
  int max_factors = 0;
  std::size_t vertices = 0;
  std::size_t monomials = 0;
  std::size_t pairs = 0;
  std::size_t comparable_pairs = 0;
  std::size_t fusion_moves_checked = 0;
  std::vector<TheoremCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Every dominant monomial of degree <= max_factors supported in the window,
/// in canonical order.
std::vector<LaurentMonomial> dominant_monomials(const Quiver& q, int p_lo, int p_hi,
                                                int max_factors);

/// Checks n <= m  <=>  V(n) <=_Delta V(m) on every ordered pair of dominant
/// monomials with at most max_factors factors supported in [p_lo, p_hi].
TheoremReport verify_theorem(const Quiver& q, int p_lo, int p_hi, int max_factors);

struct LemmaFailure {
  Vertex y1;
  Vertex y2;
  std::string reason;
};

struct LemmaReport {
  std::string quiver;
  int p_lo = 0;
  int p_hi = 0;
  std::size_t pairs = 0;
  std::size_t triangles = 0;
  std::vector<LemmaFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// For every ordered vertex pair in the window: the split case Y_{y1} Y_{y2}
/// compares with v = 0 and, if a parallelogram exists, the monomial of its
/// middle term is below Y_{y1} Y_{y2} with v equal to the formula box.
LemmaReport verify_pairwise_lemma(const Quiver& q, int p_lo, int p_hi);

}  // namespace mdeg
