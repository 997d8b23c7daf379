#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mdeg/quiver.hpp"

namespace mdeg {

class LaurentMonomial;

/// A direct sum of indecomposables V(i, p), kept as a multiset of vertices.
/// The empty multiset is the zero object.
class DerivedObject {
 public:
  DerivedObject() = default;
  explicit DerivedObject(std::map<Vertex, int> multiplicities);
  DerivedObject(std::initializer_list<Vertex> summands);

  void add(const Vertex& v, int mult = 1);
  /// Removes one copy; returns false if v is not a summand.
  bool remove(const Vertex& v);

  bool is_zero() const { return mult_.empty(); }
  int multiplicity(const Vertex& v) const;
  /// Number of indecomposable summands counted with multiplicity.
  int size() const;
  const std::map<Vertex, int>& multiplicities() const { return mult_; }
  /// Summands expanded with repetition, canonical (p, i) order.
  std::vector<Vertex> summands() const;

  /// Multiset union.
  DerivedObject& operator+=(const DerivedObject& o);
  friend DerivedObject operator+(DerivedObject a, const DerivedObject& b) { return a += b; }
  /// Multiset difference; throws std::invalid_argument if o is not contained.
  DerivedObject minus(const DerivedObject& o) const;
  bool contains(const DerivedObject& o) const;

  friend bool operator==(const DerivedObject&, const DerivedObject&) = default;
  friend auto operator<=>(const DerivedObject& a, const DerivedObject& b) {
    return a.mult_ <=> b.mult_;
  }

  /// Text shorthand "V(2,0)+V(3,1)", "0" for the zero object.
  std::string to_string() const;

 private:
  std::map<Vertex, int> mult_;
};

/// The object whose summand (i, p) has multiplicity = exponent of Y_{i,p}.
/// Throws InputError on non-dominant monomials.
DerivedObject from_monomial(const LaurentMonomial& m);
LaurentMonomial to_monomial(const DerivedObject& x);

/// (min p, max p) over summands; throws InputError on the zero object.
std::pair<int, int> p_extremes(const DerivedObject& x);

enum class SliceSide {
  AtMax,  // summands with p == threshold (Y^max, X^{Y,max})
  Above,  // p > threshold
  AtMin,  // summands with p == threshold (Y^min, X^{Y,min})
  Below,  // p < threshold
};

struct Slice {
  DerivedObject part;
  DerivedObject rest;
};

/// Partitions x by comparing each summand's p with `threshold`.
Slice slice(const DerivedObject& x, int threshold, SliceSide side);

K0Class k0_class(const Quiver& q, const DerivedObject& x);

/// Throws InputError unless every summand lies in the repetition quiver.
void require_hat_i(const Quiver& q, const DerivedObject& x, const std::string& what);

}  // namespace mdeg
