#pragma once

#include <map>
#include <optional>
#include <string>

#include "mdeg/quiver.hpp"

namespace mdeg {

/// Monic Laurent monomial in the variables Y_{i,p}; only nonzero exponents stored.
class LaurentMonomial {
 public:
  LaurentMonomial() = default;
  explicit LaurentMonomial(const std::map<Vertex, int>& exponents);

  static LaurentMonomial y(const Vertex& v, int exponent = 1);

  int exponent(const Vertex& v) const;
  const std::map<Vertex, int>& exponents() const { return exp_; }
  bool is_one() const { return exp_.empty(); }
  bool is_dominant() const;
  /// Sum of exponents; for dominant monomials the number of Y factors.
  int degree() const;
  int max_exponent() const;
  /// (min p, max p) over the support; undefined (throws) for the unit.
  std::pair<int, int> p_range() const;

  LaurentMonomial& operator*=(const LaurentMonomial& o);
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  LaurentMonomial pow(int k) const;
  LaurentMonomial inverse() const { return pow(-1); }

  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend auto operator<=>(const LaurentMonomial& a, const LaurentMonomial& b) {
    return a.exp_ <=> b.exp_;
  }

  /// "Y[1,1]*Y[1,3]^2", "1" for the unit.
  std::string to_string() const;

 private:
  void mul_term(const Vertex& v, long long e);

  std::map<Vertex, int> exp_;
};

/// Exponents v_{i,q} of a product of A-monomials, indexed by I-hat-prime.
using AMonomialVector = std::map<Vertex, long long>;

/// Graded dimensions: w over I-hat (the Y-part), v over I-hat-prime (A^{-1}-part).
struct GradedDims {
  std::map<Vertex, int> w;
  std::map<Vertex, long long> v;
};

void require_hat_i(const Quiver& q, const LaurentMonomial& m, const std::string& what);

/// A_{i,p+1} = Y_{i,p} Y_{i,p+2} prod_{j ~ i} Y_{j,p+1}^{-1}, for (i, p) in I-hat.
LaurentMonomial a_monomial(const Quiver& q, const Vertex& at);

/// The same A-monomial indexed by its I-hat-prime label (i, q) = (i, p+1).
LaurentMonomial a_monomial_labelled(const Quiver& q, const Vertex& label);

/// m * prod A_{label}^{-v_label}. Throws InputError if a label is not in I-hat-prime.
LaurentMonomial apply_a_inverse(const Quiver& q, const LaurentMonomial& m,
                                const AMonomialVector& v);

struct NakajimaOptions {
  bool require_dominant = true;
  /// Start the recurrence this many levels below the lowest support level.
  int extra_lower_levels = 0;
};

/// Decides n <= m in Nakajima's order. Returns the unique v >= 0 with
/// m * prod A^{-v} = n, or nullopt when n and m are not comparable that way.
/// Throws OverflowError if the recurrence leaves the int64 range.
std::optional<AMonomialVector> nakajima_leq(const Quiver& q, const LaurentMonomial& n,
                                            const LaurentMonomial& m,
                                            const NakajimaOptions& opts = {});

/// m(V, W) = prod Y^{dim W} prod A^{-dim V}.
LaurentMonomial m_of_vw(const Quiver& q, const GradedDims& dims);

/// Drops zero entries.
AMonomialVector normalized(const AMonomialVector& v);

}  // namespace mdeg
