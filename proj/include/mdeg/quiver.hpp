#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdeg {

/// Raised on malformed input: bad quiver specs, wrong parities, bad literals.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation only exists for some Dynkin types.
class UnsupportedType : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when exact integer arithmetic would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

enum class DynkinType { A, D, E };

char type_letter(DynkinType t);

/// A point (i, p) of I x Z. Ordered by (p, i), which is the canonical
/// order used for every serialized output.
struct Vertex {
  int i = 0;
  int p = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.i <=> b.i;
  }
};

std::string to_string(const Vertex& v);

/// Grothendieck group class as an integer vector indexed by diagram vertex.
struct K0Class {
  std::vector<long long> coords;

  K0Class() = default;
  explicit K0Class(int rank) : coords(static_cast<std::size_t>(rank), 0) {}
  explicit K0Class(std::vector<long long> c) : coords(std::move(c)) {}

  K0Class& operator+=(const K0Class& o);
  K0Class& operator-=(const K0Class& o);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend bool operator==(const K0Class&, const K0Class&) = default;

  bool is_zero() const;
  bool is_nonnegative() const;
};

struct QuiverSpec {
  DynkinType type = DynkinType::A;
  int rank = 0;
  std::vector<std::pair<int, int>> arrows;
  std::optional<std::map<int, int>> height;
  /// Root used when synthesizing a height function; defaults to vertex 1.
  std::optional<int> height_root;
  int height_root_value = 0;
};

/// A Dynkin quiver together with its height function. Immutable once built.
class Quiver {
 public:
  /// Validates the diagram, the orientation and the height function.
  /// Throws InputError naming the offending field of the QuiverSpec.
  static Quiver build(const QuiverSpec& spec);

  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  const std::vector<int>& neighbors(int i) const;
  bool adjacent(int i, int j) const;
  int height(int i) const;
  const std::vector<int>& heights() const { return height_; }

  bool is_diagram_vertex(int i) const { return i >= 1 && i <= rank_; }
  /// Boundary positions 0 and n+1 standing for the zero object (type A only).
  bool is_sentinel(const Vertex& v) const;
  /// |p - height(i)| even.
  bool in_hat_i(const Vertex& v) const;
  /// |p - height(i)| odd.
  bool in_hat_i_prime(const Vertex& v) const;

  /// Throws InputError unless v is a vertex of the repetition quiver.
  void require_hat_i(const Vertex& v, const std::string& what) const;

  /// h = n+1 (A_n), 2n-2 (D_n), 12/18/30 (E_6/7/8). V(x[1]) = (x', p + h).
  int coxeter_number() const;

  /// Dimension vector of the injective I_i: entry j counts paths j -> i.
  const K0Class& injective_dim(int i) const;

  /// Vertices of the repetition quiver with p in [p_lo, p_hi], canonical order.
  std::vector<Vertex> hat_i_window(int p_lo, int p_hi) const;

 private:
  Quiver() = default;

  DynkinType type_ = DynkinType::A;
  int rank_ = 0;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<int>> adjacency_;  // index 1..n
  std::vector<int> height_;                   // index 1..n
  std::vector<K0Class> injectives_;           // index 1..n
};

/// Height function synthesized from a root value by propagating along edges:
/// an arrow i -> j forces h(i) - h(j) = 1.
std::map<int, int> synthesize_height(DynkinType type, int rank,
                                     const std::vector<std::pair<int, int>>& arrows,
                                     int root, int root_value);

/// The AR translation tau^k: (i, p) -> (i, p - 2k).
inline Vertex translate(const Vertex& x, int k) { return {x.i, x.p - 2 * k}; }

/// Sources of the arrows ending at x: {(j, p-1) : j adjacent to i}.
std::vector<Vertex> mesh_predecessors(const Quiver& q, const Vertex& x);

/// Class of V(i, p) in K0, bootstrapped from the injective slice
/// V(i, height(i)) = I_i through the relation [tau z] + [z] = sum of mesh middles.
/// Sentinels map to the zero class.
K0Class k0_class(const Quiver& q, const Vertex& x);

/// Euler form <d, e> = sum d_i e_i - sum_{i -> j} d_i e_j.
long long euler_form(const Quiver& q, const K0Class& d, const K0Class& e);

}  // namespace mdeg
