#include "mdeg/strata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "mdeg/degeneration.hpp"
#include "mdeg/object.hpp"

namespace mdeg {

namespace {

LaurentMonomial w_monomial(const Quiver& q, const GradedDims& w) {
  GradedDims only_w{w.w, {}};
  return m_of_vw(q, only_w);
}

std::vector<LaurentMonomial> bounded_closure(const Quiver& q, const LaurentMonomial& m,
                                             int search_bound) {
  if (m.is_one()) return {m};
  const auto [lo, hi] = m.p_range();
  // Every A^{-1} with a label inside (lo, hi) only touches levels lo..hi, so
  // states are dense exponent vectors over the I-hat vertices of that strip.
  const std::vector<Vertex> slots = q.hat_i_window(lo, hi);
  std::map<Vertex, std::size_t> slot_of;
  for (std::size_t k = 0; k < slots.size(); ++k) slot_of[slots[k]] = k;
  using State = std::vector<int>;
  std::vector<std::vector<std::pair<std::size_t, int>>> moves;
  for (int p = lo + 1; p < hi; ++p) {
    for (int i = 1; i <= q.rank(); ++i) {
      Vertex label{i, p};
      if (!q.in_hat_i_prime(label)) continue;
      std::vector<std::pair<std::size_t, int>> delta;
      const LaurentMonomial inv = a_monomial_labelled(q, label).inverse();
      for (auto [v, e] : inv.exponents()) {
        delta.emplace_back(slot_of.at(v), e);
      }
      moves.push_back(std::move(delta));
    }
  }
  State start(slots.size(), 0);
  for (auto [v, e] : m.exponents()) start[slot_of.at(v)] = e;

  struct Hash {
    std::size_t operator()(const State& s) const {
      std::size_t h = 1469598103934665603ULL;
      for (int x : s) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ULL;
      return h;
    }
  };
  // Each A^{-1} lowers a positive weighted degree by one, so with exponents
  // bounded below the search space is finite.
  std::unordered_set<State, Hash> seen{start};
  std::deque<State> todo{start};
  std::vector<LaurentMonomial> dominant;
  while (!todo.empty()) {
    State cur = std::move(todo.front());
    todo.pop_front();
    if (std::all_of(cur.begin(), cur.end(), [](int e) { return e >= 0; })) {
      std::map<Vertex, int> exps;
      for (std::size_t k = 0; k < cur.size(); ++k) {
        if (cur[k] != 0) exps[slots[k]] = cur[k];
      }
      dominant.emplace_back(exps);
    }
    for (const auto& delta : moves) {
      State next = cur;
      bool ok = true;
      for (auto [k, e] : delta) {
        next[k] += e;
        ok = ok && next[k] >= -search_bound;
      }
      if (ok && seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  std::sort(dominant.begin(), dominant.end());
  return dominant;
}

// Labels are decided level by level in p. Once the labels of level p are set the
// exponent of Y_{i,p-1} is final, which caps v_{i,p} by
//   m_{i,p-1} - v_{i,p-2} + sum_{j ~ i} v_{j,p-1}.
// Every dominant m * A^{-v} has its labels strictly inside the p-range of m, so
// the enumeration is complete.
std::vector<LaurentMonomial> level_closure(const Quiver& q, const LaurentMonomial& m) {
  if (m.is_one()) return {m};
  const auto [lo, hi] = m.p_range();
  std::vector<Vertex> labels;
  for (int p = lo + 1; p < hi; ++p) {
    for (int i = 1; i <= q.rank(); ++i) {
      if (q.in_hat_i_prime({i, p})) labels.push_back({i, p});
    }
  }
  AMonomialVector v;
  auto at = [&v](int i, int p) {
    auto it = v.find({i, p});
    return it == v.end() ? 0LL : it->second;
  };
  std::vector<LaurentMonomial> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == labels.size()) {
      LaurentMonomial n = apply_a_inverse(q, m, v);
      if (n.is_dominant()) out.push_back(std::move(n));
      return;
    }
    const Vertex label = labels[k];
    long long cap = m.exponent({label.i, label.p - 1}) - at(label.i, label.p - 2);
    for (int j : q.neighbors(label.i)) cap += at(j, label.p - 1);
    for (long long e = 0; e <= cap; ++e) {
      v[label] = e;
      rec(k + 1);
    }
    v.erase(label);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LaurentMonomial> exact_type_a_closure(const Quiver& q, const LaurentMonomial& m) {
  DegPoset poset = deg_set(q, from_monomial(m));
  std::vector<LaurentMonomial> out;
  for (const auto& x : poset.elements()) out.push_back(to_monomial(x));
  std::sort(out.begin(), out.end());
  return out;
}

StrataResult to_strata(const Quiver& q, const LaurentMonomial& top,
                       const std::vector<LaurentMonomial>& monomials) {
  StrataResult out;
  for (const auto& n : monomials) {
    auto v = nakajima_leq(q, n, top);
    if (!v) throw std::logic_error("strata: " + n.to_string() + " is not below " + top.to_string());
    out.strata.push_back({*v, n});
  }
  return out;
}

}  // namespace

int default_search_bound(const LaurentMonomial& m) { return 3 * m.max_exponent(); }

StrataResult strata_bounded_search(const Quiver& q, const GradedDims& w, int search_bound) {
  const LaurentMonomial top = w_monomial(q, w);
  StrataResult out = to_strata(q, top, bounded_closure(q, top, search_bound));
  out.bounded_search = true;
  out.search_bound = search_bound;
  return out;
}

StrataResult strata_by_levels(const Quiver& q, const GradedDims& w) {
  const LaurentMonomial top = w_monomial(q, w);
  return to_strata(q, top, level_closure(q, top));
}

StrataResult strata(const Quiver& q, const GradedDims& w, std::optional<int> search_bound) {
  const LaurentMonomial top = w_monomial(q, w);
  const int bound = search_bound.value_or(default_search_bound(top));
  if (q.type() != DynkinType::A) return strata_bounded_search(q, w, bound);
  StrataResult out = to_strata(q, top, exact_type_a_closure(q, top));
  out.search_bound = bound;
  return out;
}

ClosurePoset downward_closure(const Quiver& q, const LaurentMonomial& m,
                              std::optional<int> search_bound, bool by_levels) {
  require_hat_i(q, m, "downward_closure");
  if (!m.is_dominant()) throw InputError("downward_closure: " + m.to_string() + " is not dominant");
  ClosurePoset out;
  out.search_bound = search_bound.value_or(default_search_bound(m));
  if (by_levels) {
    out.elements = level_closure(q, m);
  } else if (q.type() == DynkinType::A) {
    out.elements = exact_type_a_closure(q, m);
  } else {
    out.elements = bounded_closure(q, m, out.search_bound);
    out.exact = false;
  }
  const std::size_t count = out.elements.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t lo = 0; lo < count; ++lo) {
    for (std::size_t up = 0; up < count; ++up) {
      if (lo != up && nakajima_leq(q, out.elements[lo], out.elements[up])) {
        below[lo][up] = true;
        out.relation.emplace_back(lo, up);
      }
    }
    if (out.elements[lo] == m) out.top = lo;
  }
  for (const auto& [lo, up] : out.relation) {
    bool cover = true;
    for (std::size_t mid = 0; mid < count && cover; ++mid) {
      if (below[lo][mid] && below[mid][up]) cover = false;
    }
    if (cover) out.covers.emplace_back(lo, up);
  }
  return out;
}

}  // namespace mdeg
