#include "mdeg/degeneration.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "mdeg/monomial.hpp"

namespace mdeg {

std::vector<FusionMove> fusion_moves(const Quiver& q, const DerivedObject& y) {
  require_type_a(q, "fusion_moves");
  std::vector<FusionMove> out;
  const auto& mult = y.multiplicities();
  for (auto it1 = mult.begin(); it1 != mult.end(); ++it1) {
    // A parallelogram needs p(y1) < p(y2), so only later summands can pair with y1.
    for (auto it2 = std::next(it1); it2 != mult.end(); ++it2) {
      auto par = parallelogram_solve(q, it1->first, it2->first);
      if (!par) continue;
      DerivedObject result = y;
      result.remove(it1->first);
      result.remove(it2->first);
      result += middle_object(q, *par);
      out.push_back({it1->first, it2->first, *par, std::move(result)});
    }
  }
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

std::optional<std::size_t> DegPoset::index_of(const DerivedObject& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> DegPoset::relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t lo = 0; lo < elements_.size(); ++lo) {
    for (std::size_t up = 0; up < elements_.size(); ++up) {
      if (less(lo, up)) out.emplace_back(lo, up);
    }
  }
  return out;
}

std::vector<DegPoset::Edge> DegPoset::covers_below(std::size_t upper) const {
  std::vector<Edge> out;
  for (const auto& e : covers_) {
    if (e.upper == upper) out.push_back(e);
  }
  return out;
}

std::optional<std::vector<FusionMove>> DegPoset::path_to(const DerivedObject& x,
                                                         const std::vector<Edge>& edges) const {
  auto target = index_of(x);
  if (!target) return std::nullopt;
  std::vector<std::vector<const Edge*>> out_edges(elements_.size());
  for (const auto& e : edges) out_edges[e.upper].push_back(&e);
  for (auto& row : out_edges) {
    std::sort(row.begin(), row.end(),
              [](const Edge* a, const Edge* b) { return signature_less(a->move, b->move); });
  }
  std::vector<const Edge*> parent(elements_.size(), nullptr);
  std::vector<bool> seen(elements_.size(), false);
  std::deque<std::size_t> todo{top_};
  seen[top_] = true;
  while (!todo.empty() && !seen[*target]) {
    std::size_t u = todo.front();
    todo.pop_front();
    for (const Edge* e : out_edges[u]) {
      if (seen[e->lower]) continue;
      seen[e->lower] = true;
      parent[e->lower] = e;
      todo.push_back(e->lower);
    }
  }
  if (!seen[*target]) return std::nullopt;
  std::vector<FusionMove> chain;
  for (std::size_t cur = *target; cur != top_; cur = parent[cur]->upper) {
    chain.push_back(parent[cur]->move);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::optional<std::vector<FusionMove>> DegPoset::chain_to(const DerivedObject& x) const {
  return path_to(x, fusions_);
}

std::optional<std::vector<FusionMove>> DegPoset::cover_chain_to(const DerivedObject& x) const {
  return path_to(x, covers_);
}

DegPoset deg_set(const Quiver& q, const DerivedObject& y) {
  require_type_a(q, "deg_set");
  require_hat_i(q, y, "deg_set");

  // Breadth-first closure; discovery order is replaced by canonical order below.
  std::vector<DerivedObject> found{y};
  std::map<DerivedObject, std::size_t> found_index{{y, 0}};
  std::vector<DegPoset::Edge> edges;
  for (std::size_t u = 0; u < found.size(); ++u) {
    std::map<std::size_t, bool> targets;
    for (auto& mv : fusion_moves(q, found[u])) {
      auto [it, fresh] = found_index.emplace(mv.result, found.size());
      if (fresh) found.push_back(mv.result);
      // Keep only the smallest-signature move per (upper, lower) pair.
      if (targets.emplace(it->second, true).second) {
        edges.push_back({u, it->second, std::move(mv)});
      }
    }
  }

  DegPoset poset;
  poset.elements_ = found;
  std::sort(poset.elements_.begin(), poset.elements_.end());
  for (std::size_t k = 0; k < poset.elements_.size(); ++k) poset.index_[poset.elements_[k]] = k;
  std::vector<std::size_t> remap(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) remap[k] = poset.index_.at(found[k]);
  poset.top_ = remap[0];
  for (auto& e : edges) {
    e.upper = remap[e.upper];
    e.lower = remap[e.lower];
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
  });

  // Topological order (uppers before lowers); a cycle would contradict strictness.
  const std::size_t count = poset.elements_.size();
  std::vector<std::vector<std::size_t>> succ(count);
  std::vector<std::size_t> indegree(count, 0);
  for (const auto& e : edges) {
    succ[e.upper].push_back(e.lower);
    ++indegree[e.lower];
  }
  std::vector<std::size_t> order;
  std::deque<std::size_t> ready;
  for (std::size_t k = 0; k < count; ++k) {
    if (indegree[k] == 0) ready.push_back(k);
  }
  while (!ready.empty()) {
    std::size_t u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (std::size_t w : succ[u]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != count) {
    throw std::logic_error("deg_set: fusion graph of " + y.to_string() + " has a cycle");
  }

  poset.reach_.assign(count, BitRow(count));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t w : succ[*it]) {
      poset.reach_[*it].set(w);
      poset.reach_[*it] |= poset.reach_[w];
    }
  }

  for (const auto& e : edges) {
    bool is_cover = true;
    for (std::size_t w : succ[e.upper]) {
      if (w != e.lower && poset.reach_[w].test(e.lower)) {
        is_cover = false;
        break;
      }
    }
    if (is_cover) poset.covers_.push_back(e);
  }
  poset.fusions_ = std::move(edges);
  return poset;
}

std::optional<std::vector<FusionMove>> leq_delta(const Quiver& q, const DerivedObject& x,
                                                 const DerivedObject& y, bool refine) {
  require_hat_i(q, x, "leq_delta x");
  DegPoset poset = deg_set(q, y);
  return refine ? poset.cover_chain_to(x) : poset.chain_to(x);
}

std::vector<MinimalCover> minimal_covers(const Quiver& q, const DerivedObject& y) {
  DegPoset poset = deg_set(q, y);
  std::vector<MinimalCover> out;
  for (const auto& e : poset.covers_below(poset.top_index())) {
    out.push_back({poset.elements()[e.lower], e.move});
  }
  return out;
}

std::vector<LaurentMonomial> dominant_monomials(const Quiver& q, int p_lo, int p_hi,
                                                int max_factors) {
  const auto verts = q.hat_i_window(p_lo, p_hi);
  std::vector<LaurentMonomial> out;
  LaurentMonomial cur;
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int left) {
    out.push_back(cur);
    if (left == 0) return;
    for (std::size_t k = from; k < verts.size(); ++k) {
      LaurentMonomial saved = cur;
      cur *= LaurentMonomial::y(verts[k]);
      extend(k, left - 1);
      cur = std::move(saved);
    }
  };
  extend(0, std::max(0, max_factors));
  std::sort(out.begin(), out.end());
  return out;
}

TheoremReport verify_theorem(const Quiver& q, int p_lo, int p_hi, int max_factors) {
  require_type_a(q, "verify_theorem");
  TheoremReport report;
  report.quiver = q.name();
  report.p_lo = p_lo;
  report.p_hi = p_hi;
  report.max_factors = max_factors;
  report.vertices = q.hat_i_window(p_lo, p_hi).size();
  const auto monomials = dominant_monomials(q, p_lo, p_hi, max_factors);
  report.monomials = monomials.size();
  for (const auto& m : monomials) {
    DegPoset poset = deg_set(q, from_monomial(m));
    report.fusion_moves_checked += poset.fusion_edges().size();
    for (const auto& n : monomials) {
      ++report.pairs;
      bool nak = nakajima_leq(q, n, m).has_value();
      bool del = poset.contains(from_monomial(n));
      if (nak) ++report.comparable_pairs;
      if (nak != del) report.counterexamples.push_back({n, m, nak, del});
    }
  }
  return report;
}

LemmaReport verify_pairwise_lemma(const Quiver& q, int p_lo, int p_hi) {
  require_type_a(q, "verify_pairwise_lemma");
  LemmaReport report;
  report.quiver = q.name();
  report.p_lo = p_lo;
  report.p_hi = p_hi;
  const auto verts = q.hat_i_window(p_lo, p_hi);
  for (const auto& y1 : verts) {
    for (const auto& y2 : verts) {
      ++report.pairs;
      const LaurentMonomial top = LaurentMonomial::y(y1) * LaurentMonomial::y(y2);
      auto split = nakajima_leq(q, top, top);
      if (!split || !split->empty()) {
        report.failures.push_back({y1, y2, "split case does not compare with v = 0"});
      }
      auto par = parallelogram_solve(q, y1, y2);
      if (!par) continue;
      ++report.triangles;
      const LaurentMonomial n = to_monomial(middle_object(q, *par));
      auto v = nakajima_leq(q, n, top);
      if (!v) {
        report.failures.push_back({y1, y2, "middle term " + n.to_string() + " not below " +
                                               top.to_string()});
      } else if (*v != formula_a_monomial(*par)) {
        report.failures.push_back({y1, y2, "solver v differs from the parallelogram box"});
      }
    }
  }
  return report;
}

}  // namespace mdeg
