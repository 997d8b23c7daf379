#include "mdeg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace mdeg {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("A-exponent recurrence overflowed");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("A-exponent recurrence overflowed");
  return r;
}

}  // namespace

LaurentMonomial::LaurentMonomial(const std::map<Vertex, int>& exponents) {
  for (auto [v, e] : exponents) mul_term(v, e);
}

LaurentMonomial LaurentMonomial::y(const Vertex& v, int exponent) {
  LaurentMonomial m;
  m.mul_term(v, exponent);
  return m;
}

void LaurentMonomial::mul_term(const Vertex& v, long long e) {
  if (e == 0) return;
  long long cur = exponent(v);
  long long next = cur + e;
  if (next > std::numeric_limits<int>::max() || next < std::numeric_limits<int>::min()) {
    throw OverflowError("monomial exponent out of range at " + mdeg::to_string(v));
  }
  if (next == 0) {
    exp_.erase(v);
  } else {
    exp_[v] = static_cast<int>(next);
  }
}

int LaurentMonomial::exponent(const Vertex& v) const {
  auto it = exp_.find(v);
  return it == exp_.end() ? 0 : it->second;
}

bool LaurentMonomial::is_dominant() const {
  return std::all_of(exp_.begin(), exp_.end(), [](const auto& kv) { return kv.second > 0; });
}

int LaurentMonomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exp_) d += e;
  return d;
}

int LaurentMonomial::max_exponent() const {
  int best = 0;
  for (const auto& [v, e] : exp_) best = std::max(best, e);
  return best;
}

std::pair<int, int> LaurentMonomial::p_range() const {
  if (exp_.empty()) throw InputError("p_range: the unit monomial has empty support");
  return {exp_.begin()->first.p, exp_.rbegin()->first.p};
}

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& o) {
  for (const auto& [v, e] : o.exp_) mul_term(v, e);
  return *this;
}

LaurentMonomial LaurentMonomial::pow(int k) const {
  LaurentMonomial out;
  for (const auto& [v, e] : exp_) out.mul_term(v, static_cast<long long>(e) * k);
  return out;
}

std::string LaurentMonomial::to_string() const {
  if (exp_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exp_) {
    if (!s.empty()) s += '*';
    s += "Y[" + std::to_string(v.i) + "," + std::to_string(v.p) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

void require_hat_i(const Quiver& q, const LaurentMonomial& m, const std::string& what) {
  for (const auto& [v, e] : m.exponents()) {
    (void)e;
    q.require_hat_i(v, what);
  }
}

LaurentMonomial a_monomial(const Quiver& q, const Vertex& at) {
  q.require_hat_i(at, "a_monomial");
  LaurentMonomial m = LaurentMonomial::y(at) * LaurentMonomial::y({at.i, at.p + 2});
  for (int j : q.neighbors(at.i)) m *= LaurentMonomial::y({j, at.p + 1}, -1);
  return m;
}

LaurentMonomial a_monomial_labelled(const Quiver& q, const Vertex& label) {
  if (!q.in_hat_i_prime(label)) {
    throw InputError("A-monomial label " + to_string(label) + " is not in I-hat-prime");
  }
  return a_monomial(q, {label.i, label.p - 1});
}

LaurentMonomial apply_a_inverse(const Quiver& q, const LaurentMonomial& m,
                                const AMonomialVector& v) {
  LaurentMonomial out = m;
  for (const auto& [label, k] : v) {
    if (k == 0) continue;
    if (k > std::numeric_limits<int>::max() || k < -std::numeric_limits<int>::max()) {
      throw OverflowError("A-exponent too large to apply");
    }
    out *= a_monomial_labelled(q, label).pow(-static_cast<int>(k));
  }
  return out;
}

AMonomialVector normalized(const AMonomialVector& v) {
  AMonomialVector out;
  for (const auto& [k, e] : v) {
    if (e != 0) out[k] = e;
  }
  return out;
}

// Coefficient of Y_{i,p} in prod A^{v}:  v_{i,p+1} + v_{i,p-1} - sum_{j~i} v_{j,p}.
// Setting it equal to u = exp(m) - exp(n) and marching p upward determines v
// level by level; v vanishes below the support of u, so the solution is unique.
std::optional<AMonomialVector> nakajima_leq(const Quiver& q, const LaurentMonomial& n,
                                            const LaurentMonomial& m,
                                            const NakajimaOptions& opts) {
  require_hat_i(q, n, "nakajima_leq n");
  require_hat_i(q, m, "nakajima_leq m");
  if (opts.require_dominant && (!n.is_dominant() || !m.is_dominant())) {
    throw InputError("nakajima_leq: both monomials must be dominant");
  }
  LaurentMonomial u = m * n.inverse();
  if (u.is_one()) return AMonomialVector{};

  const int rank = q.rank();
  const auto [u_lo, u_hi] = u.p_range();
  const int lo = u_lo - 1 - std::max(0, opts.extra_lower_levels);
  const int hi = u_hi + 1;
  // levels[p - lo][i] holds v_{i,p}; level lo (and below) is zero.
  const auto width = static_cast<std::size_t>(rank) + 1;
  std::vector<std::vector<long long>> levels(static_cast<std::size_t>(hi - lo + 1),
                                             std::vector<long long>(width, 0));
  auto v_at = [&](int i, int p) -> long long {
    if (p < lo) return 0;
    return levels[static_cast<std::size_t>(p - lo)][static_cast<std::size_t>(i)];
  };

  for (int p = lo; p < hi; ++p) {
    for (int i = 1; i <= rank; ++i) {
      if (!q.in_hat_i({i, p})) continue;
      long long next = checked_sub(u.exponent({i, p}), v_at(i, p - 1));
      for (int j : q.neighbors(i)) next = checked_add(next, v_at(j, p));
      if (next < 0) return std::nullopt;
      levels[static_cast<std::size_t>(p + 1 - lo)][static_cast<std::size_t>(i)] = next;
    }
  }
  // Two zero levels at u_hi and u_hi + 1 force zero forever after.
  for (int p = u_hi; p <= hi; ++p) {
    for (int i = 1; i <= rank; ++i) {
      if (v_at(i, p) != 0) return std::nullopt;
    }
  }
  AMonomialVector v;
  for (int p = lo; p <= hi; ++p) {
    for (int i = 1; i <= rank; ++i) {
      if (long long e = v_at(i, p); e != 0) v[{i, p}] = e;
    }
  }
  return v;
}

LaurentMonomial m_of_vw(const Quiver& q, const GradedDims& dims) {
  LaurentMonomial m;
  for (const auto& [at, d] : dims.w) {
    q.require_hat_i(at, "W grading");
    if (d < 0) throw InputError("W grading: negative dimension at " + to_string(at));
    m *= LaurentMonomial::y(at, d);
  }
  for (const auto& [label, d] : dims.v) {
    if (!q.in_hat_i_prime(label)) {
      throw InputError("V grading: " + to_string(label) + " is not in I-hat-prime");
    }
    if (d < 0) throw InputError("V grading: negative dimension at " + to_string(label));
  }
  return apply_a_inverse(q, m, dims.v);
}

}  // namespace mdeg
