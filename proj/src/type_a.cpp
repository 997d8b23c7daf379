#include "mdeg/type_a.hpp"

#include <string>

namespace mdeg {

const char* to_string(ParallelogramKind k) { return k == ParallelogramKind::C1 ? "C1" : "C2"; }

void require_type_a(const Quiver& q, const char* what) {
  if (q.type() != DynkinType::A) {
    throw UnsupportedType(std::string(what) + ": only implemented for type A, got " + q.name());
  }
}

std::optional<Parallelogram> make_parallelogram(const Quiver& q, const Vertex& start, int a, int b,
                                                ParallelogramKind kind) {
  require_type_a(q, "parallelogram");
  if (!(a >= b && b >= 1)) return std::nullopt;
  const int n = q.rank();
  auto in_strip = [n](int i) { return i >= 0 && i <= n + 1; };
  const int i = start.i;
  const int p = start.p;
  Parallelogram par;
  par.start = start;
  par.a = a;
  par.b = b;
  par.kind = kind;
  if (kind == ParallelogramKind::C1) {
    if (!in_strip(i - b) || !in_strip(i + a)) return std::nullopt;
    par.middles = {{i - b, p + b}, {i + a, p + a}};
    par.end = {i + a - b, p + a + b};
  } else {
    if (!in_strip(i + b) || !in_strip(i - a)) return std::nullopt;
    par.middles = {{i + b, p + b}, {i - a, p + a}};
    par.end = {i + b - a, p + a + b};
  }
  if (!q.in_hat_i(par.start) || !q.in_hat_i(par.end)) return std::nullopt;
  return par;
}

std::optional<Parallelogram> parallelogram_solve(const Quiver& q, const Vertex& y1,
                                                 const Vertex& y2) {
  require_type_a(q, "parallelogram_solve");
  if (!q.in_hat_i(y1) || !q.in_hat_i(y2)) return std::nullopt;
  const int dp = y2.p - y1.p;
  const int di = y2.i - y1.i;
  if ((dp + di) % 2 != 0) return std::nullopt;
  // C1: end = (i + a - b, p + a + b);  C2: end = (i + b - a, p + a + b).
  if (auto c1 = make_parallelogram(q, y1, (dp + di) / 2, (dp - di) / 2, ParallelogramKind::C1)) {
    return c1;
  }
  return make_parallelogram(q, y1, (dp - di) / 2, (dp + di) / 2, ParallelogramKind::C2);
}

DerivedObject middle_object(const Quiver& q, const Parallelogram& par) {
  DerivedObject e;
  for (const auto& m : {par.middles.first, par.middles.second}) {
    if (!q.is_sentinel(m)) e.add(m);
  }
  return e;
}

Vertex shift(const Quiver& q, const Vertex& x) {
  require_type_a(q, "shift");
  const int n = q.rank();
  return {n + 1 - x.i, x.p + n + 1};
}

AMonomialVector formula_a_monomial(const Parallelogram& par) {
  AMonomialVector v;
  const int sign = par.kind == ParallelogramKind::C1 ? 1 : -1;
  for (int r = 0; r < par.a; ++r) {
    for (int l = 0; l < par.b; ++l) {
      v[{par.start.i + sign * (r - l), par.start.p + r + l + 1}] += 1;
    }
  }
  return v;
}

}  // namespace mdeg
