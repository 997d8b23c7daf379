#include <doctest.h>

#include <functional>
#include <set>

#include "mdeg/quiver.hpp"
#include "test_util.hpp"

using namespace mdeg;

TEST_CASE("build accepts a height function obeying the arrow rule") {
  Quiver q = Quiver::build({DynkinType::A, 2, {{1, 2}}, std::map<int, int>{{1, 1}, {2, 0}}, {}, 0});
  CHECK(q.height(1) == 1);
  CHECK(q.height(2) == 0);
}

TEST_CASE("build rejects a height function violating the arrow rule") {
  CHECK_THROWS_AS(Quiver::build({DynkinType::A, 2, {{1, 2}}, std::map<int, int>{{1, 0}, {2, 0}}, {}, 0}),
                  InputError);
}

TEST_CASE("build rejects malformed diagrams") {
  // Wrong edge count.
  CHECK_THROWS_AS(Quiver::build({DynkinType::A, 3, {{1, 2}}, {}, {}, 0}), InputError);
  // Duplicate edge (n-1 edges but disconnected).
  CHECK_THROWS_AS(Quiver::build({DynkinType::A, 3, {{1, 2}, {2, 1}}, {}, {}, 0}), InputError);
  // Cycle + isolated vertex.
  CHECK_THROWS_AS(Quiver::build({DynkinType::D, 4, {{1, 2}, {2, 3}, {3, 1}}, {}, {}, 0}), InputError);
  // Type A must be labelled linearly.
  CHECK_THROWS_AS(Quiver::build({DynkinType::A, 3, {{1, 3}, {3, 2}}, {}, {}, 0}), InputError);
  // A path is not D4.
  CHECK_THROWS_AS(Quiver::build({DynkinType::D, 4, {{1, 2}, {2, 3}, {3, 4}}, {}, {}, 0}), InputError);
  // D5 shape declared as E6 rank mismatch.
  CHECK_THROWS_AS(Quiver::build({DynkinType::E, 5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}, {}, {}, 0}), InputError);
  CHECK_THROWS_AS(Quiver::build({DynkinType::A, 2, {{1, 5}}, {}, {}, 0}), InputError);
}

TEST_CASE("height synthesis propagates from the chosen root") {
  auto h = synthesize_height(DynkinType::A, 3, {{1, 2}, {3, 2}}, 2, 0);
  CHECK(h == std::map<int, int>{{1, 1}, {2, 0}, {3, 1}});
  // Default root is vertex 1 with value 0.
  Quiver q = Quiver::build({DynkinType::A, 3, {{1, 2}, {3, 2}}, {}, {}, 0});
  CHECK(q.height(1) == 0);
  CHECK(q.height(2) == -1);
  CHECK(q.height(3) == 0);
}

TEST_CASE("every sample quiver satisfies the arrow rule and the parity rule") {
  for (const auto& q : test::sample_quivers()) {
    for (auto [s, t] : q.arrows()) CHECK(q.height(s) - q.height(t) == 1);
    for (const auto& v : q.hat_i_window(-6, 6)) {
      for (int j : q.neighbors(v.i)) CHECK(q.in_hat_i({j, v.p + 1}));
      CHECK_FALSE(q.in_hat_i_prime(v));
    }
  }
}

TEST_CASE("translate") {
  CHECK(translate({2, 0}, 1) == Vertex{2, -2});
  CHECK(translate({1, 5}, 0) == Vertex{1, 5});
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      Vertex x{2, 4};
      CHECK(translate(x, a + b) == translate(translate(x, a), b));
      CHECK(translate(translate(x, a), -a) == x);
    }
  }
}

TEST_CASE("mesh predecessors follow diagram adjacency") {
  Quiver a3 = test::a3();
  CHECK(mesh_predecessors(a3, {2, 0}) == std::vector<Vertex>{{1, -1}, {3, -1}});
  CHECK(mesh_predecessors(a3, {1, 1}) == std::vector<Vertex>{{2, 0}});
  CHECK(mesh_predecessors(test::a2(), {1, 1}) == std::vector<Vertex>{{2, 0}});
  CHECK(mesh_predecessors(a3, {0, 0}).empty());
}

namespace {

// Brute-force path count j -> i by walking arrows forward from j.
long long paths(const Quiver& q, int from, int to) {
  if (from == to) return 1;
  long long n = 0;
  for (auto [s, t] : q.arrows()) {
    if (s == from) n += paths(q, t, to);
  }
  return n;
}

}  // namespace

TEST_CASE("injective slice carries path counts") {
  for (const auto& q : test::sample_quivers()) {
    for (int i = 1; i <= q.rank(); ++i) {
      K0Class cls = k0_class(q, {i, q.height(i)});
      for (int j = 1; j <= q.rank(); ++j) {
        CHECK(cls.coords[static_cast<std::size_t>(j - 1)] == paths(q, j, i));
      }
    }
  }
}

TEST_CASE("k0 classes in A3") {
  Quiver q = test::a3();
  CHECK(k0_class(q, {2, 0}) == K0Class({1, 1, 1}));
  CHECK(k0_class(q, {2, -2}) == K0Class({0, 1, 0}));
  CHECK(k0_class(q, {3, -1}) == K0Class({1, 1, 0}));
  CHECK(k0_class(q, {1, -1}) == K0Class({0, 1, 1}));
  CHECK(k0_class(q, {2, 2}) == K0Class({0, -1, 0}));
  CHECK(k0_class(q, {0, 3}).is_zero());
  CHECK(k0_class(q, {4, 3}).is_zero());
  CHECK_THROWS_AS(k0_class(q, {2, 1}), InputError);
}

TEST_CASE("k0 classes in A2") {
  Quiver q = test::a2();
  // V(1,1) = I_1 = S_1, V(2,0) = I_2 = P_1, V(2,2) = S_1[1]... via the mesh at (1,2).
  CHECK(k0_class(q, {1, 1}) == K0Class({1, 0}));
  CHECK(k0_class(q, {2, 0}) == K0Class({1, 1}));
  CHECK(k0_class(q, {1, 3}) + k0_class(q, {1, 1}) == k0_class(q, {2, 2}));
}

TEST_CASE("mesh additivity of k0 classes") {
  for (const auto& q : test::sample_quivers()) {
    for (const auto& x : q.hat_i_window(-12, 12)) {
      K0Class middles(q.rank());
      for (int j : q.neighbors(x.i)) middles += k0_class(q, {j, x.p + 1});
      CHECK(k0_class(q, x) + k0_class(q, {x.i, x.p + 2}) == middles);
    }
  }
}

TEST_CASE("module window holds exactly the positive roots (Gabriel)") {
  for (const auto& q : test::sample_quivers()) {
    std::set<std::vector<long long>> roots;
    int count = 0;
    for (const auto& x : q.hat_i_window(-40, 40)) {
      // One period of [2] below the injective slice holds mod kQ exactly.
      if (x.p > q.height(x.i) || x.p <= q.height(x.i) - 2 * q.coxeter_number()) continue;
      K0Class c = k0_class(q, x);
      if (!c.is_nonnegative() || c.is_zero()) continue;
      ++count;
      roots.insert(c.coords);
      CHECK(euler_form(q, c, c) == 1);  // Tits form
    }
    CAPTURE(q.name());
    CHECK(count == test::positive_root_count(q));
    CHECK(static_cast<int>(roots.size()) == count);
  }
}

TEST_CASE("shift by the Coxeter number negates the class") {
  Quiver a3 = test::a3();
  // V(i,p)[1] = V(n+1-i, p+n+1) in type A.
  for (const auto& x : a3.hat_i_window(-4, 4)) {
    CHECK(k0_class(a3, {4 - x.i, x.p + 4}) == K0Class(3) - k0_class(a3, x));
  }
}
