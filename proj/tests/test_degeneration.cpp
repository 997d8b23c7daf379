#include <doctest.h>

#include "invariants.hpp"
#include "mdeg/degeneration.hpp"
#include "test_util.hpp"

using namespace mdeg;

namespace {

const DerivedObject kTop{{2, -2}, {2, 0}, {2, 2}};        // S2 + I2 + S2[1]
const DerivedObject kStep1{{1, -1}, {3, -1}, {2, 2}};     // P1 + P3 + S2[1]
const DerivedObject kStep2{{3, -1}, {3, 1}};              // P1 + S3
const DerivedObject kI2{{2, 0}};

}  // namespace

TEST_CASE("fusion_moves examples") {
  CHECK(fusion_moves(test::a2(), DerivedObject{{1, 1}}).empty());

  auto mesh = fusion_moves(test::a2(), DerivedObject{{1, 1}, {1, 3}});
  REQUIRE(mesh.size() == 1);
  CHECK(mesh[0].result == DerivedObject{{2, 2}});

  Quiver a3 = test::a3();
  auto moves = fusion_moves(a3, kTop);
  REQUIRE(moves.size() == 3);
  CHECK(moves[0].y1 == Vertex{2, -2});
  CHECK(moves[0].y2 == Vertex{2, 0});
  CHECK(moves[0].result == DerivedObject{{1, -1}, {3, -1}, {2, 2}});
  CHECK(moves[1].y1 == Vertex{2, -2});
  CHECK(moves[1].y2 == Vertex{2, 2});
  CHECK(moves[1].result == kI2);
  CHECK(moves[1].parallelogram.a == 2);
  CHECK(moves[2].y1 == Vertex{2, 0});
  CHECK(moves[2].y2 == Vertex{2, 2});
  CHECK(moves[2].result == DerivedObject{{2, -2}, {1, 1}, {3, 1}});
  for (const auto& mv : moves) CHECK(test::conservation_failure(a3, kTop, mv).empty());
}

TEST_CASE("repeated summands fuse with themselves only if Ext allows it") {
  // Ext^1(V(x), V(x)) = 0, so a doubled summand alone produces no move.
  CHECK(fusion_moves(test::a3(), DerivedObject{{2, 0}, {2, 0}}).empty());
  auto moves = fusion_moves(test::a1(), DerivedObject{{1, 0}, {1, 0}, {1, 2}});
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].result == DerivedObject{{1, 0}});
}

TEST_CASE("deg_set sizes") {
  auto a1 = deg_set(test::a1(), DerivedObject{{1, 0}, {1, 2}});
  CHECK(a1.size() == 2);
  CHECK(a1.covers().size() == 1);
  CHECK(a1.contains(DerivedObject{}));

  auto a2 = deg_set(test::a2(), DerivedObject{{1, 1}, {1, 3}});
  CHECK(a2.size() == 2);
  CHECK(a2.covers().size() == 1);
  CHECK(a2.contains(DerivedObject{{2, 2}}));

  auto single = deg_set(test::a3(), kI2);
  CHECK(single.size() == 1);
  CHECK(single.covers().empty());
}

TEST_CASE("the annihilation example in A3") {
  Quiver a3 = test::a3();
  DegPoset d = deg_set(a3, kTop);
  CHECK(d.top() == kTop);
  for (const auto& x : {kStep1, kStep2, kI2}) CHECK(d.contains(x));

  auto idx = [&](const DerivedObject& x) { return *d.index_of(x); };
  CHECK(d.less(idx(kI2), idx(kStep2)));
  CHECK(d.less(idx(kStep2), idx(kStep1)));
  CHECK(d.less(idx(kStep1), idx(kTop)));

  auto is_cover = [&](const DerivedObject& lo, const DerivedObject& hi) {
    for (const auto& e : d.covers()) {
      if (e.lower == idx(lo) && e.upper == idx(hi)) return true;
    }
    return false;
  };
  CHECK(is_cover(kI2, kStep2));
  CHECK(is_cover(kStep2, kStep1));
  CHECK(is_cover(kStep1, kTop));
  CHECK_FALSE(is_cover(kI2, kTop));

  auto direct = leq_delta(a3, kI2, kTop);
  REQUIRE(direct);
  REQUIRE(direct->size() == 1);
  CHECK(direct->front().y1 == Vertex{2, -2});
  CHECK(direct->front().y2 == Vertex{2, 2});

  auto refined = leq_delta(a3, kI2, kTop, true);
  REQUIRE(refined);
  CHECK(refined->size() == 3);
  CHECK(test::chain_failure(a3, kI2, kTop, *refined).empty());

  for (const auto& c : minimal_covers(a3, kTop)) CHECK_FALSE(c.lower == kI2);
  CHECK(minimal_covers(a3, kTop).size() == 2);
}

TEST_CASE("leq_delta edge cases") {
  Quiver a2 = test::a2();
  auto self = leq_delta(a2, DerivedObject{{1, 1}}, DerivedObject{{1, 1}});
  REQUIRE(self);
  CHECK(self->empty());
  CHECK_FALSE(leq_delta(a2, DerivedObject{{2, 2}}, DerivedObject{{1, 1}}));
  CHECK(minimal_covers(a2, DerivedObject{{1, 1}}).empty());
  auto one = minimal_covers(a2, DerivedObject{{1, 1}, {1, 3}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].lower == DerivedObject{{2, 2}});
}

TEST_CASE("the engine refuses D and E") {
  CHECK_THROWS_AS(deg_set(test::d4(), DerivedObject{{1, 0}}), UnsupportedType);
  CHECK_THROWS_AS(fusion_moves(test::e6(), DerivedObject{{1, 0}}), UnsupportedType);
  CHECK_THROWS_AS(verify_theorem(test::d4(), 0, 2, 2), UnsupportedType);
}

TEST_CASE("poset invariants on random objects") {
  std::mt19937 rng(5);
  for (const auto& q : {test::a2(), test::a3(), test::a4()}) {
    for (int trial = 0; trial < 25; ++trial) {
      DerivedObject y = test::random_object(q, rng, -3, 3, 2 + trial % 3);
      DegPoset d = deg_set(q, y);
      CAPTURE(y.to_string());
      CHECK(test::order_axioms_failure(d).empty());
      for (const auto& e : d.fusion_edges()) {
        CHECK(test::conservation_failure(q, d.elements()[e.upper], e.move).empty());
      }
      for (auto [lo, hi] : d.relation()) {
        CHECK(test::monotonicity_failure(d.elements()[lo], d.elements()[hi]).empty());
      }
      for (const auto& e : d.covers()) {
        CHECK(test::slicing_failure(q, d.elements()[e.lower], d.elements()[e.upper]).empty());
      }
      for (const auto& x : d.elements()) {
        auto chain = d.chain_to(x);
        auto covers = d.cover_chain_to(x);
        REQUIRE(chain);
        REQUIRE(covers);
        CHECK(test::chain_failure(q, x, y, *chain).empty());
        CHECK(test::chain_failure(q, x, y, *covers).empty());
        CHECK(covers->size() >= chain->size());
      }
    }
  }
}

TEST_CASE("deg_set output is canonical") {
  Quiver a3 = test::a3();
  DegPoset d = deg_set(a3, kTop);
  for (std::size_t k = 1; k < d.size(); ++k) CHECK(d.elements()[k - 1] < d.elements()[k]);
  DegPoset again = deg_set(a3, kTop);
  CHECK(again.elements() == d.elements());
  CHECK(again.relation() == d.relation());
}

TEST_CASE("dominant_monomials counts") {
  // Multisets of size <= k from N vertices: C(N + k, k).
  Quiver a2 = test::a2();
  auto ms = dominant_monomials(a2, 0, 8, 3);
  CHECK(ms.size() == 220);  // N = 9
  CHECK(ms.front().is_one());
  CHECK(dominant_monomials(test::a1(), 0, 6, 2).size() == 15);  // N = 4
}

TEST_CASE("verify_theorem on small windows") {
  auto r1 = verify_theorem(test::a1(), 0, 6, 2);
  CHECK(r1.ok());
  CHECK(r1.pairs == r1.monomials * r1.monomials);
  auto r2 = verify_theorem(test::a2(), 0, 4, 2);
  CHECK(r2.ok());
  CHECK(r2.comparable_pairs > r2.monomials);
}

TEST_CASE("verify_pairwise_lemma examples") {
  auto r = verify_pairwise_lemma(test::a3(), -2, 2);
  CHECK(r.ok());
  CHECK(r.triangles > 0);
  auto r2 = verify_pairwise_lemma(test::a2(), 0, 4);
  CHECK(r2.ok());
}
