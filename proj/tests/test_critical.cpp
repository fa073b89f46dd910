#include <doctest.h>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/fixtures.hpp"
#include "homrec/srcheck.hpp"
#include "homrec/suites.hpp"
#include "oracle.hpp"

using namespace homrec;
namespace fx = homrec::fixtures;

TEST_CASE("B-sets") {
  CHECK(b_set(fx::partition(6), {0, 1}).members.empty());
  // phi{0,3} = phi{1,3} = 1 is the only agreement
  CHECK(b_set(fx::fig_no_critical_pair(), {0, 1}).members == VertexSet{3});
  const auto b = b_set(alpha_coloring(12), {4, 7}).members;
  CHECK(std::binary_search(b.begin(), b.end(), 1u));
  CHECK(std::binary_search(b.begin(), b.end(), 2u));
  CHECK_THROWS_AS(b_set(Coloring(5), {2, 2}), Error);
  CHECK_THROWS_AS(b_set(Coloring(5), {2, 7}), Error);
}

TEST_CASE("critical pairs") {
  CHECK(is_critical_pair(fx::fig_critical_pair(), {0, 1}));
  CHECK(is_critical_pair(fx::fig_critical_cycle(), {4, 5}));
  CHECK(find_critical_pairs(fx::fig_no_critical_pair()).empty());

  const auto part = find_critical_pairs(fx::partition(6));
  CHECK(part.size() == 9);
  for (const Pair& p : part) CHECK((p.lo + p.hi) % 2 == 1);

  for (Vertex n = 5; n <= 12; ++n) {
    const auto pairs = find_critical_pairs(alpha_coloring(n));
    CHECK(std::find(pairs.begin(), pairs.end(), Pair{0, n - 1}) != pairs.end());
  }
  CHECK(find_critical_pairs(Coloring(6)).empty());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Coloring phi = fx::random(6, 0.5, seed);
    CHECK(find_critical_pairs(phi).size() == oracle::critical_pair_count(phi));
  }
}

TEST_CASE("critical cycles on the drawings") {
  const auto cc = is_critical_cycle(fx::fig_critical_cycle(), {0, 1, 2, 3});
  REQUIRE(cc);
  CHECK(cc->orientation == Orientation::Primary);
  CHECK(cc->edges == EdgeSet(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));

  const auto nc = is_critical_cycle(fx::fig_no_critical_pair(), {0, 1, 2, 3});
  REQUIRE(nc);
  CHECK(nc->orientation == Orientation::Alternate);

  CHECK_FALSE(is_critical_cycle(Coloring(6), {0, 1, 2, 3}));
  CHECK_THROWS_AS(is_critical_cycle(Coloring(6), {0, 1, 1, 3}), Error);
  CHECK_THROWS_AS(is_critical_cycle(Coloring(4), {0, 1, 2, 3}), Error);
  CHECK_NOTHROW(is_critical_cycle(Coloring(4), {0, 1, 2, 3}, {true}));

  const auto two = find_critical_cycles(fx::fig_two_cycles());
  REQUIRE(two.size() == 2);
  CHECK(two[0].quad == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK(two[1].quad == std::array<Vertex, 4>{4, 5, 6, 7});

  CHECK(find_critical_cycles(alpha_coloring(20)).empty());
  CHECK(find_critical_cycles(fx::partition(6)).empty());
}

TEST_CASE("critical cycle witnesses satisfy their defining conditions") {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const Coloring f = fx::random(6, 0.5, seed);
    for (const auto& w : find_critical_cycles(f)) {
      const auto [a, b, c, d] = w.quad;
      CHECK(a < b);
      CHECK(a < c);
      CHECK(a < d);
      CHECK(b < d);
      if (w.orientation == Orientation::Primary) {
        CHECK(f(a, c) == f(b, c));
        CHECK(f(b, c) == 1 - f(a, b));
        CHECK(f(b, d) == f(c, d));
        CHECK(f(c, d) == 1 - f(b, c));
        CHECK(f(c, a) == f(d, a));
        CHECK(f(d, a) == 1 - f(c, d));
        CHECK(f(d, b) == f(a, b));
      } else {
        CHECK(f(b, d) == f(a, d));
        CHECK(f(a, d) == 1 - f(a, b));
        CHECK(f(a, c) == f(d, c));
        CHECK(f(d, c) == 1 - f(a, d));
        CHECK(f(d, b) == f(c, b));
        CHECK(f(c, b) == 1 - f(d, c));
      }
      for (Vertex z = 0; z < 6; ++z) {
        if (z == a || z == b || z == c || z == d) continue;
        for (int i = 0; i < 4; ++i) CHECK(f(w.quad[i], z) != f(w.quad[(i + 1) % 4], z));
      }
      CHECK(oracle::same_hom_triples(f, flip_reconstruction(f, w.edges)));
    }
  }
}

TEST_CASE("orientations are mutually exclusive on a fixed arrangement") {
  // Exhaustive over every coloring of the six pairs of a quad: with
  // allow_vacuous the external condition is empty, so the witness reports
  // Primary whenever it holds; check Alternate never holds alongside it.
  for (unsigned m = 0; m < 64; ++m) {
    PairBits bits(4);
    bits.words()[0] = m;
    const Coloring f = Coloring::from_bits(bits);
    const bool primary = f(0, 2) == f(1, 2) && f(1, 2) == 1 - f(0, 1) && f(1, 3) == f(2, 3) &&
                         f(2, 3) == 1 - f(1, 2) && f(2, 0) == f(3, 0) && f(3, 0) == 1 - f(2, 3);
    const bool alternate = f(1, 3) == f(0, 3) && f(0, 3) == 1 - f(0, 1) && f(0, 2) == f(3, 2) &&
                           f(3, 2) == 1 - f(0, 3) && f(3, 1) == f(2, 1) && f(2, 1) == 1 - f(3, 2);
    CHECK_FALSE((primary && alternate));
    const auto w = is_critical_cycle(f, {0, 1, 2, 3}, {true});
    CHECK(w.has_value() == (primary || alternate));
  }
}

TEST_CASE("flip reconstruction") {
  const Coloring part = fx::partition(6);
  CHECK(h_equivalent(part, flip_reconstruction(part, EdgeSet(6, {{0, 1}}))));
  const Coloring nc = fx::fig_no_critical_pair();
  const Coloring psi = flip_reconstruction(nc, EdgeSet(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(h_equivalent(nc, psi));
  CHECK(psi != nc);
  CHECK(psi != complement(nc));
  CHECK(flip_reconstruction(nc, EdgeSet::all_pairs(6)) == complement(nc));
  CHECK_THROWS_AS(flip_reconstruction(nc, EdgeSet(6)), Error);
  CHECK_THROWS_AS(flip_reconstruction(nc, EdgeSet(5, {{0, 1}})), Error);
}

TEST_CASE("cycle scan is independent of the thread count") {
  const auto colorings = sweep_colorings(8, false, 40, 5);
  for (const Coloring& phi : colorings) {
    const auto one = find_critical_cycles(phi, {}, 1);
    const auto many = find_critical_cycles(phi, {}, 8);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].quad == many[i].quad);
  }
}
