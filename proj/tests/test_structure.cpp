#include <doctest.h>

#include "homrec/errors.hpp"
#include "homrec/fixtures.hpp"
#include "homrec/structure.hpp"
#include "oracle.hpp"

using namespace homrec;
namespace fx = homrec::fixtures;

namespace {

// Right-hand drawings of the path and cycle figures, thick = 1.
const Coloring kFigPathPhi(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}});
const Coloring kFigPathPsi(6, {{1, 2}, {3, 4}, {0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}});
const Coloring kFigCyclePhi = kFigPathPhi;
const Coloring kFigCyclePsi(6, {{1, 2}, {3, 4}, {0, 5}, {0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}});

}  // namespace

TEST_CASE("degree") {
  CHECK(degree(EdgeSet(4), 2) == 0);
  CHECK(degree(EdgeSet(4, {{0, 1}, {1, 2}}), 1) == 2);
  const auto [phi, psi] = fx::fig_homsum();
  CHECK(degree(ones(boolean_sum(phi, psi)), 0) == 2);
  CHECK(max_degree(EdgeSet(5, {{0, 1}, {0, 2}, {0, 3}})) == 3);
}

TEST_CASE("components") {
  const auto single = components(EdgeSet(3, {{0, 1}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].kind == ComponentKind::Path);
  CHECK(single[0].vertices == VertexSet{0, 1});

  const auto square = components(EdgeSet(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  REQUIRE(square.size() == 1);
  CHECK(square[0].kind == ComponentKind::EvenCycle);
  CHECK(square[0].vertices == VertexSet{0, 1, 2, 3});
  CHECK(square[0].edge_count == 4);

  const auto path = components(EdgeSet(6, {{3, 1}, {1, 4}, {4, 0}}));
  REQUIRE(path.size() == 1);
  CHECK(path[0].vertices == VertexSet{0, 4, 1, 3});

  CHECK(components(EdgeSet(5, {{0, 1}, {1, 2}, {0, 2}}))[0].kind == ComponentKind::OddCycle);
  CHECK(components(EdgeSet(5, {{0, 1}, {0, 2}, {0, 3}}))[0].kind == ComponentKind::Other);

  // the drawn cycle plus the critical pair {x1,x2}
  const EdgeSet d(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}});
  const auto two = components(d);
  REQUIRE(two.size() == 2);
  CHECK(two[0].kind == ComponentKind::EvenCycle);
  CHECK(two[0].vertices == VertexSet{0, 1, 2, 3});
  CHECK(two[1].kind == ComponentKind::Path);
  CHECK(two[1].vertices == VertexSet{4, 5});
}

TEST_CASE("claws") {
  const auto claw = find_claw(EdgeSet(4, {{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(claw);
  CHECK(claw->apex == 3);
  CHECK(VertexSet(claw->leaves, claw->leaves + 3) == VertexSet{0, 1, 2});
  CHECK_FALSE(find_claw(EdgeSet(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK_THROWS_AS(find_claw(EdgeSet(3)), Error);
}

TEST_CASE("hom color uniform") {
  CHECK(hom_color_uniform(Coloring(5)) == 0);
  const auto [phi, psi] = fx::fig_homsum();
  CHECK_FALSE(hom_color_uniform(boolean_sum(phi, psi)).has_value());
  CHECK(hom_color_uniform(indicator(EdgeSet(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}))) == 0);
  CHECK(hom_color_uniform(Coloring::constant(4, 1)) == 1);
}

TEST_CASE("pair generators reproduce the drawings") {
  // The drawn pairs come out with phase 1.
  CHECK(make_path_pair(6, 1, 1) == std::pair{kFigPathPhi, kFigPathPsi});
  CHECK(make_cycle_pair(6, 1, 1) == std::pair{kFigCyclePhi, kFigCyclePsi});
  // Phase 0 is the same pair with the roles of phi and psi exchanged.
  CHECK(make_path_pair(6, 1, 0) == std::pair{kFigPathPsi, kFigPathPhi});
  CHECK(make_cycle_pair(6, 1, 0) == std::pair{kFigCyclePsi, kFigCyclePhi});
}

TEST_CASE("pair generator small cases") {
  const auto [phi, psi] = make_path_pair(4, 0, 0);
  // {1,2} is the odd path edge; {0,3} is at distance 3 and gets 1-c.
  CHECK(phi == Coloring(4, {{1, 2}, {0, 3}}));
  CHECK(ones(boolean_sum(phi, psi)) == EdgeSet(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(oracle::same_hom_triples(phi, psi));
  CHECK_THROWS_AS(make_path_pair(3, 0, 0), Error);
  CHECK_THROWS_AS(make_cycle_pair(7, 0, 0), Error);
  CHECK_THROWS_AS(make_cycle_pair(4, 0, 0), Error);

  const auto [c0, c0psi] = make_cycle_pair(6, 1, 0);
  const auto [c1, c1psi] = make_cycle_pair(6, 1, 1);
  const EdgeSet differ = ones(boolean_sum(c0, c1));
  CHECK(differ == EdgeSet(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
}

TEST_CASE("generated pairs are H-equivalent by the brute-force oracle") {
  for (Vertex m = 4; m <= 12; ++m)
    for (int c = 0; c <= 1; ++c)
      for (int phase = 0; phase <= 1; ++phase) {
        const auto [phi, psi] = make_path_pair(m, c, phase);
        CHECK(oracle::same_hom_triples(phi, psi));
        if (m >= 6 && m % 2 == 0) {
          const auto [cphi, cpsi] = make_cycle_pair(m, c, phase);
          CHECK(oracle::same_hom_triples(cphi, cpsi));
          const auto comps = components(ones(boolean_sum(cphi, cpsi)));
          REQUIRE(comps.size() == 1);
          CHECK(comps[0].kind == ComponentKind::EvenCycle);
          CHECK(comps[0].vertices.size() == m);
        }
      }
}

TEST_CASE("parity lemmas") {
  CHECK(check_parity_lemmas(kFigPathPhi, kFigPathPsi).passed);
  CHECK(check_parity_lemmas(kFigCyclePhi, kFigCyclePsi).passed);
  const auto [phi, psi] = make_path_pair(10, 1, 0);
  const ParityReport report = check_parity_lemmas(phi, psi);
  CHECK(report.passed);
  CHECK(report.paths_checked > 0);
  CHECK_THROWS_AS(check_parity_lemmas(Coloring(5), Coloring(5, {{0, 1}})), Error);
}

TEST_CASE("hom partition") {
  {
    const auto [phi, psi] = make_path_pair(6, 1, 0);
    const auto part = hom_partition(phi, components(ones(boolean_sum(phi, psi)))[0]);
    CHECK(part.even_class == VertexSet{0, 2, 4});
    CHECK(part.odd_class == VertexSet{1, 3, 5});
    CHECK(part.color == 1);
  }
  {
    const auto [phi, psi] = make_cycle_pair(6, 1, 0);
    const auto part = hom_partition(phi, components(ones(boolean_sum(phi, psi)))[0]);
    CHECK(part.even_class == VertexSet{0, 2, 4});
    CHECK(part.odd_class == VertexSet{1, 3, 5});
    CHECK(part.color == 1);
  }
  {
    const auto [phi, psi] = make_path_pair(8, 0, 1);
    const auto part = hom_partition(phi, components(ones(boolean_sum(phi, psi)))[0]);
    CHECK(part.even_class.size() == 4);
    CHECK(part.odd_class.size() == 4);
    CHECK(part.color == 0);
    const auto sets = hom_sets(restrict(phi, all_vertices(8)));
    CHECK(std::find(sets.begin(), sets.end(), HomSet{part.even_class, 0}) != sets.end());
  }
  const auto [phi, psi] = make_path_pair(4, 0, 0);
  CHECK_THROWS_AS(hom_partition(phi, components(ones(boolean_sum(phi, psi)))[0]), Error);
  CHECK_THROWS_AS(hom_partition(Coloring(6), Component{{0, 1, 2, 3, 4, 5}, ComponentKind::Path, 5}), Error);
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(Coloring(3, {{0, 1}}), EdgeSet(3, {{0, 1}}));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("penwidth=3") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}
