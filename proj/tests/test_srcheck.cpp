#include <doctest.h>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/fixtures.hpp"
#include "homrec/srcheck.hpp"
#include "oracle.hpp"

using namespace homrec;
namespace fx = homrec::fixtures;

namespace {

// The drawn restriction to {0..5}, thick = 1.
const Coloring kFigAlpha(6, {{1, 2}, {2, 3}, {0, 3}, {0, 5}, {4, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}});

}  // namespace

TEST_CASE("colex subsets") {
  const auto s = subsets_colex(5, 3);
  REQUIRE(s.size() == 10);
  CHECK(s.front() == VertexSet{0, 1, 2});
  CHECK(s[1] == VertexSet{0, 1, 3});
  CHECK(s[3] == VertexSet{1, 2, 3});
  CHECK(s.back() == VertexSet{2, 3, 4});
  CHECK(subsets_colex(3, 4).empty());
}

TEST_CASE("property E_i witnesses") {
  const VertexSet f01{0, 1};
  const auto z = e_property_witness(Coloring::constant(6, 1), f01, 1);
  REQUIRE(z);
  CHECK(*z >= 2);
  const VertexSet f123{1, 2, 3};
  CHECK_FALSE(e_property_witness(alpha_coloring(20), f123, 0));
  CHECK_FALSE(e_property_witness(alpha_coloring(20), f123, 1));
  const VertexSet f02{0, 2};
  CHECK(e_property_witness(fx::partition(6), f02, 1) == 4u);
  CHECK_FALSE(e_property_witness(Coloring(4), all_vertices(4), 0));
  CHECK_THROWS_AS(e_property_witness(Coloring(4), VertexSet{}, 0), Error);
  CHECK_THROWS_AS(e_property_witness(Coloring(4), VertexSet{1, 1}, 0), Error);
}

TEST_CASE("finite strong reconstructibility") {
  const SRReport zero = is_SR_finite(Coloring(7), 5);
  CHECK(zero.holds);
  CHECK(zero.per_F.size() == 35);
  // a monochromatic 4-set is already in R, so G = F
  for (const auto& [F, G] : zero.per_F) CHECK(F == G);

  const SRReport alpha = is_SR_finite(alpha_coloring(10), 7);
  CHECK_FALSE(alpha.holds);
  REQUIRE(alpha.failing_F);

  // Mixed-parity 4-sets keep a cross critical pair in every superset.
  const SRReport part = is_SR_finite(fx::partition(8), 6);
  CHECK_FALSE(part.holds);
  CHECK(part.failing_F == VertexSet{0, 1, 2, 3});
  for (const auto& [F, G] : part.per_F) {
    const bool same_parity = std::all_of(F.begin(), F.end(), [&](Vertex v) { return v % 2 == F[0] % 2; });
    CHECK(same_parity);
  }

  SearchBudget budget;
  CHECK_THROWS_AS(is_SR_finite(Coloring(9), 8, budget), Error);
  CHECK_THROWS_AS(is_SR_finite(Coloring(3), 5), Error);
}

TEST_CASE("E_1 everywhere gives SR on a nearly constant coloring") {
  // All ones except a matching of zeros: every F of size <= 4 has a
  // 1-colored outside witness, and SR holds with those vertex sets.
  const Coloring phi = complement(indicator(EdgeSet(9, {{0, 1}, {2, 3}})));
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& F : subsets_colex(9, k)) CHECK(e_property_witness(phi, F, 1).has_value());
  CHECK(is_SR_finite(phi, 5).holds);
}

TEST_CASE("seven-set condition") {
  const auto part = theorem63_condition_c(fx::partition(8));
  REQUIRE(part);
  CHECK(part->F == VertexSet{0, 1, 2, 3});
  CHECK(part->D == EdgeSet(8, {{0, 1}}));
  CHECK(part->checked_Gs == 4);

  // {0,9} is critical in alpha(10), hence in every restriction containing it.
  const auto alpha = theorem63_condition_c(alpha_coloring(10));
  REQUIRE(alpha);
  CHECK(alpha->D == EdgeSet(10, {{0, 9}}));

  CHECK_FALSE(theorem63_condition_c(Coloring(8)));
  CHECK_THROWS_AS(theorem63_condition_c(Coloring(6)), Error);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Coloring phi = fx::random(7 + static_cast<Vertex>(seed % 3), 0.3, seed);
    for (const auto& w : theorem63_witnesses(phi)) {
      CHECK_FALSE(w.D.empty());
      CHECK(oracle::same_hom_triples(phi, flip_reconstruction(phi, w.D)));
    }
  }
}

TEST_CASE("alpha coloring") {
  const Coloring a = alpha_coloring(6);
  CHECK(a(0, 1) == 1);
  CHECK(a(0, 2) == 1);
  CHECK(a(1, 2) == 0);
  CHECK(a(0, 3) == 0);
  CHECK(a(0, 4) == 1);
  CHECK(a(0, 5) == 0);
  // the drawing uses the other seed bit
  CHECK(alpha_coloring(6, 0) == kFigAlpha);
  CHECK(alpha_coloring(6, 1) == complement(kFigAlpha));
  for (Vertex n = 3; n <= 20; ++n)
    for (Vertex m = 3; m <= n; ++m) CHECK(restrict(alpha_coloring(n), all_vertices(m)) == alpha_coloring(m));
  CHECK_THROWS_AS(alpha_coloring(2), Error);
  CHECK_THROWS_AS(alpha_coloring(5, 2), Error);
}

TEST_CASE("verify_alpha") {
  const AlphaCheck check = verify_alpha(20);
  CHECK(check.passed);
  CHECK(check.log.size() == 16 * 5);
  CHECK(check.log.front() == "PASS n=5 (a)");
  CHECK_THROWS_AS(verify_alpha(7), Error);
}
