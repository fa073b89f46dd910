#include <doctest.h>

#include <random>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/fixtures.hpp"
#include "homrec/reconstruct.hpp"
#include "homrec/srcheck.hpp"
#include "oracle.hpp"

using namespace homrec;
namespace fx = homrec::fixtures;

namespace {

const EdgeSet kSquare(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

std::vector<std::uint64_t> masks(const std::vector<ReconstructionWitness>& ws) {
  std::vector<std::uint64_t> out;
  for (const auto& w : ws) out.push_back(to_mask(w.difference));
  return out;
}

}  // namespace

TEST_CASE("local validity criterion") {
  const Coloring phi = fx::random(6, 0.5, 1);
  CHECK(is_valid_difference(phi, EdgeSet(6)));
  CHECK(is_valid_difference(phi, EdgeSet::all_pairs(6)));
  const auto [a, b] = fx::fig_homsum();
  enum : Vertex { va, vb, vc, vd, ve };
  CHECK(is_valid_difference(a, EdgeSet(5, {{va, ve}, {ve, vd}, {vd, va}, {vc, vd}, {vb, ve}})));
  CHECK_THROWS_AS(is_valid_difference(phi, EdgeSet(5)), Error);
}

TEST_CASE("local criterion agrees with the brute-force oracle") {
  std::mt19937_64 rng(7);
  for (Vertex n = 3; n <= 9; ++n)
    for (int i = 0; i < 400; ++i) {
      const Coloring phi = fx::random(n, 0.5, rng());
      const std::uint64_t m = rng() & ((std::uint64_t{1} << pair_count(n)) - 1);
      CHECK(is_valid_difference(phi, from_mask(n, m)) == oracle::same_hom_triples(phi, oracle::flip(phi, m)));
    }
}

TEST_CASE("validity is complement and flip symmetric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Coloring phi = fx::random(6, 0.5, rng());
    const EdgeSet d = from_mask(6, rng() & 0x7fff);
    const bool v = is_valid_difference(phi, d);
    CHECK(is_valid_difference(complement(phi), d) == v);
    CHECK(is_valid_difference(boolean_sum(phi, indicator(d)), d) == v);
    CHECK(is_valid_difference(phi, complement(d)) == v);
  }
}

TEST_CASE("search engine matches brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 4 + static_cast<Vertex>(seed % 3);
    const Coloring phi = fx::random(n, 0.5, seed);
    const auto expected = oracle::valid_masks(phi);
    std::vector<std::uint64_t> sorted = expected;
    std::sort(sorted.begin(), sorted.end(), size_colex_less);
    CHECK(masks(enumerate_reconstructions(phi)) == sorted);
  }
}

TEST_CASE("enumerate reconstructions") {
  CHECK(enumerate_reconstructions(Coloring(5)).empty());
  const auto part = enumerate_reconstructions(fx::partition(6), 1);
  CHECK(part.size() == 9);
  const auto nc = enumerate_reconstructions(fx::fig_no_critical_pair(), 4);
  REQUIRE(nc.size() == 1);
  CHECK(nc[0].difference == kSquare);
  CHECK(nc[0].components.size() == 1);
  CHECK_FALSE(nc[0].trivial);
  CHECK(enumerate_reconstructions(fx::fig_no_critical_pair(), 3).empty());
}

TEST_CASE("membership in R") {
  CHECK(in_R(Coloring(5)).verdict == Verdict::InR);
  CHECK_FALSE(in_R(Coloring(5)).witness);
  for (Vertex n = 5; n <= 12; ++n) {
    const RMembership m = in_R(alpha_coloring(n));
    CHECK(m.verdict == Verdict::NotInR);
    REQUIRE(m.witness);
    CHECK(m.witness->difference == EdgeSet(n, {{0, n - 1}}));
  }
  const auto [phi, psi] = fx::fig_homsum();
  const RMembership hs = in_R(phi);
  CHECK(hs.verdict == Verdict::NotInR);
  REQUIRE(hs.witness);
  CHECK(hs.witness->difference.size() <= 5);
  CHECK(oracle::same_hom_triples(phi, flip_reconstruction(phi, hs.witness->difference)));

  SearchBudget tiny;
  tiny.max_nodes = 1;
  CHECK(in_R(fx::random(7, 0.5, 3), tiny).verdict != Verdict::InR);
  SearchBudget too_big;
  too_big.ceiling = 9;
  CHECK_THROWS_AS(in_R(Coloring(5), too_big), Error);
  // above the ceiling only structural evidence is used
  CHECK(in_R(Coloring(10)).verdict == Verdict::Unknown);
  CHECK(in_R(fx::partition(10)).verdict == Verdict::NotInR);
}

TEST_CASE("r values") {
  const RValueReport part = r_value(fx::partition(6), RMode::Exhaustive);
  CHECK(part.status == RStatus::Finite);
  CHECK(part.r == 1u);
  CHECK(part.witnesses.size() == 9);
  CHECK(part.complete);

  const RValueReport nc = r_value(fx::fig_no_critical_pair(), RMode::Exhaustive);
  CHECK(nc.r == 4u);
  REQUIRE(nc.witnesses.size() == 1);
  CHECK(nc.witnesses[0].difference == kSquare);

  const RValueReport zero = r_value(Coloring(5), RMode::Exhaustive);
  CHECK(zero.status == RStatus::NotApplicable);
  CHECK_FALSE(zero.r);

  const RValueReport s1 = r_value(fx::partition(6), RMode::StructuralOnly);
  CHECK(s1.r == 1u);
  CHECK(s1.complete);
  const RValueReport s4 = r_value(fx::fig_no_critical_pair(), RMode::StructuralOnly);
  CHECK(s4.r == 4u);
  CHECK_FALSE(s4.complete);
  const RValueReport s0 = r_value(Coloring(6), RMode::StructuralOnly);
  CHECK(s0.status == RStatus::Unknown);
  CHECK_FALSE(s0.complete);
}

TEST_CASE("minimal reconstructions") {
  const auto part = minimal_reconstructions(fx::partition(6));
  CHECK(part.size() == 9);
  for (const auto& w : part) CHECK(w.difference.size() == 1);

  const auto cc = minimal_reconstructions(fx::fig_critical_cycle());
  REQUIRE(cc.size() == 1);
  CHECK(cc[0].difference == EdgeSet(6, {{4, 5}}));

  const auto nc = minimal_reconstructions(fx::fig_no_critical_pair());
  CHECK_FALSE(nc.empty());
  for (const auto& w : nc) CHECK(w.difference.size() == 4);

  CHECK_THROWS_AS(minimal_reconstructions(Coloring(5)), Error);
}

TEST_CASE("component restriction") {
  // both components of the drawn critical cycle together with {x1,x2}
  const Coloring phi = fx::fig_critical_cycle();
  EdgeSet d = kSquare;
  d.insert(4, 5);
  REQUIRE(is_valid_difference(phi, d));
  const auto comps = components(d);
  REQUIRE(comps.size() == 2);
  CHECK(component_restriction_valid(phi, d, comps[0]));
  CHECK(component_restriction_valid(phi, d, comps[1]));
  CHECK_THROWS_AS(component_restriction_valid(phi, d, Component{{0, 1}, ComponentKind::Path, 1}), Error);
  CHECK_THROWS_AS(component_restriction_valid(phi, EdgeSet(6, {{0, 1}}), comps[1]), Error);

  // the drawn reconstruction flips just the cycle
  const auto [a, b] = fx::fig_critical_cycle_pair();
  CHECK(ones(boolean_sum(a, b)) == kSquare);
  CHECK(oracle::same_hom_triples(a, b));

  std::size_t multi = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Coloring f = fx::random(6, 0.5, seed);
    for (const auto& w : enumerate_reconstructions(f, 8)) {
      if (w.components.size() < 2) continue;
      ++multi;
      for (const Component& c : w.components) CHECK(component_restriction_valid(f, w.difference, c));
    }
  }
  CHECK(multi > 0);
}

TEST_CASE("search results do not depend on the thread count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Coloring phi = fx::random(7, 0.5, seed);
    const DifferenceSearch search(phi);
    const auto one = search.all(std::nullopt, 0, 1);
    CHECK(search.all(std::nullopt, 0, 2).masks == one.masks);
    CHECK(search.all(std::nullopt, 0, 8).masks == one.masks);
    CHECK(search.minimum(0, 1).masks == search.minimum(0, 8).masks);
  }
}

TEST_CASE("mask helpers") {
  CHECK(size_colex_less(0b100, 0b011));
  CHECK(size_colex_less(0b001, 0b010));
  const EdgeSet e(5, {{0, 1}, {2, 4}});
  CHECK(from_mask(5, to_mask(e)) == e);
  CHECK_THROWS_AS(to_mask(EdgeSet(12)), Error);
  CHECK(restrict_edges(EdgeSet(5, {{0, 1}, {1, 2}, {3, 4}}), std::vector<Vertex>{0, 1, 2}) ==
        EdgeSet(5, {{0, 1}, {1, 2}}));
}
