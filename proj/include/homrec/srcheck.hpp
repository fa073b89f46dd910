#pragma once

// Property E_i, finite strong reconstructibility, the 4-set/7-set
// characterization of non-membership in R, and the alpha coloring.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homrec/coloring.hpp"
#include "homrec/reconstruct.hpp"

namespace homrec {

/// Smallest z outside F with phi{x,z} == color for every x in F.
std::optional<Vertex> e_property_witness(const Coloring& phi, std::span<const Vertex> F, int color);

struct SRReport {
  bool holds = true;
  std::optional<VertexSet> failing_F;  // first failing 4-set, colex
  std::map<VertexSet, VertexSet> per_F;  // 4-set -> smallest G whose restriction is in R
};

/// For every 4-set F, looks for G with F <= G, |G| <= max_G (size, then colex)
/// such that restrict(phi, G) is in R by exhaustive search. The answer is
/// about this finite vertex set only. max_G above `ceiling` is a Budget error.
SRReport is_SR_finite(const Coloring& phi, Vertex max_G, const SearchBudget& budget = {});

struct Theorem63Witness {
  VertexSet F;           // 4 vertices
  EdgeSet D;             // nonempty, inside [F]^2, in the coordinates of phi
  std::size_t checked_Gs = 0;
};

/// Every (F, D) with D a non-trivial valid difference of restrict(phi, F)
/// that stays valid for restrict(phi, G) for all 7-sets G containing F.
/// Ordered by F (colex), then D (size, then colex). n >= 7.
std::vector<Theorem63Witness> theorem63_witnesses(const Coloring& phi, unsigned threads = 1);
std::optional<Theorem63Witness> theorem63_condition_c(const Coloring& phi, unsigned threads = 1);

/// The recurrence-defined coloring on {0..n-1}:
///   a{0,1} = a{0,2} = seed = 1 - a{1,2}
///   a{m,m+1} = a{0,m+1} = 1 - a{0,m}   (m >= 2)
///   a{k,m} = 1 - a{0,k}                (1 <= k < m)
/// Overlapping assignments are checked for agreement. n >= 3.
Coloring alpha_coloring(Vertex n, int seed = 1);

struct AlphaCheck {
  bool passed = true;
  std::vector<std::string> log;  // one "PASS ..." / "FAIL ..." line per (n, family)
};

/// Families (a)-(e) for every 5 <= n <= nmax:
///   (a) no critical cycles; (b) {0,n-1} critical;
///   (c) y+1, y+3 in B{0,y} for 3 <= y <= n-4; (d) 1,2 in B{x,y} for x,y > 2;
///   (e) every {1,2,z} homogeneous.
AlphaCheck verify_alpha(Vertex nmax, unsigned threads = 1);

/// k-subsets of {0..n-1} in colex order.
std::vector<VertexSet> subsets_colex(Vertex n, std::size_t k);

}  // namespace homrec
