#pragma once

// Critical pairs, critical 4-cycles and the flips they induce.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "homrec/coloring.hpp"

namespace homrec {

/// Which chained-equality system a critical 4-cycle (a,b,c,d) satisfies.
///   Primary:   phi{a,c} = phi{b,c} = 1-phi{a,b}, phi{b,d} = phi{c,d} = 1-phi{b,c},
///              phi{c,a} = phi{d,a} = 1-phi{c,d}
///   Alternate: phi{b,d} = phi{a,d} = 1-phi{a,b}, phi{a,c} = phi{d,c} = 1-phi{a,d},
///              phi{d,b} = phi{c,b} = 1-phi{d,c}
/// On a fixed quad the two are mutually exclusive: Primary forces
/// phi{a,c} = phi{b,c}, Alternate forces phi{a,c} = phi{a,b} != phi{b,c}.
enum class Orientation { Primary, Alternate };

std::string_view to_string(Orientation o);

struct CriticalCycleWitness {
  std::array<Vertex, 4> quad{};  // cyclic order a,b,c,d
  Orientation orientation = Orientation::Primary;
  EdgeSet edges;                 // {ab, bc, cd, da}
};

struct BSet {
  Pair pair;
  VertexSet members;
};

/// {z : phi{x,z} == phi{y,z}} over z outside the pair. n >= 3.
BSet b_set(const Coloring& phi, Pair pair);
bool is_critical_pair(const Coloring& phi, Pair pair);
/// All critical pairs, colex order.
std::vector<Pair> find_critical_pairs(const Coloring& phi);

struct CycleScanOptions {
  /// At n = 4 the external condition is vacuous; refused unless set.
  bool allow_vacuous = false;
};

/// Tests both orientations for the cyclic arrangement given by `quad`.
std::optional<CriticalCycleWitness> is_critical_cycle(const Coloring& phi, std::array<Vertex, 4> quad,
                                                      CycleScanOptions options = {});

/// Every critical cycle, one witness per edge set. Witness quads are
/// canonical: smallest vertex first, then toward its smaller cycle neighbor.
/// Ordered by (quad vertex set colex, arrangement). `threads` only affects
/// speed.
std::vector<CriticalCycleWitness> find_critical_cycles(const Coloring& phi, CycleScanOptions options = {},
                                                       unsigned threads = 1);

/// phi with every pair of `diff` recolored. Throws DegenerateInput on empty diff.
Coloring flip_reconstruction(const Coloring& phi, const EdgeSet& diff);

}  // namespace homrec
