#pragma once

// Named colorings used by the CLI and the tests. Figure fixtures use
// thick = 1, gray = 0; pairs the drawings leave out are colored 0.

#include <cstdint>
#include <string>
#include <utility>

#include "homrec/coloring.hpp"

namespace homrec::fixtures {

/// phi{x,y} = 1 iff x and y have the same parity. n >= 2.
Coloring partition(Vertex n);

/// Vertices y,z,a,b,c,d = 0..5; {y,z} is critical.
Coloring fig_critical_pair();

/// Vertices a,b,c,d,x1,x2 = 0..5; critical cycle (a,b,c,d), {x1,x2} undrawn.
Coloring fig_critical_cycle();
/// The drawn reconstruction: psi flips the cycle {ab,bc,cd,da}.
std::pair<Coloring, Coloring> fig_critical_cycle_pair();

/// The first six vertices of the drawing without a critical pair.
Coloring fig_no_critical_pair();

/// Vertices a..e = 0..4; the drawn H-equivalent pair.
std::pair<Coloring, Coloring> fig_homsum();

/// Vertices a,b,c,d,a1,b1,c1,d1 = 0..7.
Coloring fig_two_cycles();

/// Pairs colored 1 independently with probability `density`, pair indices in
/// colex order, draws from std::mt19937_64(seed): u = (draw >> 11) * 2^-53.
Coloring random(Vertex n, double density, std::uint64_t seed);

}  // namespace homrec::fixtures
