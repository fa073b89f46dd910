#include "homrec/fixtures.hpp"

#include <random>

#include "homrec/errors.hpp"

namespace homrec::fixtures {

Coloring partition(Vertex n) {
  Coloring phi(n);
  for (Vertex y = 1; y < n; ++y)
    for (Vertex x = 0; x < y; ++x)
      if ((x ^ y) % 2 == 0) phi.set(x, y, 1);
  return phi;
}

Coloring fig_critical_pair() {
  enum : Vertex { y, z, a, b, c, d };
  return Coloring(6, {{y, c}, {y, a}, {z, d}, {z, b}});
}

Coloring fig_critical_cycle() {
  enum : Vertex { a, b, c, d, x1, x2 };
  return Coloring(6, {{a, b}, {b, d}, {c, d}, {c, x1}, {a, x1}, {d, x2}, {b, x2}});
}

std::pair<Coloring, Coloring> fig_critical_cycle_pair() {
  Coloring phi = fig_critical_cycle();
  Coloring psi = phi;
  for (const Pair& p : {Pair{0, 1}, Pair{1, 2}, Pair{2, 3}, Pair{0, 3}}) psi.set(p.lo, p.hi, 1 - phi(p.lo, p.hi));
  return {phi, psi};
}

Coloring fig_no_critical_pair() {
  return Coloring(6, {{0, 3}, {1, 3}, {1, 2}, {0, 4}, {4, 5}, {2, 5}, {2, 4}, {0, 5}});
}

std::pair<Coloring, Coloring> fig_homsum() {
  enum : Vertex { a, b, c, d, e };
  Coloring phi(5, {{a, b}, {b, c}, {a, c}, {c, d}, {b, e}});
  Coloring psi(5, {{a, b}, {b, c}, {a, c}, {a, e}, {d, e}, {a, d}});
  return {phi, psi};
}

Coloring fig_two_cycles() {
  enum : Vertex { a, b, c, d, a1, b1, c1, d1 };
  return Coloring(8, {{a, b},  {b, d},   {d, c},  {a1, b1}, {a1, c1}, {c1, d1}, {c, d1},
                      {d1, a}, {a, b1},  {b1, c}, {b, a1},  {a1, d},  {d, c1},  {c1, b}});
}

Coloring random(Vertex n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw Error(ErrorKind::InvalidLength, "density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  Coloring phi(n);
  for (std::size_t i = 0; i < phi.pair_count(); ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    phi.set_index(i, u < density ? 1 : 0);
  }
  return phi;
}

}  // namespace homrec::fixtures
