#include "homrec/critical.hpp"

#include <algorithm>

#include "homrec/errors.hpp"
#include "homrec/parallel.hpp"

namespace homrec {

std::string_view to_string(Orientation o) { return o == Orientation::Primary ? "primary" : "alternate"; }

BSet b_set(const Coloring& phi, Pair pair) {
  if (phi.n() < 3) throw Error(ErrorKind::TooSmall, "B-sets need at least 3 vertices");
  pair_index(phi.n(), pair.lo, pair.hi);  // validates
  const Pair p = pair_of(pair.lo, pair.hi);
  BSet out{p, {}};
  for (Vertex z = 0; z < phi.n(); ++z) {
    if (z == p.lo || z == p.hi) continue;
    if (phi(p.lo, z) == phi(p.hi, z)) out.members.push_back(z);
  }
  return out;
}

bool is_critical_pair(const Coloring& phi, Pair pair) { return b_set(phi, pair).members.empty(); }

std::vector<Pair> find_critical_pairs(const Coloring& phi) {
  if (phi.n() < 3) throw Error(ErrorKind::TooSmall, "critical pairs need at least 3 vertices");
  std::vector<Pair> out;
  for (std::size_t idx = 0; idx < phi.pair_count(); ++idx) {
    const Pair p = pair_at(idx);
    if (is_critical_pair(phi, p)) out.push_back(p);
  }
  return out;
}

namespace {

bool primary_holds(const Coloring& f, Vertex a, Vertex b, Vertex c, Vertex d) {
  return f(a, c) == f(b, c) && f(b, c) == 1 - f(a, b) &&  //
         f(b, d) == f(c, d) && f(c, d) == 1 - f(b, c) &&  //
         f(c, a) == f(d, a) && f(d, a) == 1 - f(c, d);
}

bool alternate_holds(const Coloring& f, Vertex a, Vertex b, Vertex c, Vertex d) {
  return f(b, d) == f(a, d) && f(a, d) == 1 - f(a, b) &&  //
         f(a, c) == f(d, c) && f(d, c) == 1 - f(a, d) &&  //
         f(d, b) == f(c, b) && f(c, b) == 1 - f(d, c);
}

bool external_holds(const Coloring& f, const std::array<Vertex, 4>& q) {
  for (Vertex z = 0; z < f.n(); ++z) {
    if (std::find(q.begin(), q.end(), z) != q.end()) continue;
    for (int i = 0; i < 4; ++i) {
      if (f(q[i], z) == f(q[(i + 1) % 4], z)) return false;
    }
  }
  return true;
}

EdgeSet cycle_edges(Vertex n, const std::array<Vertex, 4>& q) {
  EdgeSet e(n);
  for (int i = 0; i < 4; ++i) e.insert(q[i], q[(i + 1) % 4]);
  return e;
}

}  // namespace

std::optional<CriticalCycleWitness> is_critical_cycle(const Coloring& phi, std::array<Vertex, 4> quad,
                                                      CycleScanOptions options) {
  for (int i = 0; i < 4; ++i) {
    if (quad[i] >= phi.n()) throw Error(ErrorKind::InvalidSubset, "quad vertex outside the coloring");
    for (int j = 0; j < i; ++j)
      if (quad[i] == quad[j]) throw Error(ErrorKind::InvalidSubset, "quad has repeated vertices");
  }
  if (phi.n() < 5 && !options.allow_vacuous) {
    throw Error(ErrorKind::TooSmall, "critical cycles need at least 5 vertices (n = 4 requires allow_vacuous)");
  }
  const auto [a, b, c, d] = quad;
  std::optional<Orientation> orientation;
  if (primary_holds(phi, a, b, c, d)) {
    orientation = Orientation::Primary;
  } else if (alternate_holds(phi, a, b, c, d)) {
    orientation = Orientation::Alternate;
  }
  if (!orientation || !external_holds(phi, quad)) return std::nullopt;
  return CriticalCycleWitness{quad, *orientation, cycle_edges(phi.n(), quad)};
}

std::vector<CriticalCycleWitness> find_critical_cycles(const Coloring& phi, CycleScanOptions options,
                                                       unsigned threads) {
  const Vertex n = phi.n();
  if (n < 5 && !(options.allow_vacuous && n == 4)) {
    throw Error(ErrorKind::TooSmall, "critical cycles need at least 5 vertices");
  }
  std::vector<std::array<Vertex, 4>> subsets;
  for (Vertex z = 3; z < n; ++z)
    for (Vertex y = 2; y < z; ++y)
      for (Vertex x = 1; x < y; ++x)
        for (Vertex w = 0; w < x; ++w) subsets.push_back({w, x, y, z});

  std::vector<std::vector<CriticalCycleWitness>> found(subsets.size());
  parallel_for(subsets.size(), threads, [&](std::size_t i) {
    const auto [w, x, y, z] = subsets[i];
    const std::array<std::array<Vertex, 4>, 3> arrangements{{{w, x, y, z}, {w, x, z, y}, {w, y, x, z}}};
    for (const auto& q : arrangements) {
      if (auto witness = is_critical_cycle(phi, q, options)) found[i].push_back(std::move(*witness));
    }
  });
  std::vector<CriticalCycleWitness> out;
  for (auto& batch : found)
    for (auto& w : batch) out.push_back(std::move(w));
  return out;
}

Coloring flip_reconstruction(const Coloring& phi, const EdgeSet& diff) {
  if (diff.n() != phi.n()) throw Error(ErrorKind::Dimension, "difference set on a different vertex count");
  if (diff.empty()) throw Error(ErrorKind::DegenerateInput, "empty difference set");
  return boolean_sum(phi, indicator(diff));
}

}  // namespace homrec
