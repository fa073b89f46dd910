#include "homrec/structure.hpp"

#include <algorithm>
#include <sstream>

#include "homrec/errors.hpp"

namespace homrec {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Path: return "path";
    case ComponentKind::EvenCycle: return "even_cycle";
    case ComponentKind::OddCycle: return "odd_cycle";
    case ComponentKind::Other: return "other";
  }
  return "other";
}

namespace {

std::vector<VertexSet> adjacency(const EdgeSet& edges) {
  std::vector<VertexSet> adj(edges.n());
  for (const Pair& p : edges.members()) {
    adj[p.lo].push_back(p.hi);
    adj[p.hi].push_back(p.lo);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

// Walks a degree<=2 component starting at `start`, first stepping to `next`.
VertexSet walk(const std::vector<VertexSet>& adj, Vertex start, Vertex next) {
  VertexSet order{start};
  Vertex prev = start;
  Vertex cur = next;
  while (cur != start) {
    order.push_back(cur);
    const auto& nb = adj[cur];
    if (nb.size() < 2) break;
    const Vertex step = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = step;
  }
  return order;
}

}  // namespace

std::size_t degree(const EdgeSet& edges, Vertex x) {
  if (x >= edges.n()) throw Error(ErrorKind::InvalidSubset, "vertex outside the edge set");
  std::size_t d = 0;
  for (Vertex y = 0; y < edges.n(); ++y)
    if (y != x && edges.contains_index(pair_index(x, y))) ++d;
  return d;
}

std::size_t max_degree(const EdgeSet& edges) {
  std::vector<std::size_t> deg(edges.n(), 0);
  for (const Pair& p : edges.members()) {
    ++deg[p.lo];
    ++deg[p.hi];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<Component> components(const EdgeSet& edges) {
  const auto adj = adjacency(edges);
  const Vertex n = edges.n();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || adj[s].empty()) continue;
    VertexSet members;
    VertexSet stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());

    Component c;
    std::size_t degree_sum = 0;
    bool low_degree = true;
    for (Vertex v : members) {
      degree_sum += adj[v].size();
      low_degree = low_degree && adj[v].size() <= 2;
    }
    c.edge_count = degree_sum / 2;

    if (low_degree && c.edge_count + 1 == members.size()) {
      c.kind = ComponentKind::Path;
      const auto endpoint = std::find_if(members.begin(), members.end(), [&](Vertex v) { return adj[v].size() == 1; });
      c.vertices = walk(adj, *endpoint, adj[*endpoint][0]);
    } else if (low_degree && c.edge_count == members.size()) {
      c.kind = members.size() % 2 == 0 ? ComponentKind::EvenCycle : ComponentKind::OddCycle;
      const Vertex start = members.front();
      c.vertices = walk(adj, start, adj[start][0]);
    } else {
      c.kind = ComponentKind::Other;
      c.vertices = std::move(members);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<ClawWitness> find_claw(const EdgeSet& edges) {
  const Vertex n = edges.n();
  if (n < 4) throw Error(ErrorKind::TooSmall, "claws need at least 4 vertices");
  const auto has = [&](Vertex a, Vertex b) { return edges.contains_index(pair_index(a, b)); };
  for (Vertex z = 2; z < n; ++z)
    for (Vertex y = 1; y < z; ++y) {
      if (!has(y, z)) continue;
      for (Vertex x = 0; x < y; ++x) {
        if (!has(x, y) || !has(x, z)) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (w == x || w == y || w == z) continue;
          if (!has(w, x) && !has(w, y) && !has(w, z)) return ClawWitness{w, {x, y, z}};
        }
      }
    }
  return std::nullopt;
}

std::optional<int> hom_color_uniform(const Coloring& sigma) {
  const HomSignature sig = hom_signature(sigma);
  bool seen[2] = {false, false};
  for (HomClass c : sig.classes()) {
    if (c == HomClass::Hom0) seen[0] = true;
    if (c == HomClass::Hom1) seen[1] = true;
  }
  if (seen[0] && seen[1]) return std::nullopt;
  return seen[1] ? 1 : 0;
}

namespace {

struct ParityChecker {
  const Coloring& phi;
  const std::vector<VertexSet>& adj;
  const EdgeSet& diff;
  ParityReport report;
  VertexSet path;

  bool fail(std::string lemma, std::string detail) {
    report.passed = false;
    report.violation = ParityViolation{std::move(lemma), path, std::move(detail)};
    return false;
  }

  bool check_current() {
    const std::size_t k = path.size() - 1;  // length in edges
    if (k < 2) return true;
    ++report.paths_checked;
    const auto& x = path;
    const bool even = k % 2 == 0;
    if ((phi(x[0], x[1]) != phi(x[k - 1], x[k])) != even) return fail("path1", "end edges vs. length parity");
    if ((phi(x[0], x[2]) == phi(x[0], x[k])) != even) return fail("path2", "phi{x0,x2} vs. phi{x0,xk}");
    if (k >= 3) {
      const int base = phi(x[0], x[2]);
      for (std::size_t i = 0; i + 3 <= k; ++i) {
        if (phi(x[i], x[i + 2]) != base || phi(x[i], x[i + 3]) != 1 - base || phi(x[i + 1], x[i + 3]) != base) {
          return fail("evenpaths", "alternation broken at offset " + std::to_string(i));
        }
      }
    }
    return true;
  }

  bool extend() {
    if (!check_current()) return false;
    const Vertex last = path.back();
    for (Vertex u : adj[last]) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
        ok = path[i] != u && !diff.contains_index(pair_index(path[i], u));
      }
      if (!ok) continue;
      path.push_back(u);
      if (!extend()) return false;
      path.pop_back();
    }
    return true;
  }
};

}  // namespace

ParityReport check_parity_lemmas(const Coloring& phi, const Coloring& psi) {
  if (!h_equivalent(phi, psi)) throw Error(ErrorKind::Precondition, "colorings are not H-equivalent");
  const EdgeSet diff = ones(boolean_sum(phi, psi));
  const auto adj = adjacency(diff);
  ParityChecker checker{phi, adj, diff, {}, {}};
  for (Vertex s = 0; s < phi.n(); ++s) {
    if (adj[s].empty()) continue;
    checker.path = {s};
    if (!checker.extend()) break;
  }
  return checker.report;
}

HomPartition hom_partition(const Coloring& phi, const Component& component) {
  const auto& v = component.vertices;
  if (v.size() < 6) throw Error(ErrorKind::TooSmall, "hom_partition needs a component with at least 6 vertices");
  if (component.kind != ComponentKind::Path && component.kind != ComponentKind::EvenCycle) {
    throw Error(ErrorKind::Precondition, "component is neither a path nor an even cycle");
  }
  HomPartition out;
  for (std::size_t i = 0; i < v.size(); ++i) (i % 2 == 0 ? out.even_class : out.odd_class).push_back(v[i]);
  std::sort(out.even_class.begin(), out.even_class.end());
  std::sort(out.odd_class.begin(), out.odd_class.end());

  if (!is_homogeneous(phi, out.even_class) || !is_homogeneous(phi, out.odd_class)) {
    throw Error(ErrorKind::Precondition, "position classes are not homogeneous");
  }
  out.color = phi(out.even_class[0], out.even_class[1]);
  if (phi(out.odd_class[0], out.odd_class[1]) != out.color) {
    throw Error(ErrorKind::Precondition, "position classes have different colors");
  }
  const auto extends = [&](const VertexSet& cls, Vertex y) {
    return std::all_of(cls.begin(), cls.end(), [&](Vertex x) { return phi(x, y) == out.color; });
  };
  for (Vertex y : out.odd_class)
    if (extends(out.even_class, y)) throw Error(ErrorKind::Precondition, "even class is not maximal");
  for (Vertex y : out.even_class)
    if (extends(out.odd_class, y)) throw Error(ErrorKind::Precondition, "odd class is not maximal");
  return out;
}

std::pair<Coloring, Coloring> make_path_pair(Vertex m, int c, int phase) {
  if (m < 4) throw Error(ErrorKind::TooSmall, "path pairs need at least 4 vertices");
  c &= 1;
  phase &= 1;
  Coloring phi(m);
  for (Vertex j = 1; j < m; ++j)
    for (Vertex i = 0; i < j; ++i) {
      const Vertex d = j - i;
      const int color = d == 1 ? (phase ^ static_cast<int>(i & 1)) : (d % 2 == 0 ? c : 1 - c);
      phi.set_index(pair_index(i, j), color);
    }
  Coloring psi = phi;
  for (Vertex i = 0; i + 1 < m; ++i) psi.set(i, i + 1, 1 - phi(i, i + 1));
  return {std::move(phi), std::move(psi)};
}

std::pair<Coloring, Coloring> make_cycle_pair(Vertex m, int c, int phase) {
  if (m < 6 || m % 2 != 0) throw Error(ErrorKind::InvalidLength, "cycle pairs need an even length >= 6");
  c &= 1;
  phase &= 1;
  Coloring phi(m);
  for (Vertex j = 1; j < m; ++j)
    for (Vertex i = 0; i < j; ++i) {
      const Vertex d = std::min(j - i, m - (j - i));
      int color;
      if (d == 1) {
        const Vertex edge = j - i == 1 ? i : m - 1;  // edge {i,i+1 mod m} carries index i
        color = phase ^ static_cast<int>(edge & 1);
      } else {
        color = d % 2 == 0 ? c : 1 - c;
      }
      phi.set_index(pair_index(i, j), color);
    }
  Coloring psi = phi;
  for (Vertex i = 0; i < m; ++i) {
    const Vertex j = (i + 1) % m;
    psi.set(i, j, 1 - phi(i, j));
  }
  return {std::move(phi), std::move(psi)};
}

std::string to_dot(const Coloring& phi, const EdgeSet& highlight) {
  if (highlight.n() != phi.n()) throw Error(ErrorKind::Dimension, "highlight set on a different vertex count");
  std::ostringstream out;
  out << "graph coloring {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < phi.n(); ++v) out << "  " << v << ";\n";
  for (std::size_t idx = 0; idx < phi.pair_count(); ++idx) {
    const Pair p = pair_at(idx);
    out << "  " << p.lo << " -- " << p.hi << " [";
    out << (phi.at_index(idx) ? "color=black" : "color=gray,style=dashed");
    if (highlight.contains_index(idx)) out << ",penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace homrec
