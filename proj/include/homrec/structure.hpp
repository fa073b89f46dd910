#pragma once

// Graph structure of edge sets (degrees, components, claws) and the structure
// theory of D_1(phi+psi) for H-equivalent pairs, exposed as checkable
// predicates and as pair generators.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homrec/coloring.hpp"

namespace homrec {

enum class ComponentKind { Path, EvenCycle, OddCycle, Other };

std::string_view to_string(ComponentKind kind);

struct Component {
  /// Path: from the smaller endpoint. Cycle: from the smallest vertex toward
  /// its smaller neighbor. Other: ascending.
  VertexSet vertices;
  ComponentKind kind = ComponentKind::Other;
  std::size_t edge_count = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

struct ClawWitness {
  Vertex apex = 0;
  Vertex leaves[3] = {0, 0, 0};
};

std::size_t degree(const EdgeSet& edges, Vertex x);
std::size_t max_degree(const EdgeSet& edges);

/// Connected components of the graph (V, edges), isolated vertices excluded,
/// ordered by smallest vertex.
std::vector<Component> components(const EdgeSet& edges);

/// Some {x,y,z,w} whose induced edges are exactly the triangle xyz. n >= 4.
std::optional<ClawWitness> find_claw(const EdgeSet& edges);

/// The color shared by every homogeneous triple of sigma; 0 if there are
/// none; empty when both colors occur. n >= 3.
std::optional<int> hom_color_uniform(const Coloring& sigma);

struct ParityViolation {
  std::string lemma;  // "path1", "path2" or "evenpaths"
  VertexSet path;
  std::string detail;
};

struct ParityReport {
  bool passed = true;
  std::size_t paths_checked = 0;
  std::optional<ParityViolation> violation;
};

/// Walks every induced path of D_1(phi+psi) and checks the three alternation
/// identities on phi:
///   path1:     phi{x0,x1} != phi{x_{k-1},x_k}  <=>  k even      (k >= 2)
///   path2:     phi{x0,x2} == phi{x0,x_k}       <=>  k even      (k >= 2)
///   evenpaths: phi{x0,x2} == phi{xi,xi+2} == 1-phi{xi,xi+3} == phi{xi+1,xi+3}
/// Requires h_equivalent(phi, psi) (Precondition error otherwise).
ParityReport check_parity_lemmas(const Coloring& phi, const Coloring& psi);

struct HomPartition {
  VertexSet even_class;
  VertexSet odd_class;
  int color = 0;
};

/// Splits a component of D_1(phi+psi) into the vertices at even and odd
/// traversal positions and checks that both are homogeneous of one color and
/// maximal within the component. |C| >= 6.
HomPartition hom_partition(const Coloring& phi, const Component& component);

/// H-equivalent pair on m vertices whose Boolean sum is the path 0-1-...-(m-1).
/// Same-parity pairs get color c, odd-distance pairs at distance >= 3 get 1-c,
/// path edge {i,i+1} gets phase ^ (i mod 2); psi flips the path edges. m >= 4.
std::pair<Coloring, Coloring> make_path_pair(Vertex m, int c, int phase);

/// As make_path_pair with distances taken along the m-cycle; m even, m >= 6.
std::pair<Coloring, Coloring> make_cycle_pair(Vertex m, int c, int phase);

/// Graphviz rendering: color-1 pairs solid, color-0 pairs gray dashed,
/// highlighted pairs bold.
std::string to_dot(const Coloring& phi, const EdgeSet& highlight);

}  // namespace homrec
