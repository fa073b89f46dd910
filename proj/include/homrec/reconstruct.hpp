#pragma once

// Reconstructions of a coloring from its homogeneous sets.
//
// A difference set D is *valid* for phi when flipping phi on D yields an
// H-equivalent coloring. Validity is decided locally: for every triple that
// contains one or two D-edges, the two edges of the triple carrying the same
// D-bit meet at an apex y, and phi must color them differently. Triples with
// zero or three D-edges are unconstrained.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "homrec/coloring.hpp"
#include "homrec/structure.hpp"

namespace homrec {

/// Largest vertex count for which in_R / r_value run an exhaustive search by
/// default, and the most that may be requested explicitly.
inline constexpr Vertex kDefaultExhaustiveCeiling = 7;
inline constexpr Vertex kHardExhaustiveCeiling = 8;

/// Published bounds on the Ramsey number R(7); the r in {1,4} dichotomy is
/// only proved for vertex sets at least this large.
inline constexpr int kRamsey7LowerBound = 205;
inline constexpr int kRamsey7UpperBound = 540;

/// Difference sets are packed into 64-bit masks over pair indices.
inline constexpr Vertex kMaxMaskVertices = 11;

struct SearchBudget {
  /// Search-node cap per shard group; 0 = unlimited.
  std::uint64_t max_nodes = 0;
  Vertex ceiling = kDefaultExhaustiveCeiling;
  unsigned threads = 1;
};

struct ReconstructionWitness {
  EdgeSet difference;
  std::vector<Component> components;
  bool trivial = false;
};

ReconstructionWitness make_witness(const EdgeSet& difference);

enum class Verdict { InR, NotInR, Unknown };
std::string_view to_string(Verdict v);

struct RMembership {
  Verdict verdict = Verdict::Unknown;
  std::optional<ReconstructionWitness> witness;
};

enum class RMode { Exhaustive, StructuralOnly };
std::string_view to_string(RMode m);

enum class RStatus { Finite, NotApplicable, Unknown };

struct RValueReport {
  RStatus status = RStatus::Unknown;
  std::optional<std::size_t> r;
  std::vector<ReconstructionWitness> witnesses;
  RMode mode = RMode::Exhaustive;
  bool complete = false;
};

// --- mask helpers --------------------------------------------------------------

std::uint64_t to_mask(const EdgeSet& edges);
EdgeSet from_mask(Vertex n, std::uint64_t mask);
/// Size, then colex (= numeric order on masks).
bool size_colex_less(std::uint64_t a, std::uint64_t b);

// --- search engine -------------------------------------------------------------

/// Backtracking over pairs in colex order; each triple constraint is checked
/// as soon as its last pair is assigned. The pair space is split into a fixed
/// set of prefix shards, so results do not depend on the worker count.
class DifferenceSearch {
 public:
  explicit DifferenceSearch(const Coloring& phi);

  struct Result {
    std::vector<std::uint64_t> masks;  // non-trivial, size-then-colex
    bool complete = true;
  };

  /// Every non-trivial valid difference with at most max_size pairs.
  Result all(std::optional<std::size_t> max_size, std::uint64_t node_budget = 0, unsigned threads = 1) const;
  /// Valid differences of the smallest non-trivial size (empty if none).
  Result minimum(std::uint64_t node_budget = 0, unsigned threads = 1) const;

  std::size_t pair_count() const noexcept { return pairs_; }

 private:
  struct Constraint {
    std::uint8_t first;   // pair index of {x,y}
    std::uint8_t second;  // pair index of {x,z}
    std::uint8_t allowed; // bit p set when pattern p = d_xy | d_xz<<1 | d_yz<<2 is fine
  };

  bool consistent(std::size_t k, std::uint64_t mask) const;
  Result run(std::size_t bound, std::uint64_t node_budget, unsigned threads) const;

  Vertex n_;
  std::size_t pairs_;
  std::vector<std::vector<Constraint>> by_last_;
};

// --- operations ----------------------------------------------------------------

/// Local-criterion validity; true iff flip_reconstruction(phi, D) is
/// H-equivalent to phi (D = empty and D = all pairs included).
bool is_valid_difference(const Coloring& phi, const EdgeSet& diff);

/// Non-trivial valid differences with |D| <= max_size, size-then-colex.
/// Requires n <= kMaxMaskVertices.
std::vector<ReconstructionWitness> enumerate_reconstructions(const Coloring& phi,
                                                             std::optional<std::size_t> max_size = std::nullopt,
                                                             unsigned threads = 1);

RMembership in_R(const Coloring& phi, const SearchBudget& budget = {});

RValueReport r_value(const Coloring& phi, RMode mode, const SearchBudget& budget = {});

/// All witnesses of size r(phi). NotApplicable error when phi is in R.
std::vector<ReconstructionWitness> minimal_reconstructions(const Coloring& phi, const SearchBudget& budget = {});

/// Validity of D restricted to the pairs inside `component`, which must be a
/// component of D.
bool component_restriction_valid(const Coloring& phi, const EdgeSet& diff, const Component& component);

/// D restricted to pairs with both endpoints in `vertices`.
EdgeSet restrict_edges(const EdgeSet& diff, std::span<const Vertex> vertices);

}  // namespace homrec
