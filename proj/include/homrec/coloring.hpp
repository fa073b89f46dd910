#pragma once

// Colorings of the pairs of a finite labeled vertex set, pair/triple indexing,
// Boolean sums, restriction and homogeneous-set machinery.
//
// Vertices are 0..n-1. Pairs {x,y} with x < y are indexed colexicographically,
// idx = y(y-1)/2 + x, so restricting to a prefix {0..m-1} keeps a prefix of
// the bit sequence. Triples {x<y<z} use the analogous colex rank.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace homrec {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // strictly increasing unless noted

struct Pair {
  Vertex lo = 0;
  Vertex hi = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  // colex order: by larger endpoint, then smaller
  friend std::strong_ordering operator<=>(const Pair& a, const Pair& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }
};

/// Normalizes {x,y} to lo < hi. Throws InvalidPair when x == y.
Pair pair_of(Vertex x, Vertex y);

std::size_t pair_count(Vertex n);
std::size_t triple_count(Vertex n);

/// Colex index of {x,y}; argument order does not matter. Throws InvalidPair
/// when x == y.
std::size_t pair_index(Vertex x, Vertex y);
/// Same, additionally rejecting vertices >= n.
std::size_t pair_index(Vertex n, Vertex x, Vertex y);
Pair pair_at(std::size_t index);

std::size_t triple_index(Vertex x, Vertex y, Vertex z);

/// Fixed-length bit sequence over the pairs of an n-vertex set. Shared storage
/// for Coloring and EdgeSet; bits past pair_count(n) are always zero.
class PairBits {
 public:
  PairBits() = default;
  explicit PairBits(Vertex n);

  Vertex n() const noexcept { return n_; }
  std::size_t size() const noexcept { return pair_count(n_); }

  bool test(std::size_t idx) const noexcept { return (words_[idx >> 6] >> (idx & 63)) & 1u; }
  void assign(std::size_t idx, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (value) {
      words_[idx >> 6] |= bit;
    } else {
      words_[idx >> 6] &= ~bit;
    }
  }
  void flip(std::size_t idx) noexcept { words_[idx >> 6] ^= std::uint64_t{1} << (idx & 63); }

  std::size_t count() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  /// Clears bits beyond size() after word-level operations.
  void trim() noexcept;

  friend bool operator==(const PairBits&, const PairBits&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::uint64_t> words_;
};

class EdgeSet;

/// A total 2-coloring of the pairs of {0..n-1}.
class Coloring {
 public:
  Coloring() = default;
  /// All-zero coloring; n >= 2.
  explicit Coloring(Vertex n);
  Coloring(Vertex n, std::initializer_list<Pair> ones);
  static Coloring from_ones(Vertex n, std::span<const Pair> ones);
  static Coloring constant(Vertex n, int color);
  static Coloring from_bits(PairBits bits);

  Vertex n() const noexcept { return bits_.n(); }
  std::size_t pair_count() const noexcept { return bits_.size(); }

  /// Color of {x,y}; arguments may be in either order.
  int operator()(Vertex x, Vertex y) const { return bits_.test(pair_index(n(), x, y)) ? 1 : 0; }
  int at_index(std::size_t idx) const noexcept { return bits_.test(idx) ? 1 : 0; }

  void set(Vertex x, Vertex y, int color);
  void set_index(std::size_t idx, int color) noexcept { bits_.assign(idx, color != 0); }

  const PairBits& bits() const noexcept { return bits_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  PairBits bits_;
};

/// A set of unordered pairs over {0..n-1}.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(Vertex n);
  EdgeSet(Vertex n, std::initializer_list<Pair> members);
  static EdgeSet from_pairs(Vertex n, std::span<const Pair> members);
  static EdgeSet from_bits(PairBits bits);
  static EdgeSet all_pairs(Vertex n);

  Vertex n() const noexcept { return bits_.n(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return size() == 0; }

  bool contains(Vertex x, Vertex y) const { return bits_.test(pair_index(n(), x, y)); }
  bool contains_index(std::size_t idx) const noexcept { return bits_.test(idx); }
  void insert(Vertex x, Vertex y) { bits_.assign(pair_index(n(), x, y), true); }
  void erase(Vertex x, Vertex y) { bits_.assign(pair_index(n(), x, y), false); }

  /// Members in colex order.
  std::vector<Pair> members() const;
  const PairBits& bits() const noexcept { return bits_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  PairBits bits_;
};

enum class HomClass : std::uint8_t { NonHom, Hom0, Hom1 };

/// Per-triple homogeneity classes, indexed by triple_index.
class HomSignature {
 public:
  HomSignature(Vertex n, std::vector<HomClass> classes);

  Vertex n() const noexcept { return n_; }
  HomClass at(Vertex x, Vertex y, Vertex z) const;
  std::span<const HomClass> classes() const noexcept { return classes_; }

  /// Hom0 <-> Hom1.
  HomSignature color_swapped() const;
  /// Color-agnostic view: true where the triple is homogeneous.
  std::vector<bool> homogeneous_mask() const;
  /// Keeps the triples inside `subset` (strictly increasing), relabeled 0..k-1.
  HomSignature project(std::span<const Vertex> subset) const;

  friend bool operator==(const HomSignature&, const HomSignature&) = default;

 private:
  Vertex n_;
  std::vector<HomClass> classes_;
};

struct HomSet {
  VertexSet vertices;
  int color = 0;

  friend bool operator==(const HomSet&, const HomSet&) = default;
};

// --- edge-set views of a coloring --------------------------------------------

EdgeSet ones(const Coloring& phi);   // D_1(phi)
EdgeSet zeros(const Coloring& phi);  // D_0(phi)
Coloring indicator(const EdgeSet& edges);
EdgeSet complement(const EdgeSet& edges);

// --- operations --------------------------------------------------------------

Coloring complement(const Coloring& phi);
Coloring boolean_sum(const Coloring& phi, const Coloring& psi);
Coloring restrict(const Coloring& phi, std::span<const Vertex> subset);

HomSignature hom_signature(const Coloring& phi);
/// Maximal homogeneous sets of size >= min_size, sorted by (color, vertices).
/// Requires n <= 64.
std::vector<HomSet> hom_sets(const Coloring& phi, std::size_t min_size = 3);
bool is_homogeneous(const Coloring& phi, std::span<const Vertex> subset);
bool h_equivalent(const Coloring& phi, const Coloring& psi);

/// {0..n-1}.
VertexSet all_vertices(Vertex n);

}  // namespace homrec
