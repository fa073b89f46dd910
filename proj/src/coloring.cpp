#include "homrec/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "homrec/errors.hpp"

namespace homrec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::TooSmall: return "too-small";
    case ErrorKind::InvalidSubset: return "invalid-subset";
    case ErrorKind::InvalidLength: return "invalid-length";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

namespace {

void require_same_n(const Coloring& a, const Coloring& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::Dimension,
                "colorings on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " vertices");
  }
}

void require_hom_n(Vertex n) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "homogeneity needs at least 3 vertices, got " + std::to_string(n));
}

}  // namespace

Pair pair_of(Vertex x, Vertex y) {
  if (x == y) throw Error(ErrorKind::InvalidPair, "{" + std::to_string(x) + "," + std::to_string(y) + "}");
  return x < y ? Pair{x, y} : Pair{y, x};
}

std::size_t pair_count(Vertex n) { return std::size_t{n} * (n == 0 ? 0 : n - 1) / 2; }

std::size_t triple_count(Vertex n) {
  if (n < 3) return 0;
  return std::size_t{n} * (n - 1) * (n - 2) / 6;
}

std::size_t pair_index(Vertex x, Vertex y) {
  const Pair p = pair_of(x, y);
  return std::size_t{p.hi} * (p.hi - 1) / 2 + p.lo;
}

std::size_t pair_index(Vertex n, Vertex x, Vertex y) {
  if (x >= n || y >= n) {
    throw Error(ErrorKind::InvalidPair, "{" + std::to_string(x) + "," + std::to_string(y) +
                                            "} outside a " + std::to_string(n) + "-vertex set");
  }
  return pair_index(x, y);
}

Pair pair_at(std::size_t index) {
  // largest hi with hi(hi-1)/2 <= index
  auto hi = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (hi * (hi - 1) / 2 > index) --hi;
  while ((hi + 1) * hi / 2 <= index) ++hi;
  return Pair{static_cast<Vertex>(index - hi * (hi - 1) / 2), static_cast<Vertex>(hi)};
}

std::size_t triple_index(Vertex x, Vertex y, Vertex z) {
  Vertex v[3] = {x, y, z};
  std::sort(v, v + 3);
  if (v[0] == v[1] || v[1] == v[2]) throw Error(ErrorKind::InvalidSubset, "triple with repeated vertex");
  const auto c3 = [](std::size_t k) { return k * (k - 1) * (k - 2) / 6; };
  const auto c2 = [](std::size_t k) { return k * (k - 1) / 2; };
  return c3(v[2]) + c2(v[1]) + v[0];
}

// --- PairBits ------------------------------------------------------------------

PairBits::PairBits(Vertex n) : n_(n), words_((pair_count(n) + 63) / 64, 0) {}

std::size_t PairBits::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void PairBits::trim() noexcept {
  const std::size_t used = size() & 63;
  if (used != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << used) - 1;
}

// --- Coloring ------------------------------------------------------------------

Coloring::Coloring(Vertex n) : bits_(n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "a coloring needs at least 2 vertices");
}

Coloring::Coloring(Vertex n, std::initializer_list<Pair> ones) : Coloring(n) {
  for (const Pair& p : ones) set(p.lo, p.hi, 1);
}

Coloring Coloring::from_ones(Vertex n, std::span<const Pair> ones) {
  Coloring phi(n);
  for (const Pair& p : ones) phi.set(p.lo, p.hi, 1);
  return phi;
}

Coloring Coloring::constant(Vertex n, int color) {
  Coloring phi(n);
  if (color != 0) {
    for (auto& w : phi.bits_.words()) w = ~std::uint64_t{0};
    phi.bits_.trim();
  }
  return phi;
}

Coloring Coloring::from_bits(PairBits bits) {
  if (bits.n() < 2) throw Error(ErrorKind::TooSmall, "a coloring needs at least 2 vertices");
  Coloring phi;
  phi.bits_ = std::move(bits);
  phi.bits_.trim();
  return phi;
}

void Coloring::set(Vertex x, Vertex y, int color) { bits_.assign(pair_index(n(), x, y), color != 0); }

// --- EdgeSet -------------------------------------------------------------------

EdgeSet::EdgeSet(Vertex n) : bits_(n) {}

EdgeSet::EdgeSet(Vertex n, std::initializer_list<Pair> members) : bits_(n) {
  for (const Pair& p : members) insert(p.lo, p.hi);
}

EdgeSet EdgeSet::from_pairs(Vertex n, std::span<const Pair> members) {
  EdgeSet edges(n);
  for (const Pair& p : members) edges.insert(p.lo, p.hi);
  return edges;
}

EdgeSet EdgeSet::from_bits(PairBits bits) {
  EdgeSet edges;
  edges.bits_ = std::move(bits);
  edges.bits_.trim();
  return edges;
}

EdgeSet EdgeSet::all_pairs(Vertex n) { return complement(EdgeSet(n)); }

std::vector<Pair> EdgeSet::members() const {
  std::vector<Pair> out;
  const auto words = bits_.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      out.push_back(pair_at(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

// --- HomSignature --------------------------------------------------------------

HomSignature::HomSignature(Vertex n, std::vector<HomClass> classes) : n_(n), classes_(std::move(classes)) {
  if (classes_.size() != triple_count(n_)) {
    throw Error(ErrorKind::Dimension, "signature length does not match triple count");
  }
}

HomClass HomSignature::at(Vertex x, Vertex y, Vertex z) const {
  if (x >= n_ || y >= n_ || z >= n_) throw Error(ErrorKind::InvalidSubset, "triple outside vertex set");
  return classes_[triple_index(x, y, z)];
}

HomSignature HomSignature::color_swapped() const {
  std::vector<HomClass> out(classes_);
  for (auto& c : out) {
    if (c == HomClass::Hom0) {
      c = HomClass::Hom1;
    } else if (c == HomClass::Hom1) {
      c = HomClass::Hom0;
    }
  }
  return HomSignature(n_, std::move(out));
}

std::vector<bool> HomSignature::homogeneous_mask() const {
  std::vector<bool> out(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) out[i] = classes_[i] != HomClass::NonHom;
  return out;
}

HomSignature HomSignature::project(std::span<const Vertex> subset) const {
  const auto k = static_cast<Vertex>(subset.size());
  std::vector<HomClass> out(triple_count(k));
  for (Vertex c = 2; c < k; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a) out[triple_index(a, b, c)] = at(subset[a], subset[b], subset[c]);
  return HomSignature(k, std::move(out));
}

// --- views ---------------------------------------------------------------------

EdgeSet ones(const Coloring& phi) { return EdgeSet::from_bits(phi.bits()); }

EdgeSet zeros(const Coloring& phi) { return complement(ones(phi)); }

Coloring indicator(const EdgeSet& edges) { return Coloring::from_bits(edges.bits()); }

EdgeSet complement(const EdgeSet& edges) {
  PairBits bits = edges.bits();
  for (auto& w : bits.words()) w = ~w;
  return EdgeSet::from_bits(std::move(bits));
}

// --- operations ----------------------------------------------------------------

Coloring complement(const Coloring& phi) {
  PairBits bits = phi.bits();
  for (auto& w : bits.words()) w = ~w;
  return Coloring::from_bits(std::move(bits));
}

Coloring boolean_sum(const Coloring& phi, const Coloring& psi) {
  require_same_n(phi, psi);
  PairBits bits = phi.bits();
  auto out = bits.words();
  const auto other = psi.bits().words();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= other[i];
  return Coloring::from_bits(std::move(bits));
}

Coloring restrict(const Coloring& phi, std::span<const Vertex> subset) {
  if (subset.size() < 2) throw Error(ErrorKind::TooSmall, "restriction needs at least 2 vertices");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= phi.n()) throw Error(ErrorKind::InvalidSubset, "vertex outside the coloring");
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw Error(ErrorKind::InvalidSubset, "subset must be strictly increasing without duplicates");
    }
  }
  const auto k = static_cast<Vertex>(subset.size());
  Coloring out(k);
  for (Vertex j = 1; j < k; ++j)
    for (Vertex i = 0; i < j; ++i) out.set_index(pair_index(i, j), phi(subset[i], subset[j]));
  return out;
}

HomSignature hom_signature(const Coloring& phi) {
  const Vertex n = phi.n();
  require_hom_n(n);
  std::vector<HomClass> classes(triple_count(n), HomClass::NonHom);
  std::size_t t = 0;
  // colex triple order: z outermost, then y, then x
  for (Vertex z = 2; z < n; ++z) {
    for (Vertex y = 1; y < z; ++y) {
      const int yz = phi.at_index(pair_index(y, z));
      for (Vertex x = 0; x < y; ++x, ++t) {
        const int xy = phi.at_index(pair_index(x, y));
        const int xz = phi.at_index(pair_index(x, z));
        if (xy == xz && xz == yz) classes[t] = xy ? HomClass::Hom1 : HomClass::Hom0;
      }
    }
  }
  return HomSignature(n, std::move(classes));
}

bool is_homogeneous(const Coloring& phi, std::span<const Vertex> subset) {
  if (subset.size() < 2) return true;
  const int c = phi(subset[0], subset[1]);
  for (std::size_t j = 1; j < subset.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (phi(subset[i], subset[j]) != c) return false;
  return true;
}

namespace {

// Bron-Kerbosch with pivoting over 64-bit vertex masks.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::size_t min_size, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    if (static_cast<std::size_t>(std::popcount(r)) >= min_size) out.push_back(r);
    return;
  }
  if (static_cast<std::size_t>(std::popcount(r | p)) < min_size) return;
  const std::uint64_t px = p | x;
  Vertex pivot = static_cast<Vertex>(std::countr_zero(px));
  int best = -1;
  for (std::uint64_t m = px; m != 0; m &= m - 1) {
    const auto u = static_cast<Vertex>(std::countr_zero(m));
    const int deg = std::popcount(p & adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  for (std::uint64_t m = p & ~adj[pivot]; m != 0; m &= m - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(m));
    const std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], min_size, out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<HomSet> hom_sets(const Coloring& phi, std::size_t min_size) {
  const Vertex n = phi.n();
  require_hom_n(n);
  if (min_size < 3) throw Error(ErrorKind::TooSmall, "homogeneous sets have at least 3 vertices");
  if (n > 64) throw Error(ErrorKind::Dimension, "hom_sets supports at most 64 vertices");
  std::vector<HomSet> out;
  for (int color = 0; color <= 1; ++color) {
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex y = 1; y < n; ++y)
      for (Vertex x = 0; x < y; ++x)
        if (phi.at_index(pair_index(x, y)) == color) {
          adj[x] |= std::uint64_t{1} << y;
          adj[y] |= std::uint64_t{1} << x;
        }
    const std::uint64_t everyone = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> cliques;
    bron_kerbosch(adj, 0, everyone, 0, min_size, cliques);
    for (std::uint64_t mask : cliques) {
      HomSet h{{}, color};
      for (std::uint64_t m = mask; m != 0; m &= m - 1) h.vertices.push_back(static_cast<Vertex>(std::countr_zero(m)));
      out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), [](const HomSet& a, const HomSet& b) {
    if (a.color != b.color) return a.color < b.color;
    return a.vertices < b.vertices;
  });
  return out;
}

bool h_equivalent(const Coloring& phi, const Coloring& psi) {
  require_same_n(phi, psi);
  return hom_signature(phi).homogeneous_mask() == hom_signature(psi).homogeneous_mask();
}

VertexSet all_vertices(Vertex n) {
  VertexSet v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace homrec
