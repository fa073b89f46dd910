#include "homrec/reconstruct.hpp"

#include <algorithm>
#include <bit>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/parallel.hpp"

namespace homrec {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::InR: return "InR";
    case Verdict::NotInR: return "NotInR";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(RMode m) { return m == RMode::Exhaustive ? "exhaustive" : "structural"; }

// --- mask helpers --------------------------------------------------------------

std::uint64_t to_mask(const EdgeSet& edges) {
  if (edges.n() > kMaxMaskVertices) throw Error(ErrorKind::Dimension, "edge set too large for a 64-bit mask");
  const auto words = edges.bits().words();
  return words.empty() ? 0 : words[0];
}

EdgeSet from_mask(Vertex n, std::uint64_t mask) {
  if (n > kMaxMaskVertices) throw Error(ErrorKind::Dimension, "edge set too large for a 64-bit mask");
  PairBits bits(n);
  if (!bits.words().empty()) bits.words()[0] = mask;
  return EdgeSet::from_bits(std::move(bits));
}

bool size_colex_less(std::uint64_t a, std::uint64_t b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

ReconstructionWitness make_witness(const EdgeSet& difference) {
  const bool trivial = difference.empty() || difference.size() == pair_count(difference.n());
  return ReconstructionWitness{difference, components(difference), trivial};
}

// --- validity ------------------------------------------------------------------

bool is_valid_difference(const Coloring& phi, const EdgeSet& diff) {
  if (diff.n() != phi.n()) throw Error(ErrorKind::Dimension, "difference set on a different vertex count");
  if (phi.n() < 3) throw Error(ErrorKind::TooSmall, "validity needs at least 3 vertices");
  const Vertex n = phi.n();
  for (const Pair& e : diff.members()) {
    const Vertex y = e.lo;
    const Vertex z = e.hi;
    for (Vertex x = 0; x < n; ++x) {
      if (x == y || x == z) continue;
      const bool xy = diff.contains_index(pair_index(x, y));
      const bool xz = diff.contains_index(pair_index(x, z));
      if (!xy && !xz) {
        // lone D-edge {y,z}: apex x
        if (phi(x, y) == phi(x, z)) return false;
      } else if (xy != xz) {
        // two D-edges meeting at the endpoint shared with the marked one
        const Vertex apex = xy ? y : z;
        if (phi(apex, x) == phi(y, z)) return false;
      }
    }
  }
  return true;
}

// --- search engine -------------------------------------------------------------

DifferenceSearch::DifferenceSearch(const Coloring& phi) : n_(phi.n()), pairs_(phi.pair_count()) {
  if (n_ < 3) throw Error(ErrorKind::TooSmall, "search needs at least 3 vertices");
  if (n_ > kMaxMaskVertices) {
    throw Error(ErrorKind::Budget, "exhaustive search supports at most " + std::to_string(kMaxMaskVertices) +
                                       " vertices");
  }
  by_last_.resize(pairs_);
  for (Vertex z = 2; z < n_; ++z)
    for (Vertex y = 1; y < z; ++y) {
      const std::size_t last = pair_index(y, z);
      for (Vertex x = 0; x < y; ++x) {
        const std::size_t ixy = pair_index(x, y);
        const std::size_t ixz = pair_index(x, z);
        const int f0 = phi.at_index(ixy);
        const int f1 = phi.at_index(ixz);
        const int f2 = phi.at_index(last);
        // pattern p = d0 | d1<<1 | d2<<2; the two edges sharing a D-bit must differ in phi
        std::uint8_t allowed = 0x81;                // p = 0, 7
        if (f0 != f1) allowed |= (1u << 3) | (1u << 4);  // e2 is the odd one out
        if (f0 != f2) allowed |= (1u << 2) | (1u << 5);  // e1 odd
        if (f1 != f2) allowed |= (1u << 1) | (1u << 6);  // e0 odd
        by_last_[last].push_back(
            {static_cast<std::uint8_t>(ixy), static_cast<std::uint8_t>(ixz), allowed});
      }
    }
}

bool DifferenceSearch::consistent(std::size_t k, std::uint64_t mask) const {
  const unsigned top = static_cast<unsigned>((mask >> k) & 1u) << 2;
  for (const Constraint& c : by_last_[k]) {
    const unsigned p = static_cast<unsigned>((mask >> c.first) & 1u) |
                       (static_cast<unsigned>((mask >> c.second) & 1u) << 1) | top;
    if (((c.allowed >> p) & 1u) == 0) return false;
  }
  return true;
}

namespace {

struct ShardState {
  std::vector<std::uint64_t> found;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

}  // namespace

DifferenceSearch::Result DifferenceSearch::run(std::size_t bound, std::uint64_t node_budget,
                                               unsigned threads) const {
  const std::size_t prefix = std::min<std::size_t>(pairs_, 8);
  const std::size_t shard_count = std::size_t{1} << prefix;
  const std::uint64_t full = (std::uint64_t{1} << pairs_) - 1;
  const std::uint64_t shard_budget = node_budget == 0 ? 0 : std::max<std::uint64_t>(1, node_budget / shard_count);

  std::vector<ShardState> shards(shard_count);
  parallel_for(shard_count, threads, [&](std::size_t s) {
    ShardState& st = shards[s];
    const std::uint64_t start = s;
    if (static_cast<std::size_t>(std::popcount(start)) > bound) return;
    for (std::size_t k = 0; k < prefix; ++k)
      if (!consistent(k, start)) return;

    // explicit-stack DFS over pairs prefix..pairs_-1
    struct Frame {
      std::uint64_t mask;
      std::size_t k;
    };
    std::vector<Frame> stack{{start, prefix}};
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (shard_budget != 0 && ++st.nodes > shard_budget) {
        st.aborted = true;
        return;
      }
      if (f.k == pairs_) {
        if (f.mask != 0 && f.mask != full) st.found.push_back(f.mask);
        continue;
      }
      const std::uint64_t with = f.mask | (std::uint64_t{1} << f.k);
      // push the 1-branch first so the 0-branch is explored first
      if (static_cast<std::size_t>(std::popcount(with)) <= bound && consistent(f.k, with)) {
        stack.push_back({with, f.k + 1});
      }
      if (consistent(f.k, f.mask)) stack.push_back({f.mask, f.k + 1});
    }
  });

  Result out;
  for (auto& st : shards) {
    out.complete = out.complete && !st.aborted;
    out.masks.insert(out.masks.end(), st.found.begin(), st.found.end());
  }
  std::sort(out.masks.begin(), out.masks.end(), size_colex_less);
  return out;
}

DifferenceSearch::Result DifferenceSearch::all(std::optional<std::size_t> max_size, std::uint64_t node_budget,
                                               unsigned threads) const {
  return run(max_size.value_or(pairs_), node_budget, threads);
}

DifferenceSearch::Result DifferenceSearch::minimum(std::uint64_t node_budget, unsigned threads) const {
  // Cheap iterative deepening over the small sizes, then one unbounded pass.
  constexpr std::size_t kDeepening = 4;
  for (std::size_t b = 1; b <= std::min(kDeepening, pairs_ - 1); ++b) {
    Result level = run(b, node_budget, threads);
    if (!level.masks.empty() || !level.complete) return level;
  }
  Result rest = run(pairs_ - 1, node_budget, threads);
  if (!rest.masks.empty()) {
    const int smallest = std::popcount(rest.masks.front());
    std::erase_if(rest.masks, [&](std::uint64_t m) { return std::popcount(m) != smallest; });
  }
  return rest;
}

// --- operations ----------------------------------------------------------------

namespace {

std::vector<ReconstructionWitness> to_witnesses(Vertex n, const std::vector<std::uint64_t>& masks) {
  std::vector<ReconstructionWitness> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(make_witness(from_mask(n, m)));
  return out;
}

void check_budget(const SearchBudget& budget) {
  if (budget.ceiling > kHardExhaustiveCeiling) {
    throw Error(ErrorKind::Budget, "exhaustive ceiling above the hard cap of " +
                                       std::to_string(kHardExhaustiveCeiling) + " vertices");
  }
}

// Critical pairs first, then critical cycles; both are sound witnesses.
std::optional<ReconstructionWitness> structural_witness(const Coloring& phi) {
  const auto pairs = find_critical_pairs(phi);
  if (!pairs.empty()) return make_witness(EdgeSet(phi.n(), {pairs.front()}));
  if (phi.n() >= 5) {
    const auto cycles = find_critical_cycles(phi);
    if (!cycles.empty()) return make_witness(cycles.front().edges);
  }
  return std::nullopt;
}

}  // namespace

std::vector<ReconstructionWitness> enumerate_reconstructions(const Coloring& phi, std::optional<std::size_t> max_size,
                                                             unsigned threads) {
  const DifferenceSearch search(phi);
  return to_witnesses(phi.n(), search.all(max_size, 0, threads).masks);
}

RMembership in_R(const Coloring& phi, const SearchBudget& budget) {
  check_budget(budget);
  if (phi.n() < 3) throw Error(ErrorKind::TooSmall, "membership needs at least 3 vertices");
  if (phi.n() > budget.ceiling) {
    if (auto w = structural_witness(phi)) return {Verdict::NotInR, std::move(w)};
    return {Verdict::Unknown, std::nullopt};
  }
  const auto result = DifferenceSearch(phi).minimum(budget.max_nodes, budget.threads);
  if (!result.masks.empty()) return {Verdict::NotInR, make_witness(from_mask(phi.n(), result.masks.front()))};
  return {result.complete ? Verdict::InR : Verdict::Unknown, std::nullopt};
}

RValueReport r_value(const Coloring& phi, RMode mode, const SearchBudget& budget) {
  check_budget(budget);
  if (phi.n() < 3) throw Error(ErrorKind::TooSmall, "r needs at least 3 vertices");
  RValueReport report;
  report.mode = mode;

  if (mode == RMode::StructuralOnly) {
    const auto pairs = find_critical_pairs(phi);
    if (!pairs.empty()) {
      report.status = RStatus::Finite;
      report.r = 1;
      report.complete = true;  // size-1 valid differences are exactly the critical pairs
      for (const Pair& p : pairs) report.witnesses.push_back(make_witness(EdgeSet(phi.n(), {p})));
      return report;
    }
    if (phi.n() >= 5) {
      const auto cycles = find_critical_cycles(phi);
      if (!cycles.empty()) {
        report.status = RStatus::Finite;
        report.r = 4;
        report.complete = false;  // minimality only holds on vertex sets of size >= R(7)
        for (const auto& c : cycles) report.witnesses.push_back(make_witness(c.edges));
        std::sort(report.witnesses.begin(), report.witnesses.end(), [](const auto& a, const auto& b) {
          return a.difference.members() < b.difference.members();
        });
        return report;
      }
    }
    report.status = RStatus::Unknown;
    return report;
  }

  if (phi.n() > budget.ceiling) {
    report.status = RStatus::Unknown;
    return report;
  }
  auto result = DifferenceSearch(phi).minimum(budget.max_nodes, budget.threads);
  report.complete = result.complete;
  if (!result.masks.empty()) {
    report.status = RStatus::Finite;
    report.r = static_cast<std::size_t>(std::popcount(result.masks.front()));
    report.witnesses = to_witnesses(phi.n(), result.masks);
  } else {
    report.status = result.complete ? RStatus::NotApplicable : RStatus::Unknown;
  }
  return report;
}

std::vector<ReconstructionWitness> minimal_reconstructions(const Coloring& phi, const SearchBudget& budget) {
  auto report = r_value(phi, RMode::Exhaustive, budget);
  if (report.status == RStatus::NotApplicable) throw Error(ErrorKind::NotApplicable, "coloring is in R");
  if (!report.complete) throw Error(ErrorKind::Budget, "search did not complete within the budget");
  return std::move(report.witnesses);
}

EdgeSet restrict_edges(const EdgeSet& diff, std::span<const Vertex> vertices) {
  EdgeSet out(diff.n());
  for (std::size_t j = 1; j < vertices.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (diff.contains(vertices[i], vertices[j])) out.insert(vertices[i], vertices[j]);
  return out;
}

bool component_restriction_valid(const Coloring& phi, const EdgeSet& diff, const Component& component) {
  if (!is_valid_difference(phi, diff)) throw Error(ErrorKind::Precondition, "difference set is not valid");
  VertexSet wanted = component.vertices;
  std::sort(wanted.begin(), wanted.end());
  bool found = false;
  for (const Component& c : components(diff)) {
    VertexSet have = c.vertices;
    std::sort(have.begin(), have.end());
    found = found || have == wanted;
  }
  if (!found) throw Error(ErrorKind::Precondition, "not a component of the difference set");
  return is_valid_difference(phi, restrict_edges(diff, wanted));
}

}  // namespace homrec
