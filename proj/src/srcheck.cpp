#include "homrec/srcheck.hpp"

#include <algorithm>
#include <bit>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/parallel.hpp"

namespace homrec {

std::vector<VertexSet> subsets_colex(Vertex n, std::size_t k) {
  std::vector<VertexSet> out;
  if (k > n) return out;
  if (k == 0) return {VertexSet{}};
  // colex successor on combinations
  VertexSet c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    out.push_back(c);
    std::size_t i = 0;
    while (i + 1 < k && c[i] + 1 == c[i + 1]) ++i;
    if (c[i] + 1 >= n && i + 1 == k) break;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<Vertex>(j);
  }
  return out;
}

std::optional<Vertex> e_property_witness(const Coloring& phi, std::span<const Vertex> F, int color) {
  if (F.empty()) throw Error(ErrorKind::InvalidSubset, "F must be nonempty");
  std::vector<bool> in_F(phi.n(), false);
  for (Vertex x : F) {
    if (x >= phi.n()) throw Error(ErrorKind::InvalidSubset, "vertex outside the coloring");
    if (in_F[x]) throw Error(ErrorKind::InvalidSubset, "repeated vertex in F");
    in_F[x] = true;
  }
  for (Vertex z = 0; z < phi.n(); ++z) {
    if (in_F[z]) continue;
    if (std::all_of(F.begin(), F.end(), [&](Vertex x) { return phi(x, z) == color; })) return z;
  }
  return std::nullopt;
}

namespace {

std::uint64_t vmask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

SRReport is_SR_finite(const Coloring& phi, Vertex max_G, const SearchBudget& budget) {
  if (phi.n() < 4) throw Error(ErrorKind::TooSmall, "SR needs at least 4 vertices");
  if (phi.n() > 64) throw Error(ErrorKind::Dimension, "SR check supports at most 64 vertices");
  if (max_G > budget.ceiling || max_G > kHardExhaustiveCeiling) {
    throw Error(ErrorKind::Budget, "max_G exceeds the exhaustive ceiling");
  }
  if (max_G < 4) throw Error(ErrorKind::InvalidLength, "max_G must be at least 4");

  const auto quads = subsets_colex(phi.n(), 4);
  std::vector<std::optional<VertexSet>> found(quads.size());
  const SearchBudget inner{budget.max_nodes, max_G, 1};

  for (std::size_t k = 4; k <= std::min<Vertex>(max_G, phi.n()); ++k) {
    std::vector<std::uint64_t> open;
    for (std::size_t i = 0; i < quads.size(); ++i)
      if (!found[i]) open.push_back(vmask(quads[i]));
    if (open.empty()) break;

    // candidate G of this size that contain some unresolved F
    std::vector<VertexSet> candidates;
    for (auto& g : subsets_colex(phi.n(), k)) {
      const std::uint64_t gm = vmask(g);
      if (std::any_of(open.begin(), open.end(), [&](std::uint64_t f) { return (f & gm) == f; })) {
        candidates.push_back(std::move(g));
      }
    }
    std::vector<Verdict> verdicts(candidates.size(), Verdict::Unknown);
    parallel_for(candidates.size(), budget.threads,
                 [&](std::size_t i) { verdicts[i] = in_R(restrict(phi, candidates[i]), inner).verdict; });
    for (std::size_t q = 0; q < quads.size(); ++q) {
      if (found[q]) continue;
      const std::uint64_t fm = vmask(quads[q]);
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (verdicts[i] == Verdict::InR && (vmask(candidates[i]) & fm) == fm) {
          found[q] = candidates[i];
          break;
        }
      }
    }
  }

  SRReport report;
  for (std::size_t q = 0; q < quads.size(); ++q) {
    if (found[q]) {
      report.per_F.emplace(quads[q], *found[q]);
    } else if (report.holds) {
      report.holds = false;
      report.failing_F = quads[q];
    }
  }
  return report;
}

std::vector<Theorem63Witness> theorem63_witnesses(const Coloring& phi, unsigned threads) {
  if (phi.n() < 7) throw Error(ErrorKind::TooSmall, "the 7-set condition needs at least 7 vertices");
  const auto quads = subsets_colex(phi.n(), 4);
  std::vector<std::vector<Theorem63Witness>> slots(quads.size());

  parallel_for(quads.size(), threads, [&](std::size_t qi) {
    const VertexSet& F = quads[qi];
    const Coloring local = restrict(phi, F);
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = 1; m < 63; ++m)
      if (is_valid_difference(local, from_mask(4, m))) candidates.push_back(m);
    std::sort(candidates.begin(), candidates.end(), size_colex_less);
    if (candidates.empty()) return;

    // all 7-sets containing F
    VertexSet rest;
    for (Vertex v = 0; v < phi.n(); ++v)
      if (!std::binary_search(F.begin(), F.end(), v)) rest.push_back(v);
    std::vector<VertexSet> Gs;
    for (const auto& extra : subsets_colex(static_cast<Vertex>(rest.size()), 3)) {
      VertexSet G = F;
      for (Vertex e : extra) G.push_back(rest[e]);
      std::sort(G.begin(), G.end());
      Gs.push_back(std::move(G));
    }

    for (std::uint64_t m : candidates) {
      const EdgeSet local_D = from_mask(4, m);
      EdgeSet global_D(phi.n());
      for (const Pair& p : local_D.members()) global_D.insert(F[p.lo], F[p.hi]);

      bool survives = true;
      for (const VertexSet& G : Gs) {
        EdgeSet in_G(7);
        for (const Pair& p : global_D.members()) {
          const auto lo = std::lower_bound(G.begin(), G.end(), p.lo) - G.begin();
          const auto hi = std::lower_bound(G.begin(), G.end(), p.hi) - G.begin();
          in_G.insert(static_cast<Vertex>(lo), static_cast<Vertex>(hi));
        }
        if (!is_valid_difference(restrict(phi, G), in_G)) {
          survives = false;
          break;
        }
      }
      if (survives) slots[qi].push_back({F, global_D, Gs.size()});
    }
  });

  std::vector<Theorem63Witness> out;
  for (auto& s : slots)
    for (auto& w : s) out.push_back(std::move(w));
  return out;
}

std::optional<Theorem63Witness> theorem63_condition_c(const Coloring& phi, unsigned threads) {
  auto all = theorem63_witnesses(phi, threads);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

Coloring alpha_coloring(Vertex n, int seed) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "alpha needs at least 3 vertices");
  if (seed != 0 && seed != 1) throw Error(ErrorKind::InvalidPair, "seed must be 0 or 1");
  std::vector<int> value(pair_count(n), -1);
  auto assign = [&](Vertex x, Vertex y, int c) {
    int& slot = value[pair_index(x, y)];
    if (slot != -1 && slot != c) {
      throw Error(ErrorKind::Precondition,
                  "alpha recurrences disagree on {" + std::to_string(x) + "," + std::to_string(y) + "}");
    }
    slot = c;
  };
  assign(0, 1, seed);
  assign(0, 2, seed);
  assign(1, 2, 1 - seed);
  for (Vertex m = 2; m + 1 < n; ++m) {
    const int next = 1 - value[pair_index(0, m)];
    assign(m, m + 1, next);
    assign(0, m + 1, next);
  }
  for (Vertex k = 1; k < n; ++k)
    for (Vertex m = k + 1; m < n; ++m) assign(k, m, 1 - value[pair_index(0, k)]);

  Coloring out(n);
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == -1) throw Error(ErrorKind::Precondition, "alpha left a pair undetermined");
    out.set_index(i, value[i]);
  }
  return out;
}

AlphaCheck verify_alpha(Vertex nmax, unsigned threads) {
  if (nmax < 8) throw Error(ErrorKind::TooSmall, "verify_alpha needs nmax >= 8");
  AlphaCheck report;
  auto record = [&](Vertex n, char family, bool ok, const std::string& detail) {
    report.passed = report.passed && ok;
    std::string line = std::string(ok ? "PASS" : "FAIL") + " n=" + std::to_string(n) + " (" + family + ")";
    if (!detail.empty()) line += " " + detail;
    report.log.push_back(std::move(line));
  };
  auto pair_text = [](Vertex x, Vertex y) { return "{" + std::to_string(x) + "," + std::to_string(y) + "}"; };

  for (Vertex n = 5; n <= nmax; ++n) {
    const Coloring a = alpha_coloring(n);

    const auto cycles = find_critical_cycles(a, {}, threads);
    record(n, 'a', cycles.empty(),
           cycles.empty() ? "" : "critical cycle on " + pair_text(cycles[0].quad[0], cycles[0].quad[1]) + "...");

    record(n, 'b', is_critical_pair(a, {0, n - 1}), "");

    std::string bad_c;
    for (Vertex y = 3; y + 4 <= n && bad_c.empty(); ++y) {
      const auto B = b_set(a, {0, y}).members;
      for (Vertex z : {y + 1, y + 3})
        if (!std::binary_search(B.begin(), B.end(), z)) bad_c = std::to_string(z) + " not in B" + pair_text(0, y);
    }
    record(n, 'c', bad_c.empty(), bad_c);

    std::string bad_d;
    for (Vertex y = 4; y < n && bad_d.empty(); ++y)
      for (Vertex x = 3; x < y && bad_d.empty(); ++x) {
        const auto B = b_set(a, {x, y}).members;
        if (!std::binary_search(B.begin(), B.end(), 1u) || !std::binary_search(B.begin(), B.end(), 2u)) {
          bad_d = "1,2 not both in B" + pair_text(x, y);
        }
      }
    record(n, 'd', bad_d.empty(), bad_d);

    std::string bad_e;
    for (Vertex z = 3; z < n && bad_e.empty(); ++z) {
      const Vertex t[3] = {1, 2, z};
      if (!is_homogeneous(a, t)) bad_e = "{1,2," + std::to_string(z) + "} not homogeneous";
    }
    record(n, 'e', bad_e.empty(), bad_e);
  }
  return report;
}

}  // namespace homrec
