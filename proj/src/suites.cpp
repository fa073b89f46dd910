#include "homrec/suites.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/fixtures.hpp"
#include "homrec/parallel.hpp"
#include "homrec/reconstruct.hpp"
#include "homrec/serialize.hpp"
#include "homrec/srcheck.hpp"
#include "homrec/structure.hpp"

namespace homrec {

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first;
  std::map<std::string, std::size_t> counts;

  void fail(const std::string& message) {
    ++failures;
    if (!first) first = message;
  }
  void merge(const Tally& other) {
    cases += other.cases;
    failures += other.failures;
    if (!first && other.first) first = other.first;
    for (const auto& [k, v] : other.counts) counts[k] += v;
  }
};

template <class Fn>
Tally over(const std::vector<Coloring>& colorings, unsigned threads, Fn&& fn) {
  std::vector<Tally> slots(colorings.size());
  parallel_for(colorings.size(), threads, [&](std::size_t i) { fn(colorings[i], slots[i]); });
  Tally total;
  for (const auto& t : slots) total.merge(t);
  return total;
}

std::string describe(const Coloring& phi) { return "phi=" + to_json(phi).dump(); }
std::string describe(const Coloring& phi, const EdgeSet& d) { return describe(phi) + " D=" + to_json(d).dump(); }

std::vector<EdgeSet> valid_differences(const Coloring& phi) {
  const std::optional<std::size_t> bound = phi.n() <= 5 ? std::nullopt : std::optional<std::size_t>(8);
  std::vector<EdgeSet> out;
  for (std::uint64_t m : DifferenceSearch(phi).all(bound).masks) out.push_back(from_mask(phi.n(), m));
  return out;
}

std::string scale(const SuiteOptions& o) {
  return "n=" + std::to_string(o.n) + " " +
         (o.exhaustive ? std::string("exhaustive") : "sampled=" + std::to_string(o.samples) + " seed=" +
                                                         std::to_string(o.seed));
}

SuiteResult finish(std::string name, const Tally& t, std::vector<std::string> lines) {
  SuiteResult r;
  r.suite = std::move(name);
  r.cases = t.cases;
  r.passed = t.failures == 0;
  r.lines = std::move(lines);
  for (const auto& [k, v] : t.counts) r.lines.push_back("  " + k + ": " + std::to_string(v));
  r.lines.push_back("cases=" + std::to_string(t.cases) + " failures=" + std::to_string(t.failures));
  if (t.first) {
    r.counterexample = t.first;
    r.lines.push_back("first counterexample: " + *t.first);
  }
  r.lines.push_back(r.passed ? "PASS" : "FAIL");
  return r;
}

// --- suites --------------------------------------------------------------------

SuiteResult oracle_suite(const SuiteOptions& o) {
  if (o.exhaustive && o.n > 5) throw Error(ErrorKind::Budget, "exhaustive oracle sweep is limited to n <= 5");
  if (o.n < 3 || o.n > kMaxMaskVertices) throw Error(ErrorKind::InvalidLength, "oracle suite needs 3 <= n <= 11");
  auto check = [](const Coloring& phi, const EdgeSet& d, Tally& t) {
    ++t.cases;
    const bool local = is_valid_difference(phi, d);
    const bool oracle = h_equivalent(phi, boolean_sum(phi, indicator(d)));
    if (local) ++t.counts["valid"];
    if (local != oracle) t.fail(describe(phi, d) + (local ? " local=valid oracle=invalid" : " local=invalid oracle=valid"));
  };

  Tally t;
  if (o.exhaustive) {
    const auto all = sweep_colorings(o.n, true, 0, 0);
    const std::uint64_t subsets = std::uint64_t{1} << pair_count(o.n);
    t = over(all, o.threads, [&](const Coloring& phi, Tally& slot) {
      for (std::uint64_t m = 0; m < subsets; ++m) check(phi, from_mask(o.n, m), slot);
    });
  } else {
    const auto sample = sweep_colorings(o.n, false, o.samples, o.seed);
    t = over(sample, o.threads, [&](const Coloring& phi, Tally& slot) {
      // one random difference per coloring plus every structural one
      std::mt19937_64 rng(to_mask(ones(phi)) ^ (o.seed * 0x9e3779b97f4a7c15ull));
      const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      EdgeSet d(phi.n());
      for (std::size_t i = 0; i < phi.pair_count(); ++i)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) d.insert(pair_at(i).lo, pair_at(i).hi);
      check(phi, d, slot);
      for (const Pair& cp : find_critical_pairs(phi)) check(phi, EdgeSet(phi.n(), {cp}), slot);
      for (const auto& w : find_critical_cycles(phi)) check(phi, w.edges, slot);
    });
  }
  return finish("oracle", t, {"suite=oracle " + scale(o)});
}

SuiteResult claws_suite(const SuiteOptions& o) {
  const auto colorings = sweep_colorings(o.n, o.exhaustive, o.samples, o.seed);
  const Tally t = over(colorings, o.threads, [](const Coloring& phi, Tally& slot) {
    for (const EdgeSet& d : valid_differences(phi)) {
      ++slot.cases;
      if (auto c = find_claw(d)) slot.fail(describe(phi, d) + " claw in D1 at apex " + std::to_string(c->apex));
      if (auto c = find_claw(complement(d))) slot.fail(describe(phi, d) + " claw in D0 at apex " + std::to_string(c->apex));
      const auto uniform = hom_color_uniform(indicator(d));
      if (!uniform || *uniform != 0) continue;
      ++slot.counts["sum homogeneous color 0"];
      if (max_degree(d) > 2) slot.fail(describe(phi, d) + " degree above 2");
      for (const Component& c : components(d)) {
        if (c.kind != ComponentKind::Path && c.kind != ComponentKind::EvenCycle) {
          slot.fail(describe(phi, d) + " component of kind " + std::string(to_string(c.kind)));
        }
      }
    }
  });
  return finish("claws", t, {"suite=claws " + scale(o)});
}

SuiteResult parity_suite(const SuiteOptions& o) {
  const auto colorings = sweep_colorings(o.n, o.exhaustive, o.samples, o.seed);
  const Tally t = over(colorings, o.threads, [](const Coloring& phi, Tally& slot) {
    for (const EdgeSet& d : valid_differences(phi)) {
      ++slot.cases;
      const auto report = check_parity_lemmas(phi, boolean_sum(phi, indicator(d)));
      slot.counts["induced paths"] += report.paths_checked;
      if (!report.passed) slot.fail(describe(phi, d) + " " + report.violation->lemma + ": " + report.violation->detail);
    }
  });
  return finish("parity", t, {"suite=parity " + scale(o)});
}

SuiteResult partition_suite(const SuiteOptions&) {
  Tally t;
  for (const bool cycle : {false, true})
    for (const Vertex m : {6u, 8u, 10u, 12u})
      for (int c = 0; c <= 1; ++c)
        for (int phase = 0; phase <= 1; ++phase) {
          ++t.cases;
          const auto [phi, psi] = cycle ? make_cycle_pair(m, c, phase) : make_path_pair(m, c, phase);
          const std::string tag = std::string(cycle ? "cycle" : "path") + "(" + std::to_string(m) + "," +
                                  std::to_string(c) + "," + std::to_string(phase) + ")";
          if (!h_equivalent(phi, psi)) {
            t.fail(tag + " not H-equivalent");
            continue;
          }
          const auto comps = components(ones(boolean_sum(phi, psi)));
          if (comps.size() != 1) {
            t.fail(tag + " sum is not a single component");
            continue;
          }
          try {
            const HomPartition part = hom_partition(phi, comps[0]);
            VertexSet joined = part.even_class;
            joined.insert(joined.end(), part.odd_class.begin(), part.odd_class.end());
            std::sort(joined.begin(), joined.end());
            if (joined != all_vertices(m) || part.even_class.size() != m / 2) t.fail(tag + " classes do not split the component");
            if (part.color != c) t.fail(tag + " class color differs from c");
            const auto maximal = hom_sets(phi);
            const bool exactly_two = maximal.size() == 2 && maximal[0].color == c && maximal[1].color == c;
            if (!exactly_two) t.fail(tag + " expected exactly two maximal homogeneous sets");
          } catch (const Error& e) {
            t.fail(tag + " " + e.what());
          }
        }
  return finish("partition-theorem", t, {"suite=partition-theorem m=6,8,10,12 c=0,1 phase=0,1"});
}

SuiteResult r_sweep_suite(const SuiteOptions& o) {
  const auto colorings = sweep_colorings(o.n, o.exhaustive, o.samples, o.seed);
  const Tally t = over(colorings, o.threads, [](const Coloring& phi, Tally& slot) {
    ++slot.cases;
    SearchBudget budget;
    budget.ceiling = kHardExhaustiveCeiling;
    const RValueReport report = r_value(phi, RMode::Exhaustive, budget);
    if (!report.complete) {
      slot.fail(describe(phi) + " search incomplete");
      return;
    }
    const bool has_pair = !find_critical_pairs(phi).empty();
    if (!report.r) {
      ++slot.counts["in R"];
      if (has_pair) slot.fail(describe(phi) + " in R but has a critical pair");
      return;
    }
    const std::size_t r = *report.r;
    ++slot.counts["r=" + std::to_string(r)];
    if (r == 2) slot.fail(describe(phi) + " r = 2");
    if ((r == 1) != has_pair) slot.fail(describe(phi) + " r = 1 disagrees with critical-pair existence");
    for (const auto& w : report.witnesses)
      if (w.components.size() != 1) slot.fail(describe(phi, w.difference) + " minimal witness is disconnected");
  });
  return finish("r-sweep", t, {"suite=r-sweep " + scale(o), "r distribution:"});
}

SuiteResult connectivity_suite(const SuiteOptions& o) {
  const auto colorings = sweep_colorings(o.n, o.exhaustive, o.samples, o.seed);
  const Tally t = over(colorings, o.threads, [](const Coloring& phi, Tally& slot) {
    const auto diffs = valid_differences(phi);
    const bool has_pair = !find_critical_pairs(phi).empty();
    for (const EdgeSet& d : diffs) {
      ++slot.cases;
      const auto comps = components(d);
      if (comps.size() > 1) {
        ++slot.counts["multi-component differences"];
        for (const Component& c : comps)
          if (!component_restriction_valid(phi, d, c)) slot.fail(describe(phi, d) + " component restriction invalid");
      }
      const auto uniform = hom_color_uniform(indicator(d));
      if (uniform && *uniform == 0) {
        const bool non_square = std::any_of(comps.begin(), comps.end(), [](const Component& c) {
          return !(c.kind == ComponentKind::EvenCycle && c.vertices.size() == 4);
        });
        if (non_square) {
          ++slot.counts["color-0 sums with a non-4-cycle component"];
          if (!has_pair) slot.fail(describe(phi, d) + " no critical pair despite a non-4-cycle component");
        }
      }
    }
    if (!diffs.empty()) {
      const std::size_t smallest = diffs.front().size();
      for (const EdgeSet& d : diffs)
        if (d.size() == smallest && components(d).size() != 1)
          slot.fail(describe(phi, d) + " minimal difference is disconnected");
    }
  });
  return finish("connectivity", t, {"suite=connectivity " + scale(o)});
}

SuiteResult alpha_suite(const SuiteOptions& o) {
  Tally t;
  const AlphaCheck check = verify_alpha(o.nmax, o.threads);
  std::vector<std::string> lines{"suite=alpha nmax=" + std::to_string(o.nmax)};
  for (const auto& l : check.log) {
    ++t.cases;
    lines.push_back(l);
    if (l.rfind("FAIL", 0) == 0) t.fail(l);
  }
  for (int seed = 0; seed <= 1; ++seed)
    for (Vertex n = 3; n <= o.nmax; ++n) {
      const Coloring big = alpha_coloring(n, seed);
      for (Vertex m = 3; m <= n; ++m) {
        ++t.cases;
        if (restrict(big, all_vertices(m)) != alpha_coloring(m, seed)) {
          t.fail("alpha(" + std::to_string(m) + ") != restrict(alpha(" + std::to_string(n) + ")), seed " +
                 std::to_string(seed));
        }
      }
    }
  return finish("alpha", t, std::move(lines));
}

SuiteResult theorem63_suite(const SuiteOptions& o) {
  std::vector<Coloring> colorings{fixtures::partition(8), alpha_coloring(9)};
  for (Vertex n = 7; n <= 9; ++n)
    for (std::size_t i = 0; i < o.samples; ++i) {
      const double density = 0.15 + 0.7 * static_cast<double>(i % 5) / 4.0;
      colorings.push_back(fixtures::random(n, density, o.seed + i));
    }

  Tally t = over(colorings, o.threads, [](const Coloring& phi, Tally& slot) {
    ++slot.cases;
    const auto witnesses = theorem63_witnesses(phi);
    if (!witnesses.empty()) ++slot.counts["colorings with a witness"];
    for (const auto& w : witnesses) {
      ++slot.counts["witnesses checked"];
      const Coloring psi = flip_reconstruction(phi, w.D);
      const bool trivial = w.D.empty() || w.D.size() == phi.pair_count();
      if (trivial || !h_equivalent(phi, psi)) slot.fail(describe(phi, w.D) + " global flip is not a non-trivial reconstruction");
    }
  });

  // The converse is only reported: below the Ramsey threshold it need not hold.
  const auto small = sweep_colorings(7, false, o.samples, o.seed);
  const Tally converse = over(small, o.threads, [](const Coloring& phi, Tally& slot) {
    if (in_R(phi).verdict != Verdict::NotInR) return;
    ++slot.counts["n=7 not in R"];
    if (theorem63_condition_c(phi)) ++slot.counts["n=7 not in R with a 7-set witness"];
  });
  for (const auto& [k, v] : converse.counts) t.counts["converse " + k] += v;
  return finish("theorem63", t, {"suite=theorem63 n=7,8,9 samples=" + std::to_string(o.samples) + " seed=" +
                                     std::to_string(o.seed) + " plus partition(8), alpha(9)"});
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"oracle",   "claws",        "parity", "partition-theorem",
                                                   "r-sweep",  "connectivity", "alpha",  "theorem63"};
  return names;
}

std::vector<Coloring> sweep_colorings(Vertex n, bool exhaustive, std::size_t samples, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "sweeps need at least 3 vertices");
  std::vector<Coloring> out;
  if (exhaustive) {
    if (n > 6) throw Error(ErrorKind::Budget, "exhaustive sweeps are limited to n <= 6");
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    out.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) {
      PairBits bits(n);
      bits.words()[0] = m;
      out.push_back(Coloring::from_bits(std::move(bits)));
    }
    return out;
  }
  if (n > kMaxMaskVertices) throw Error(ErrorKind::Budget, "sampled sweeps are limited to n <= 11");
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(fixtures::random(n, 0.5, seed + i));
  return out;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "oracle") return oracle_suite(options);
  if (name == "claws") return claws_suite(options);
  if (name == "parity") return parity_suite(options);
  if (name == "partition-theorem") return partition_suite(options);
  if (name == "r-sweep") return r_sweep_suite(options);
  if (name == "connectivity") return connectivity_suite(options);
  if (name == "alpha") return alpha_suite(options);
  if (name == "theorem63") return theorem63_suite(options);
  throw Error(ErrorKind::Parse, "unknown suite '" + std::string(name) + "'");
}

}  // namespace homrec
