#include "homrec/serialize.hpp"

#include "homrec/errors.hpp"

namespace homrec {

namespace {

Json pair_list(const std::vector<Pair>& pairs) {
  Json out = Json::array();
  for (const Pair& p : pairs) out.push_back({p.lo, p.hi});
  return out;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Json to_json(const Coloring& phi) { return Json{{"n", phi.n()}, {"ones", pair_list(ones(phi).members())}}; }

std::string bits_hex(const Coloring& phi) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (phi.pair_count() + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    unsigned value = 0;
    for (std::size_t bit = 0; bit < 8; ++bit) {
      const std::size_t idx = 8 * b + bit;
      if (idx < phi.pair_count() && phi.at_index(idx)) value |= 1u << bit;
    }
    out += kDigits[value >> 4];
    out += kDigits[value & 15];
  }
  return out;
}

Coloring coloring_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n")) throw Error(ErrorKind::Parse, "coloring needs an \"n\" field");
    const auto n_raw = j.at("n").get<long long>();
    if (n_raw < 2 || n_raw > 4096) throw Error(ErrorKind::Parse, "\"n\" out of range");
    const auto n = static_cast<Vertex>(n_raw);
    Coloring phi(n);
    if (j.contains("ones")) {
      for (const auto& p : j.at("ones")) {
        if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::Parse, "pairs must be [x, y]");
        const auto x = p[0].get<long long>();
        const auto y = p[1].get<long long>();
        if (x < 0 || y < 0 || x >= n || y >= n || x == y) throw Error(ErrorKind::Parse, "invalid pair in \"ones\"");
        phi.set(static_cast<Vertex>(x), static_cast<Vertex>(y), 1);
      }
    } else if (j.contains("bits_hex")) {
      const auto hex = j.at("bits_hex").get<std::string>();
      if (hex.size() != 2 * ((phi.pair_count() + 7) / 8)) throw Error(ErrorKind::Parse, "\"bits_hex\" has wrong length");
      for (std::size_t b = 0; 2 * b < hex.size(); ++b) {
        const int hi = hex_digit(hex[2 * b]);
        const int lo = hex_digit(hex[2 * b + 1]);
        if (hi < 0 || lo < 0) throw Error(ErrorKind::Parse, "\"bits_hex\" is not hexadecimal");
        const unsigned value = static_cast<unsigned>(hi << 4 | lo);
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t idx = 8 * b + bit;
          if (!((value >> bit) & 1u)) continue;
          if (idx >= phi.pair_count()) throw Error(ErrorKind::Parse, "\"bits_hex\" sets padding bits");
          phi.set_index(idx, 1);
        }
      }
    } else {
      throw Error(ErrorKind::Parse, "coloring needs \"ones\" or \"bits_hex\"");
    }
    return phi;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json to_json(const EdgeSet& edges) { return pair_list(edges.members()); }

Json to_json(const Component& c) {
  return Json{{"kind", to_string(c.kind)}, {"vertices", c.vertices}, {"edges", c.edge_count}};
}

Json to_json(const CriticalCycleWitness& w) {
  return Json{{"kind", "critical_cycle"}, {"vertices", w.quad}, {"orientation", to_string(w.orientation)}};
}

Json to_json(const RValueReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w.difference));
  Json r = report.r ? Json(*report.r) : Json(nullptr);
  std::string status = report.status == RStatus::Finite ? "finite"
                       : report.status == RStatus::NotApplicable ? "not_applicable"
                                                                 : "unknown";
  return Json{{"r", r},
              {"status", status},
              {"mode", to_string(report.mode)},
              {"complete", report.complete},
              {"witnesses", witnesses}};
}

Json to_json(const RMembership& m) {
  Json out{{"verdict", to_string(m.verdict)}};
  out["witness"] = m.witness ? to_json(m.witness->difference) : Json(nullptr);
  return out;
}

Json to_json(const SRReport& report) {
  Json per_F = Json::array();
  for (const auto& [F, G] : report.per_F) per_F.push_back({{"F", F}, {"G", G}});
  return Json{{"holds", report.holds},
              {"failing_F", report.failing_F ? Json(*report.failing_F) : Json(nullptr)},
              {"per_F", per_F}};
}

Json to_json(const Theorem63Witness& w) {
  return Json{{"F", w.F}, {"D", to_json(w.D)}, {"checked_Gs", w.checked_Gs}};
}

}  // namespace homrec
