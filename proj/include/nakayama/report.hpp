#pragma once

// The full invariant bundle of one algebra and its JSONL / text renderings.

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "nakayama/classify.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

inline constexpr int kReportSchemaVersion = 1;

struct ResolutionSummary {
  Rational weight;
  int cycles = 0;
  int sources = 0;
  bool connected = false;

  bool operator==(const ResolutionSummary&) const = default;
};

struct ZLabel {
  int n = 0;
  int m = 0;
  bool operator==(const ZLabel&) const = default;
};

struct MoritaLabel {
  int n = 0;
  int w = 0;
  bool operator==(const MoritaLabel&) const = default;
};

struct InvariantReport {
  KupischSeries algebra;  // canonical form
  int n = 0;
  int defect = 0;
  ExtNat gldim;
  int findim = 0;
  ExtNat domdim;
  std::optional<int> sdomdim;    // absent for selfinjective algebras
  std::optional<int> scodomdim;  // absent for selfinjective algebras
  ExtNat gdim;
  std::optional<int> phidim;     // cycle quivers with infinite global dimension only
  bool selfinjective = false;
  bool higher_auslander = false;
  bool min_auslander_gorenstein = false;
  bool quasi_hereditary = false;
  std::optional<ResolutionSummary> rq;  // cycle quivers only

  std::optional<DOneParams> d1;
  std::optional<ZLabel> z;
  std::optional<MoritaLabel> morita;

  bool operator==(const InvariantReport&) const = default;
};

inline InvariantReport compute_report(const Algebra& input) {
  const Algebra a = canonical_form(input);
  InvariantReport r;
  r.algebra = a.series();
  r.n = a.n();
  r.defect = defect(a);
  r.gldim = global_dim(a);
  r.findim = fin_dim(a);
  r.domdim = domdim_algebra(a);
  r.selfinjective = a.selfinjective();
  if (!a.selfinjective()) {
    r.sdomdim = sdomdim(a);
    r.scodomdim = scodomdim(a);
  }
  r.gdim = gorenstein_dim(a);
  r.higher_auslander = r.gldim.is_finite() && r.gldim.value() >= 2 && r.gldim == r.domdim;
  r.min_auslander_gorenstein = r.gdim.is_finite() && r.gdim.value() >= 2 && r.gdim == r.domdim;
  if (a.is_cycle()) {
    r.quasi_hereditary = is_quasi_hereditary_cyclic(a);
    if (r.gldim.is_infinite()) r.phidim = phi_dim(a);
    const auto rq = resolution_quiver(a);
    r.rq = ResolutionSummary{rq.weight(), rq.graph.component_count(), rq.source_count(), rq.connected()};
  } else {
    // Line quivers are directed, so every line algebra is quasi-hereditary.
    r.quasi_hereditary = true;
  }
  r.d1 = d1_params(a);
  if (r.d1 && r.gldim.is_finite()) {
    const int m = static_cast<int>(r.gldim.value()) - a.n() + 1;
    if (m >= 1 && m <= a.n() - 1 && canonical_form(z_algebra(a.n(), m)) == a) r.z = ZLabel{a.n(), m};
  }
  return r;
}

inline nlohmann::ordered_json ext_to_json(const ExtNat& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

template <class T>
nlohmann::ordered_json optional_to_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  return *x;
}

inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["v"] = kReportSchemaVersion;
  j["kupisch"] = r.algebra.c;
  j["kind"] = std::string(to_string(r.algebra.kind));
  j["n"] = r.n;
  j["defect"] = r.defect;
  j["gldim"] = ext_to_json(r.gldim);
  j["findim"] = r.findim;
  j["domdim"] = ext_to_json(r.domdim);
  j["sdomdim"] = optional_to_json(r.sdomdim);
  j["scodomdim"] = optional_to_json(r.scodomdim);
  j["gdim"] = ext_to_json(r.gdim);
  j["phidim"] = optional_to_json(r.phidim);
  j["flags"] = {{"selfinjective", r.selfinjective},
                {"higher_auslander", r.higher_auslander},
                {"min_auslander_gorenstein", r.min_auslander_gorenstein},
                {"quasi_hereditary", r.quasi_hereditary}};
  if (r.rq) {
    j["rq"] = {{"weight", {{"num", r.rq->weight.num}, {"den", r.rq->weight.den}}},
               {"cycles", r.rq->cycles},
               {"sources", r.rq->sources},
               {"connected", r.rq->connected}};
  } else {
    j["rq"] = nullptr;
  }
  if (r.d1) j["d1"] = {{"a", r.d1->a}, {"s", r.d1->s}};
  if (r.z) j["z"] = {{"n", r.z->n}, {"m", r.z->m}};
  if (r.morita) j["morita"] = {{"n", r.morita->n}, {"w", r.morita->w}, {"experimental", true}};
  return j;
}

//! One JSONL line (no trailing newline).
inline std::string to_jsonl(const InvariantReport& r) { return to_json(r).dump(); }

inline std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("-"); };
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "kupisch            " << format_entries(r.algebra.c) << '\n'
     << "quiver             " << to_string(r.algebra.kind) << '\n'
     << "simples            " << r.n << '\n'
     << "defect             " << r.defect << '\n'
     << "gldim              " << r.gldim << '\n'
     << "findim             " << r.findim << '\n'
     << "domdim             " << r.domdim << '\n'
     << "sdomdim            " << opt(r.sdomdim) << '\n'
     << "scodomdim          " << opt(r.scodomdim) << '\n'
     << "gdim               " << r.gdim << '\n'
     << "phidim             " << opt(r.phidim) << '\n'
     << "selfinjective      " << yes(r.selfinjective) << '\n'
     << "higher auslander   " << yes(r.higher_auslander) << '\n'
     << "min auslander-gor. " << yes(r.min_auslander_gorenstein) << '\n'
     << "quasi-hereditary   " << yes(r.quasi_hereditary) << '\n';
  if (r.rq) {
    os << "resolution quiver  weight " << r.rq->weight << ", " << r.rq->cycles << " cycle(s), " << r.rq->sources
       << " source(s), " << (r.rq->connected ? "connected" : "disconnected") << '\n';
  }
  if (r.d1) os << "defect-one form    N_{" << r.n << ',' << r.d1->a << ',' << r.d1->s << "}\n";
  if (r.z) os << "z-algebra          Z_{" << r.z->n << ',' << r.z->m << "}\n";
  if (r.morita)
    os << "morita-nakayama    n=" << r.morita->n << " w=" << r.morita->w
       << " (finite-gldim claim is an experimental cross-check)\n";
  return os.str();
}

}  // namespace nakayama
