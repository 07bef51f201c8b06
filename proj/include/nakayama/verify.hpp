#pragma once

// Verification suites: each scans an enumerated family (or a parameter
// range) and checks one group of statements about Nakayama algebras,
// recording replayable counterexamples. A pass is evidence over the scanned
// range, nothing more.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nakayama/census.hpp"
#include "nakayama/classify.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/serial.hpp"

namespace nakayama {

struct SuiteParams {
  int n_min = 0;  // 0 = suite default
  int n_max = 0;  // 0 = suite default
  int cap = 0;    // 0 = suite default
  unsigned jobs = 1;
  std::size_t max_counterexamples = 10;
  int samples = -1;  // randomized samples per n above the cap (inequality only); -1 = default
  std::uint64_t seed = 0x5eed;
};

struct Counterexample {
  KupischSeries series;
  std::string detail;
};

struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string suite_name, std::string range_text)
      : suite(std::move(suite_name)), range(std::move(range_text)) {}

  std::string suite;
  std::string range;
  std::uint64_t scanned = 0;
  bool passed = true;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
};

inline constexpr std::array<std::string_view, 14> kSuiteNames = {
    "inequality", "uniqueness", "main-equivalence", "table1",   "d1-gorenstein",      "morita",     "phi",
    "shen-crosscheck", "mm-bound", "bound-unique", "qh-corollary", "conjecture", "z-formulas", "dim-corollary"};

namespace detail {

class Recorder {
 public:
  Recorder(VerificationReport& report, std::size_t budget) : report_(report), budget_(budget) {}

  void fail(const KupischSeries& series, std::string detail) {
    report_.passed = false;
    ++report_.failures;
    if (report_.counterexamples.size() < budget_) report_.counterexamples.push_back({series, std::move(detail)});
  }

  void fail(std::string detail) { fail(KupischSeries{QuiverKind::Cycle, {}}, std::move(detail)); }

  void check(bool ok, const KupischSeries& series, const std::string& detail) {
    if (!ok) fail(series, detail);
  }

 private:
  VerificationReport& report_;
  std::size_t budget_;
};

// Collected failure messages for one algebra.
using Failures = std::vector<std::string>;

class FailureList {
 public:
  void check(bool ok, std::string_view what) {
    if (!ok) list_.emplace_back(what);
  }
  template <class... Parts>
  void check(bool ok, const Parts&... parts) {
    if (ok) return;
    std::ostringstream os;
    (os << ... << parts);
    list_.push_back(os.str());
  }
  std::optional<Failures> take() {
    if (list_.empty()) return std::nullopt;
    return std::move(list_);
  }

 private:
  Failures list_;
};

inline std::string join(const Failures& f) {
  std::string out;
  for (const auto& s : f) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// Runs check(algebra, failures) over the family and records every failing algebra.
template <class Check>
void scan(VerificationReport& report, Recorder& rec, const EnumSpec& spec, Check&& check) {
  const auto result = census_map(spec, [&](const Algebra& a) -> std::optional<Failures> {
    FailureList f;
    try {
      check(a, f);
    } catch (const Error& e) {
      f.check(false, "exception: ", e.what());
    }
    return f.take();
  });
  report.scanned += result.scanned;
  for (const auto& [a, failures] : result.hits) rec.fail(a.series(), join(failures));
}

inline int pick(int value, int fallback) { return value > 0 ? value : fallback; }

inline std::string range_text(int lo, int hi, std::optional<int> cap = std::nullopt) {
  std::string out = "n=" + std::to_string(lo) + ".." + std::to_string(hi);
  if (cap) out += " cap=" + std::to_string(*cap);
  return out;
}

inline std::string cap_text(int cap) { return cap > 0 ? std::to_string(cap) : std::string("2n"); }

inline Algebra n_plus_one_series(int n) {
  std::vector<int> c(static_cast<std::size_t>(n), n + 1);
  c.front() = n;
  return make_algebra(QuiverKind::Cycle, std::move(c));
}

inline Algebra twos_then_three(int n) {
  std::vector<int> c(static_cast<std::size_t>(n), 2);
  c.back() = 3;
  return make_algebra(QuiverKind::Cycle, std::move(c));
}

// Random valid cycle series with every entry above cap.
inline std::optional<Algebra> sample_cycle(int n, int cap, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> low(cap + 1, 2 * cap + n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int m = low(rng);
    std::vector<int> c(static_cast<std::size_t>(n));
    c[0] = m;
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> step(std::max(m, c[static_cast<std::size_t>(i - 1)] - 1), m + n - 1);
      c[static_cast<std::size_t>(i)] = step(rng);
    }
    if (c.front() < c.back() - 1) continue;
    if (std::ranges::all_of(c, [&](int x) { return x == m; })) continue;
    return canonical_form(make_algebra(QuiverKind::Cycle, std::move(c)));
  }
  return std::nullopt;
}

inline void inequality_checks(const Algebra& a, FailureList& f) {
  const int n = a.n();
  const int def = defect(a);
  const int sd = sdomdim(a);
  const int scd = scodomdim(a);
  const ExtNat dd = domdim_algebra(a);
  f.check(sd <= 2 * n - def, "sdomdim ", sd, " > 2n - Def = ", 2 * n - def);
  f.check(scd <= 2 * n - def, "scodomdim ", scd, " > 2n - Def = ", 2 * n - def);
  f.check(sd <= 2 * n - 2, "sdomdim ", sd, " > 2n - 2");
  f.check(dd.is_finite() && static_cast<long>(dd.value()) * def <= 2L * n - 2, "Def * domdim = ", def, " * ", dd,
          " > 2n - 2");
  f.check(scd == sdomdim(opposite(a)), "scodomdim ", scd, " != sdomdim(A^op)");
  if (dd.is_finite() && static_cast<int>(dd.value()) >= n) f.check(def == 1, "domdim >= n but defect ", def);
}

}  // namespace detail

inline VerificationReport verify_inequality(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 7), cap = detail::pick(p.cap, 20);
  const int samples = p.samples < 0 ? 200 : p.samples;
  VerificationReport report{"inequality", detail::range_text(lo, hi, cap) + " samples=" + std::to_string(samples)};
  detail::Recorder rec(report, p.max_counterexamples);
  std::mt19937_64 rng(p.seed);
  for (int n = lo; n <= hi; ++n) {
    detail::scan(report, rec, EnumSpec{n, QuiverKind::Cycle, cap, Filter::NonSelfinjective, p.jobs, {}},
                 detail::inequality_checks);
    if (n >= 2)
      detail::scan(report, rec, EnumSpec{n, QuiverKind::Line, cap, Filter::All, p.jobs, {}},
                   detail::inequality_checks);
    for (int k = 0; k < samples; ++k) {
      const auto a = detail::sample_cycle(n, cap, rng);
      if (!a) continue;
      ++report.scanned;
      detail::FailureList f;
      detail::inequality_checks(*a, f);
      if (auto failures = f.take()) rec.fail(a->series(), detail::join(*failures));
    }
    if (n >= 2) {
      const Algebra sharp = detail::n_plus_one_series(n);
      rec.check(sdomdim(sharp) == 2 * n - 2, sharp.series(), "[n,n+1,...,n+1] does not attain sdomdim = 2n-2");
    }
  }
  return report;
}

inline VerificationReport verify_uniqueness(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 10);
  VerificationReport report{"uniqueness", detail::range_text(lo, hi) + " cap=" + detail::cap_text(p.cap) +
                                              " defect-1 cycles"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n) {
    const int cap = detail::pick(p.cap, default_cycle_cap(n));
    std::set<KupischSeries> finite;
    std::map<int, int> by_gldim;
    const auto result = census_map(EnumSpec{n, QuiverKind::Cycle, cap, Filter::DefectOne, p.jobs, {}},
                                   [&](const Algebra& a) -> std::optional<std::pair<ExtNat, detail::Failures>> {
      detail::FailureList f;
      const DOneParams d = *d1_params(a);
      const Algebra nf = make_d1(d);
      const ExtNat g = global_dim(nf);
      const ExtNat dd = domdim_algebra(nf);
      const int fd = fin_dim(nf);
      // Dominant dimension equals finitistic dimension for defect one.
      f.check(dd == static_cast<std::uint32_t>(fd), "domdim ", dd, " != findim ", fd);
      f.check((dd == 1u) == ((d.s + d.a) % n == 0), "domdim = 1 iff s + a = 0 mod n fails");
      f.check((dd == 2u) == ((d.s + d.a + 1) % n == 0), "domdim = 2 iff s + a + 1 = 0 mod n fails");
      if (dd == 1u) f.check(gorenstein_dim(nf).is_infinite(), "domdim 1 but finite Gorenstein dimension");
      if (dd == 2u) {
        f.check(gorenstein_dim(nf) == 2u, "domdim 2 but Gdim != 2");
        f.check(g.is_infinite() || nf.series().c == std::vector<int>{2, 3}, "domdim 2, finite gldim, not [2,3]");
      }
      // Second syzygies of simples.
      for (int i = 0; i < n; ++i) {
        const auto pd = proj_dim(nf, simple_module(i));
        const auto o1 = syzygy(nf, simple_module(i));
        const ModuleOrZero o2 = o1 ? syzygy(nf, *o1) : std::nullopt;
        if (i == n - 1) {
          f.check(pd == 1u, "pd S_{n-1} != 1");
        } else {
          f.check(o2.has_value(), "Omega^2 S_", i, " is zero");
          if (o2) f.check(o2->length == (i == d.s - 1 ? 2 : 1), "Omega^2 S_", i, " has length ", o2->length);
        }
      }
      if (g.is_finite()) {
        const int m = static_cast<int>(g.value()) - n + 1;
        f.check(g == dd, "finite gldim ", g, " != domdim ", dd);
        f.check(m >= 1 && m <= n - 1, "gldim ", g, " outside [n, 2n-2]");
        f.check(proj_dim(nf, simple_module(d.s - 1)) == static_cast<std::uint32_t>(2 * m), "pd S_{s-1} != 2m");
        f.check(min_even_simple_pd(nf) == 2 * m, "least even simple pd != 2m");
        if (n >= 3) {
          const ExtNat ge = global_dim(truncate_last_vertex(nf));
          f.check(ge.is_finite() && ge.value() + 2 == g.value(), "gldim(eAe) + 2 = ", ge, " + 2 != ", g);
        }
      }
      return std::pair{g, f.take().value_or(detail::Failures{})};
    });
    report.scanned += result.scanned;
    for (const auto& [a, value] : result.hits) {
      const auto& [g, failures] = value;
      if (!failures.empty()) rec.fail(a.series(), detail::join(failures));
      if (g.is_finite()) {
        finite.insert(a.series());
        ++by_gldim[static_cast<int>(g.value())];
      }
    }
    std::set<KupischSeries> expected;
    for (int m = 1; m <= n - 1; ++m) expected.insert(canonical_form(z_algebra(n, m)).series());
    rec.check(finite == expected, KupischSeries{QuiverKind::Cycle, {n}},
              "finite-gldim defect-1 algebras differ from {Z_{n,m}} for n=" + std::to_string(n));
    for (int r = n; r <= 2 * n - 2; ++r)
      rec.check(by_gldim[r] == 1, KupischSeries{QuiverKind::Cycle, {n}},
                "n=" + std::to_string(n) + ": " + std::to_string(by_gldim[r]) + " algebras of gldim " +
                    std::to_string(r));
  }
  return report;
}

inline VerificationReport verify_main_equivalence(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 9);
  VerificationReport report{"main-equivalence", detail::range_text(lo, hi) + " cap=" + detail::cap_text(p.cap)};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n) {
    const int cap = detail::pick(p.cap, default_cycle_cap(n));
    std::map<int, std::vector<KupischSeries>> ha_by_gldim;
    for (QuiverKind kind : {QuiverKind::Line, QuiverKind::Cycle}) {
      // Every condition includes finite global dimension, so infinite ones are skipped.
      const auto result = census_map(EnumSpec{n, kind, cap, Filter::FiniteGldim, p.jobs, {}},
                                     [&](const Algebra& a) -> std::optional<std::pair<int, std::string>> {
        const ExtNat g = global_dim(a);
        if (g.is_infinite()) return std::pair{-1, std::string("finite-gldim filter let an infinite one through")};
        const ExtNat dd = domdim_algebra(a);
        const bool ha = is_higher_auslander(a);
        const bool c1 = ha && static_cast<int>(g.value()) >= n;
        const bool c2 = a.is_cycle() && defect(a) == 1;
        const bool c3 = dd.is_finite() ? static_cast<int>(dd.value()) >= n : true;
        std::string err;
        if (!(c1 == c2 && c2 == c3))
          err = "equivalence broken: (1)=" + std::to_string(c1) + " (2)=" + std::to_string(c2) +
                " (3)=" + std::to_string(c3);
        if (!ha && err.empty()) return std::nullopt;
        return std::pair{ha ? static_cast<int>(g.value()) : -1, err};
      });
      report.scanned += result.scanned;
      for (const auto& [a, value] : result.hits) {
        if (!value.second.empty()) rec.fail(a.series(), value.second);
        if (value.first >= 0) ha_by_gldim[value.first].push_back(a.series());
      }
    }
    for (int r = n; r <= 2 * n - 2; ++r) {
      const auto& found = ha_by_gldim[r];
      const auto z = canonical_form(z_algebra(n, r - n + 1)).series();
      rec.check(found.size() == 1 && found.front() == z, z,
                "n=" + std::to_string(n) + " gldim " + std::to_string(r) + ": " + std::to_string(found.size()) +
                    " higher Auslander algebras, expected exactly Z_{n," + std::to_string(r - n + 1) + "}");
    }
  }
  return report;
}

struct Table1Row {
  DOneParams source;
  std::optional<EImage> image;  // nullopt = canceled entry
};

//! The map E for n = 7 as tabulated in the literature: 21 mapped entries, 9 canceled.
inline std::vector<Table1Row> table1_rows() {
  auto N = [](int n, int a, int s) { return DOneParams{n, a, s}; };
  return {
      {N(7, 2, 6), LineMarker{6}},  {N(7, 2, 5), std::nullopt},  {N(7, 2, 4), std::nullopt},
      {N(7, 2, 3), N(6, 2, 5)},     {N(7, 2, 2), N(6, 2, 4)},    {N(7, 2, 1), N(6, 2, 3)},
      {N(7, 3, 6), N(6, 2, 2)},     {N(7, 3, 5), N(6, 2, 1)},    {N(7, 3, 4), std::nullopt},
      {N(7, 3, 3), std::nullopt},   {N(7, 3, 2), N(6, 3, 5)},    {N(7, 3, 1), N(6, 3, 4)},
      {N(7, 4, 6), N(6, 3, 3)},     {N(7, 4, 5), N(6, 3, 2)},    {N(7, 4, 4), N(6, 3, 1)},
      {N(7, 4, 3), std::nullopt},   {N(7, 4, 2), std::nullopt},  {N(7, 4, 1), N(6, 4, 5)},
      {N(7, 5, 6), N(6, 4, 4)},     {N(7, 5, 5), N(6, 4, 3)},    {N(7, 5, 4), N(6, 4, 2)},
      {N(7, 5, 3), N(6, 4, 1)},     {N(7, 5, 2), std::nullopt},  {N(7, 5, 1), std::nullopt},
      {N(7, 6, 6), N(6, 5, 5)},     {N(7, 6, 5), N(6, 5, 4)},    {N(7, 6, 4), N(6, 5, 3)},
      {N(7, 6, 3), N(6, 5, 2)},     {N(7, 6, 2), N(6, 5, 1)},    {N(7, 6, 1), std::nullopt},
  };
}

inline VerificationReport verify_table1(const SuiteParams& p) {
  VerificationReport report{"table1", "n=7, 2<=a<=6, 1<=s<=6"};
  detail::Recorder rec(report, p.max_counterexamples);
  int mapped = 0, canceled = 0;
  for (const auto& row : table1_rows()) {
    ++report.scanned;
    const Algebra a = make_d1(row.source);
    const ExtNat dd = domdim_algebra(a);
    std::ostringstream label;
    label << row.source;
    if (!row.image) {
      ++canceled;
      rec.check(dd <= ExtNat(2), a.series(), label.str() + " canceled but domdim " + dd.to_string());
      rec.check(!e_map_applicable(row.source), a.series(), label.str() + " canceled but inside the domain of E");
      continue;
    }
    ++mapped;
    rec.check(dd >= ExtNat(3), a.series(), label.str() + " mapped but domdim " + dd.to_string());
    const EImage closed = e_map_closed_form(row.source);
    std::ostringstream got;
    got << closed;
    rec.check(closed == *row.image, a.series(), label.str() + " closed form gives " + got.str());
    const Algebra computed = e_map(row.source);
    rec.check(isomorphic(computed, to_algebra(*row.image)), a.series(),
              label.str() + " truncation gives " + format_entries(computed.dims()));
    rec.check(e_map_inverse(*row.image) == row.source, a.series(), label.str() + " inverse does not round-trip");
  }
  report.notes.push_back(std::to_string(mapped) + " mapped entries, " + std::to_string(canceled) +
                         " canceled entries");
  rec.check(mapped == 21 && canceled == 9, KupischSeries{QuiverKind::Cycle, {7}}, "unexpected table shape");
  return report;
}

inline void d1_gorenstein_checks(const Algebra& a, detail::FailureList& f) {
  const ExtNat g = global_dim(a);
  if (g.is_finite()) return;
  const ExtNat gd = gorenstein_dim(a);
  const ExtNat dd = domdim_algebra(a);
  const int fd = fin_dim(a);
  const bool gor = gd.is_finite();
  const bool even = d1_gorenstein_criterion(a);
  const bool mag = is_min_auslander_gorenstein(a);
  f.check(gor == even, "Gorenstein ", gor, " but domdim ", dd);
  f.check(gor == mag, "Gorenstein ", gor, " but minimal Auslander-Gorenstein ", mag);
  f.check(gor == shen_gorenstein(a), "black-cycle criterion disagrees");
  f.check(dd == static_cast<std::uint32_t>(fd), "domdim ", dd, " != findim ", fd);
  if (gor) f.check(gd == static_cast<std::uint32_t>(fd), "Gdim ", gd, " != findim ", fd);
  const int phi = phi_dim(a);
  f.check(phi % 2 == 0, "phi ", phi, " is odd");
  f.check(phi - fd >= 0 && phi - fd <= 1, "phi - findim = ", phi - fd);
}

inline VerificationReport verify_d1_gorenstein(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 9);
  VerificationReport report{"d1-gorenstein",
                            detail::range_text(lo, hi) + " cap=" + (p.cap > 0 ? std::to_string(p.cap) : "2n+4") +
                                " defect-1 cycles, infinite gldim"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n)
    detail::scan(report, rec,
                 EnumSpec{n, QuiverKind::Cycle, detail::pick(p.cap, 2 * n + 4), Filter::DefectOne, p.jobs, {}},
                 d1_gorenstein_checks);
  return report;
}

inline VerificationReport verify_phi(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 1), hi = detail::pick(p.n_max, 6), cap = detail::pick(p.cap, 14);
  VerificationReport report{"phi", detail::range_text(lo, hi, cap) + " cycles, infinite gldim"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n)
    detail::scan(report, rec, EnumSpec{n, QuiverKind::Cycle, cap, Filter::All, p.jobs, {}},
                 [](const Algebra& a, detail::FailureList& f) {
                   if (global_dim(a).is_finite()) return;
                   const int phi = phi_dim(a);
                   const int fd = fin_dim(a);
                   f.check(phi % 2 == 0, "phi ", phi, " is odd");
                   f.check(phi - fd >= 0 && phi - fd <= 1, "phi - findim = ", phi - fd);
                 });
  return report;
}

inline VerificationReport verify_morita(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 3), hi = detail::pick(p.n_max, 20), wmax = detail::pick(p.cap, 20);
  VerificationReport report{"morita", detail::range_text(lo, hi) + " 2<=w<=" + std::to_string(wmax)};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n) {
    for (int w = 2; w <= wmax; ++w) {
      ++report.scanned;
      const Algebra a = morita_nakayama(n, w);
      const std::string tag = "(n=" + std::to_string(n) + ",w=" + std::to_string(w) + ") ";
      const ExtNat dd = domdim_algebra(a);
      const int single = morita_domdim_single(n, w);
      const int general = morita_domdim_formula(MoritaSpec{n, w, {0}});
      rec.check(defect(a) == 1 && a.n() == n + 1, a.series(), tag + "not a defect-one algebra on n+1 simples");
      rec.check(single == general, a.series(), tag + "min(d_o, d_e) differs from the general formula");
      rec.check(dd == static_cast<std::uint32_t>(single), a.series(),
                tag + "domdim " + dd.to_string() + " != min(d_o, d_e) = " + std::to_string(single));
      const ExtNat gd = gorenstein_dim(a);
      const ExtNat g = global_dim(a);
      if (w > 2) {
        const auto [gor, gdim] = morita_gorenstein(n, w);
        rec.check(gor == gd.is_finite(), a.series(), tag + "Gorenstein iff gcd(w,n) = 1 fails");
        rec.check(gor == (dd.is_finite() && dd.value() % 2 == 0), a.series(), tag + "Gorenstein iff domdim even fails");
        if (gor) rec.check(gd == gdim, a.series(), tag + "Gdim " + gd.to_string() + " != d_e " + gdim.to_string());
      } else {
        rec.check(a.series() == detail::twos_then_three(n + 1).series(), a.series(), tag + "w=2 is not [2,...,2,3]");
        rec.check(g == static_cast<std::uint32_t>(n + 1), a.series(), tag + "w=2 gldim " + g.to_string() + " != n+1");
        rec.check(gd.is_finite(), a.series(), tag + "w=2 not Gorenstein");
      }
      const bool finite_expected = w == 2 || (n + 1) % w == 0;
      rec.check(g.is_finite() == finite_expected, a.series(),
                tag + "finite gldim iff (w = 2 or w | n+1) fails (experimental claim)");
    }
  }
  // General-k formula against its single-point specialisation on the full square.
  for (int n = 2; n <= 20; ++n)
    for (int w = 2; w <= 20; ++w)
      rec.check(morita_domdim_formula(MoritaSpec{n, w, {0}}) == morita_domdim_single(n, w),
                KupischSeries{QuiverKind::Cycle, {n, w}}, "formula specialisation mismatch");
  report.notes.emplace_back("finite-gldim criterion for w > 2 is an experimental cross-check of an unpublished result");
  return report;
}

inline void crosscheck_checks(const Algebra& a, detail::FailureList& f) {
  const int n = a.n();
  const ExtNat g = global_dim(a);
  const ExtNat gd = gorenstein_dim(a);
  const ExtNat dd = domdim_algebra(a);
  const int fd = fin_dim(a);
  const Algebra op = opposite(a);
  f.check(shen_finite_gldim(a) == g.is_finite(), "weight/connectivity criterion disagrees with gldim ", g);
  f.check(shen_gorenstein(a) == gd.is_finite(), "black-cycle criterion disagrees with Gdim ", gd);
  if (g.is_infinite())
    f.check(resolution_quiver(a).all_cycles_black() == gd.is_finite(), "raw black-cycle test disagrees with Gdim ", gd);
  const bool even_simple = std::ranges::any_of(simple_proj_dims(a), [](const ExtNat& x) {
    return x.is_finite() && x.value() % 2 == 0;
  });
  f.check(even_simple == g.is_finite(), "finite gldim iff some simple has even pd fails");
  f.check(dd >= ExtNat(1), "not QF-3");
  f.check(dd == domdim_algebra(op), "domdim(A) != domdim(A^op)");
  f.check(defect(a) == defect(op), "Def(A) != Def(A^op)");
  f.check(isomorphic(opposite(op), a), "opposite is not an involution");
  f.check(projective_injective_count(a) == projective_injective_count(op), "projective-injective counts differ");
  f.check(n - projective_injective_count(a) == defect(a), "#proj non-inj != #inj non-proj");
  if (gd.is_finite()) f.check(gd == static_cast<std::uint32_t>(fd), "Gdim ", gd, " != findim ", fd);
  if (g.is_finite()) f.check(g == gd, "gldim ", g, " != Gdim ", gd);

  const auto rq = resolution_quiver(a);
  const auto irq = injective_resolution_quiver(a);
  for (const auto* q : {&rq, &irq}) {
    const auto w = q->cycle_weights();
    f.check(std::ranges::all_of(w, [&](const Rational& x) { return x == w.front(); }), "cycle weights differ");
  }
  for (int i = 0; i < n; ++i) {
    const int w = injective_length(a, i);
    f.check(irq.graph.succ(i) == a.vertex(long{i} - w), "injective resolution quiver routes disagree at ", i);
  }
  if (!a.selfinjective()) {
    f.check(rq.source_count() == defect(a), "resolution quiver sources ", rq.source_count(), " != defect");
    f.check(irq.source_count() == defect(a), "injective resolution quiver sources ", irq.source_count(),
            " != defect");
    ExtNat co = ExtNat::infinity();
    for (const auto& inj : injective_modules(a))
      if (!is_projective(a, inj)) co = min(co, codomdim_module(a, inj));
    f.check(co == dd, "codominant dimension ", co, " != dominant dimension ", dd);
  }
  // Removing a vertex whose simple has projective dimension one.
  const auto pds = simple_proj_dims(a);
  for (int v = 0; v < n && n >= 2; ++v) {
    if (!(pds[static_cast<std::size_t>(v)] == 1u)) continue;
    ExtNat ge(0);
    try {
      ge = global_dim(truncate_vertex(a, v));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Semisimple && e.kind() != ErrorKind::NotApplicable) throw;
      ge = ExtNat(0);
    }
    f.check(ge.is_finite() == g.is_finite(), "finiteness not preserved by removing vertex ", v);
    if (g.is_finite() && ge.is_finite()) f.check(g.value() <= ge.value() + 2, "gldim(A) > gldim(eAe) + 2 at ", v);
  }
}

inline VerificationReport verify_shen_crosscheck(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 1), hi = detail::pick(p.n_max, 6), cap = detail::pick(p.cap, 14);
  VerificationReport report{"shen-crosscheck", detail::range_text(lo, hi, cap) + " all cycles"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n)
    detail::scan(report, rec, EnumSpec{n, QuiverKind::Cycle, cap, Filter::All, p.jobs, {}}, crosscheck_checks);
  return report;
}

inline VerificationReport verify_mm_bound(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 9);
  VerificationReport report{"mm-bound", detail::range_text(lo, hi) + " cap=" + detail::cap_text(p.cap) +
                                            " finite-gldim cycles"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n)
    detail::scan(report, rec,
                 EnumSpec{n, QuiverKind::Cycle, detail::pick(p.cap, default_cycle_cap(n)), Filter::FiniteGldim, p.jobs, {}},
                 [n](const Algebra& a, detail::FailureList& f) {
                   const ExtNat g = global_dim(a);
                   const auto even = min_even_simple_pd(a);
                   f.check(g.is_finite(), "filter admitted infinite gldim");
                   f.check(even.has_value(), "no simple of even projective dimension");
                   if (!g.is_finite() || !even) return;
                   const int m = *even / 2;
                   f.check(static_cast<int>(g.value()) <= n + m - 1, "gldim ", g, " > n + m - 1 = ", n + m - 1);
                   f.check(static_cast<int>(g.value()) <= 2 * n - 2, "gldim ", g, " > 2n - 2");
                 });
  return report;
}

inline VerificationReport verify_bound_unique(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 9);
  VerificationReport report{"bound-unique", detail::range_text(lo, hi) + " cap=" + detail::cap_text(p.cap) +
                                                " finite-gldim cycles"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n) {
    std::set<int> attained;
    const auto result = census_map(
        EnumSpec{n, QuiverKind::Cycle, detail::pick(p.cap, default_cycle_cap(n)), Filter::FiniteGldim, p.jobs, {}},
        [n](const Algebra& a) -> std::optional<std::pair<int, std::string>> {
          const ExtNat g = global_dim(a);
          const auto even = min_even_simple_pd(a);
          if (!g.is_finite() || !even) return std::pair{0, std::string("missing finite gldim or even simple pd")};
          const int m = *even / 2;
          if (static_cast<int>(g.value()) != n + m - 1) return std::nullopt;
          std::string err;
          if (!(canonical_form(a) == canonical_form(z_algebra(n, m)))) err = "attains n + m - 1 but is not Z_{n,m}";
          else if (!is_higher_auslander(a)) err = "Z_{n,m} is not higher Auslander";
          return std::pair{m, err};
        });
    report.scanned += result.scanned;
    for (const auto& [a, value] : result.hits) {
      if (!value.second.empty()) rec.fail(a.series(), value.second);
      else attained.insert(value.first);
    }
    for (int m = 1; m <= n - 1; ++m)
      rec.check(attained.contains(m), z_algebra(n, m).series(),
                "bound n + m - 1 not attained for n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  return report;
}

inline VerificationReport verify_qh_corollary(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 9);
  VerificationReport report{"qh-corollary", detail::range_text(lo, hi) + " cap=" + detail::cap_text(p.cap) +
                                                " all cycles"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n) {
    const Algebra target = detail::twos_then_three(n);
    int equality = 0;
    const auto result = census_map(
        EnumSpec{n, QuiverKind::Cycle, detail::pick(p.cap, default_cycle_cap(n)), Filter::All, p.jobs, {}},
        [&](const Algebra& a) -> std::optional<std::pair<bool, std::string>> {
          if (!is_quasi_hereditary_cyclic(a)) return std::nullopt;
          const ExtNat g = global_dim(a);
          std::string err;
          if (g.is_infinite()) err = "quasi-hereditary with infinite gldim";
          else if (static_cast<int>(g.value()) > n) err = "quasi-hereditary with gldim " + g.to_string() + " > n";
          const bool eq = g == static_cast<std::uint32_t>(n);
          if (eq != (a == target)) err += (err.empty() ? "" : "; ") + std::string("gldim = n iff [2,...,2,3] fails");
          return std::pair{eq, err};
        });
    report.scanned += result.scanned;
    for (const auto& [a, value] : result.hits) {
      if (!value.second.empty()) rec.fail(a.series(), value.second);
      if (value.first) ++equality;
    }
    rec.check(equality == 1, target.series(), "n=" + std::to_string(n) + ": " + std::to_string(equality) +
                                                  " quasi-hereditary algebras with gldim n");
  }
  return report;
}

inline VerificationReport verify_conjecture(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 10);
  VerificationReport report{"conjecture", detail::range_text(lo, hi) + " cap=" + detail::cap_text(p.cap)};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n) {
    const int cap = detail::pick(p.cap, default_cycle_cap(n));
    const auto line = spectrum(n, QuiverKind::Line, cap, p.jobs);
    const auto cyc = spectrum(n, QuiverKind::Cycle, cap, p.jobs);
    report.scanned += line.scanned + cyc.scanned;
    std::set<int> all = line.values();
    for (int g : cyc.values()) all.insert(g);
    std::set<int> expected;
    for (int k = 2; k <= 2 * n - 2; ++k) expected.insert(k);
    std::string missing;
    for (int k : expected)
      if (!all.contains(k)) missing += (missing.empty() ? "" : ",") + std::to_string(k);
    rec.check(all == expected, KupischSeries{QuiverKind::Cycle, {n}},
              "n=" + std::to_string(n) + " spectrum misses {" + missing + "}");
    std::string line_text, cyc_text;
    for (int g : line.values()) line_text += (line_text.empty() ? "" : ",") + std::to_string(g);
    for (int g : cyc.values()) cyc_text += (cyc_text.empty() ? "" : ",") + std::to_string(g);
    report.notes.push_back("n=" + std::to_string(n) + " line {" + line_text + "} cycle {" + cyc_text + "}");
  }
  report.notes.emplace_back("evidence over the scanned range, not a proof");
  return report;
}

inline void z_checks(int n, int m, detail::Recorder& rec) {
  const DOneParams closed = z_params(n, m);
  const Algebra a = make_d1(closed);
  const std::string tag = "Z_{" + std::to_string(n) + "," + std::to_string(m) + "} ";
  const auto expected = static_cast<std::uint32_t>(n + m - 1);
  rec.check(defect(a) == 1, a.series(), tag + "defect != 1");
  const ExtNat g = global_dim(a);
  const ExtNat dd = domdim_algebra(a);
  rec.check(g == expected, a.series(), tag + "gldim " + g.to_string());
  rec.check(dd == expected, a.series(), tag + "domdim " + dd.to_string());
  rec.check(proj_dim(a, simple_module(closed.s - 1)) == static_cast<std::uint32_t>(2 * m), a.series(),
            tag + "pd S_{s-1} != 2m");
  rec.check(min_even_simple_pd(a) == 2 * m, a.series(), tag + "least even simple pd != 2m");
  rec.check(is_higher_auslander(a), a.series(), tag + "not higher Auslander");
  rec.check(z_params_recursive(n, m) == closed, a.series(), tag + "closed form differs from recursion");
}

inline VerificationReport verify_z_formulas(const SuiteParams& p) {
  const int lo = detail::pick(p.n_min, 2), hi = detail::pick(p.n_max, 25);
  VerificationReport report{"z-formulas", detail::range_text(lo, hi) + " 1<=m<=n-1"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n)
    for (int m = 1; m <= n - 1; ++m) {
      ++report.scanned;
      z_checks(n, m, rec);
    }
  return report;
}

inline VerificationReport verify_dim_corollary(const SuiteParams& p) {
  const int lo = std::max(3, detail::pick(p.n_min, 3)), hi = detail::pick(p.n_max, 25);
  VerificationReport report{"dim-corollary", detail::range_text(lo, hi) + " n-m even"};
  detail::Recorder rec(report, p.max_counterexamples);
  for (int n = lo; n <= hi; ++n)
    for (int m = 1; m <= n - 1; ++m) {
      if ((n - m) % 2 != 0) continue;
      ++report.scanned;
      const Algebra big = z_algebra(n, m), small = z_algebra(n - 1, m);
      rec.check(big.total_dim() == small.total_dim() + 2, big.series(),
                "dim Z_{n,m} = " + std::to_string(big.total_dim()) + " but dim Z_{n-1,m} = " +
                    std::to_string(small.total_dim()));
    }
  return report;
}

inline VerificationReport verify(std::string_view suite, const SuiteParams& params) {
  using Fn = VerificationReport (*)(const SuiteParams&);
  static const std::map<std::string_view, Fn> suites = {
      {"inequality", verify_inequality},       {"uniqueness", verify_uniqueness},
      {"main-equivalence", verify_main_equivalence}, {"table1", verify_table1},
      {"d1-gorenstein", verify_d1_gorenstein}, {"morita", verify_morita},
      {"phi", verify_phi},                     {"shen-crosscheck", verify_shen_crosscheck},
      {"mm-bound", verify_mm_bound},           {"bound-unique", verify_bound_unique},
      {"qh-corollary", verify_qh_corollary},   {"conjecture", verify_conjecture},
      {"z-formulas", verify_z_formulas},       {"dim-corollary", verify_dim_corollary},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) fail(ErrorKind::InvalidSpec, "unknown suite '" + std::string(suite) + "'");
  return it->second(params);
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["suite"] = r.suite;
  j["range"] = r.range;
  j["scanned"] = r.scanned;
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples)
    list.push_back({{"kupisch", c.series.c}, {"kind", std::string(to_string(c.series.kind))}, {"detail", c.detail}});
  j["counterexamples"] = list;
  j["notes"] = r.notes;
  return j;
}

}  // namespace nakayama
