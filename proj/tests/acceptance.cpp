// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nakayama/nakayama.hpp"

using namespace nakayama;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  o.ok = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

// Folds suite reports into an outcome, keeping the first counterexample of each failing suite.
Outcome suites(std::initializer_list<std::pair<std::string_view, SuiteParams>> runs) {
  Outcome o;
  std::string scanned;
  for (const auto& [name, params] : runs) {
    const auto r = verify(name, params);
    scanned += (scanned.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(r.scanned);
    if (r.passed) continue;
    std::string first = r.counterexamples.empty()
                            ? std::string("no detail")
                            : format_entries(r.counterexamples.front().series.c) + ": " +
                                  r.counterexamples.front().detail;
    require(o, false, std::string(name) + " " + std::to_string(r.failures) + " failures, first " + first);
  }
  if (o.ok) o.detail = "scanned " + scanned;
  return o;
}

SuiteParams range(int n_min, int n_max, int cap = 0) {
  SuiteParams p;
  p.n_min = n_min;
  p.n_max = n_max;
  p.cap = cap;
  p.jobs = 0;
  return p;
}

std::string set_text(const std::set<int>& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "{" + out + "}";
}

Outcome c1() {
  Outcome o;
  const Algebra a = parse_algebra("2,4,3,3,3");
  const Algebra op = opposite(a);
  require(o, sdomdim(a) == 5, "sdomdim = " + std::to_string(sdomdim(a)));
  require(o, sdomdim(op) == 4, "sdomdim(op) = " + std::to_string(sdomdim(op)));
  if (o.ok) o.detail = "sdomdim 5, opposite [" + format_entries(canonical_form(op).dims()) + "] sdomdim 4";
  return o;
}

Outcome c2() {
  Outcome o;
  int mapped = 0, canceled = 0;
  for (const auto& row : table1_rows()) {
    const ExtNat dd = domdim_algebra(make_d1(row.source));
    if (!row.image) {
      ++canceled;
      require(o, dd <= ExtNat(2), "canceled entry with domdim " + dd.to_string());
      continue;
    }
    ++mapped;
    require(o, e_map_closed_form(row.source) == *row.image, "closed form mismatch");
    require(o, isomorphic(e_map(row.source), to_algebra(*row.image)), "truncation mismatch");
  }
  // Every n = 7 cell with domdim >= 3 must be a mapped entry of the table.
  int domain = 0;
  for (int a = 2; a <= 6; ++a)
    for (int s = 1; s <= 6; ++s) domain += e_map_applicable({7, a, s}) ? 1 : 0;
  require(o, domain == mapped, "domain size " + std::to_string(domain) + " != mapped " + std::to_string(mapped));
  const auto suite = verify("table1", {});
  require(o, suite.passed, "table1 suite failed");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(mapped) + " mapped and " + std::to_string(canceled) +
              " canceled entries reproduced (every cell of the 5x6 table)";
  return o;
}

Outcome c3() { return suites({{"z-formulas", range(2, 25)}, {"dim-corollary", range(3, 25)}}); }

Outcome c4() {
  Outcome o;
  const auto line = spectrum(9, QuiverKind::Line, 9, 0);
  const auto cycle = spectrum(9, QuiverKind::Cycle, 18, 4);
  require(o, line.values() == std::set<int>{2, 3, 4, 5, 8}, "line " + set_text(line.values()));
  require(o, cycle.values() == std::set<int>{3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16},
          "cycle " + set_text(cycle.values()));
  require(o, spectrum_csv(cycle) == spectrum_csv(spectrum(9, QuiverKind::Cycle, 18, 1)), "jobs change the output");
  if (o.ok) o.detail = "line " + set_text(line.values()) + " cycle " + set_text(cycle.values());
  return o;
}

Outcome c5() { return suites({{"conjecture", range(2, 10)}}); }

Outcome c6() {
  SuiteParams p = range(2, 7, 20);
  p.samples = 0;
  return suites({{"inequality", p}});
}

Outcome c7() { return suites({{"uniqueness", range(2, 9)}, {"main-equivalence", range(2, 9)}}); }

Outcome c8() {
  return suites({{"mm-bound", range(2, 9)}, {"bound-unique", range(2, 9)}, {"qh-corollary", range(2, 9)}});
}

Outcome c9() { return suites({{"d1-gorenstein", range(2, 9)}}); }

Outcome c10() { return suites({{"morita", range(3, 20, 20)}}); }

Outcome c11() { return suites({{"shen-crosscheck", range(1, 6, 14)}}); }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "super dominant dimension example", 1, c1},
      {2, "E-map table for n = 7", 1, c2},
      {3, "Z-algebra formulas, n <= 25", 30, c3},
      {4, "spectra for n = 9", 15 * 60, c4},
      {5, "spectrum conjecture, n <= 10", 2 * 3600, c5},
      {6, "inequalities, n <= 7, entries <= 20", 15 * 60, c6},
      {7, "uniqueness and main equivalence, n <= 9", 20 * 60, c7},
      {8, "sharpened bound and quasi-hereditary corollary, n <= 9", 20 * 60, c8},
      {9, "defect-one Gorenstein and phi, n <= 9", 10 * 60, c9},
      {10, "Morita-Nakayama algebras, n <= 20, w <= 20", 60, c10},
      {11, "criteria cross-check, n <= 6, cap 14", 5 * 60, c11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) require(o, false, "over budget");
    if (!o.ok) ++failed;
    std::printf("%s %2d %s (%.3fs, budget %.0fs): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
