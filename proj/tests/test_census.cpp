#include <gtest/gtest.h>

#include <stdexcept>

#include "common.hpp"

using namespace nakayama;

namespace {

std::set<std::vector<int>> series_set(const std::vector<Algebra>& algebras) {
  std::set<std::vector<int>> out;
  for (const auto& a : algebras) out.insert({a.dims().begin(), a.dims().end()});
  return out;
}

}  // namespace

TEST(Enumerate, SmallCycleExample) {
  const auto got = series_set(enumerate_all({2, QuiverKind::Cycle, 4, Filter::All, 1, {}}));
  EXPECT_EQ(got, (std::set<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}}));
}

TEST(Enumerate, MatchesBruteForce) {
  for (int n = 1; n <= 4; ++n)
    for (int cap : {2, 3, 5, 7}) {
      const auto all = enumerate_all({n, QuiverKind::Cycle, cap, Filter::All, 1, {}});
      EXPECT_EQ(series_set(all), oracle::brute_cycles(n, cap)) << "n=" << n << " cap=" << cap;
      EXPECT_EQ(series_set(all).size(), all.size());
    }
  for (int n = 2; n <= 7; ++n)
    EXPECT_EQ(series_set(enumerate_all({n, QuiverKind::Line, n, Filter::All, 1, {}})), oracle::brute_lines(n));
}

TEST(Enumerate, LineCountsAreCatalan) {
  for (int n = 2; n <= 10; ++n)
    EXPECT_EQ(enumerate_all({n, QuiverKind::Line, n, Filter::All, 1, {}}).size(), oracle::catalan(n - 1)) << n;
  EXPECT_EQ(enumerate_all({9, QuiverKind::Line, 9, Filter::All, 1, {}}).size(), 1430u);
}

TEST(Enumerate, EmitsCanonicalValidAlgebras) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_all({n, QuiverKind::Cycle, 10, Filter::All, 1, {}})) {
      EXPECT_TRUE(is_canonical(a));
      EXPECT_NO_THROW(make_algebra(a.series()));
    }
}

TEST(Enumerate, FiltersAgreeWithPostFiltering) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_all({n, QuiverKind::Cycle, 3 * n, Filter::All, 1, {}});
    std::set<std::vector<int>> fin, def1, nonself;
    for (const auto& a : all) {
      const std::vector<int> c(a.dims().begin(), a.dims().end());
      if (global_dim(a).is_finite()) fin.insert(c);
      if (defect(a) == 1) def1.insert(c);
      if (!a.selfinjective()) nonself.insert(c);
    }
    // Cap 2n loses no finite-gldim algebra: entries never exceed 2n - 1.
    EXPECT_EQ(series_set(enumerate_all({n, QuiverKind::Cycle, 2 * n, Filter::FiniteGldim, 1, {}})), fin);
    for (const auto& c : fin) EXPECT_LE(*std::max_element(c.begin(), c.end()), 2 * n - 1);
    EXPECT_EQ(series_set(enumerate_all({n, QuiverKind::Cycle, 3 * n, Filter::DefectOne, 1, {}})), def1);
    EXPECT_EQ(series_set(enumerate_all({n, QuiverKind::Cycle, 3 * n, Filter::NonSelfinjective, 1, {}})), nonself);
  }
}

TEST(Enumerate, DeterministicAcrossJobs) {
  for (unsigned jobs : {2u, 3u, 8u}) {
    EnumSpec one{7, QuiverKind::Cycle, 11, Filter::All, 1, {}};
    EnumSpec many = one;
    many.jobs = jobs;
    EXPECT_EQ(enumerate_all(one), enumerate_all(many));
    const auto a = spectrum(8, QuiverKind::Cycle, 16, 1);
    const auto b = spectrum(8, QuiverKind::Cycle, 16, jobs);
    EXPECT_EQ(spectrum_csv(a), spectrum_csv(b));
  }
}

TEST(Enumerate, ResumeSkipsCompletedShards) {
  const EnumSpec spec{6, QuiverKind::Cycle, 9, Filter::All, 1, {}};
  std::vector<Algebra> before, after;
  std::vector<std::vector<int>> checkpoints;
  census_stream(
      spec, [](const Algebra&) -> std::optional<int> { return 0; },
      [&](const std::vector<int>& prefix, std::uint64_t, auto&& hits) {
        for (const auto& h : hits) (checkpoints.size() < 3 ? before : after).push_back(h.first);
        checkpoints.push_back(prefix);
      });
  ASSERT_GT(checkpoints.size(), 3u);
  EnumSpec resumed = spec;
  resumed.resume_after = checkpoints[2];
  EXPECT_EQ(enumerate_all(resumed), after);
  EXPECT_EQ(before.size() + after.size(), enumerate_all(spec).size());
}

TEST(Enumerate, RejectsInvalidSpecs) {
  EXPECT_THROW(enumerate_all({0, QuiverKind::Cycle, 4, Filter::All, 1, {}}), Error);
  EXPECT_THROW(enumerate_all({3, QuiverKind::Cycle, 1, Filter::All, 1, {}}), Error);
  EXPECT_THROW(enumerate_all({1, QuiverKind::Line, 4, Filter::All, 1, {}}), Error);
}

TEST(Enumerate, WorkerExceptionsPropagate) {
  EXPECT_THROW(run_ordered(
                   20, 4,
                   [](std::size_t i) -> int {
                     if (i == 7) throw std::runtime_error("boom");
                     return static_cast<int>(i);
                   },
                   [](std::size_t, int) {}),
               std::runtime_error);
  std::vector<std::size_t> order;
  run_ordered(
      50, 4, [](std::size_t i) { return i; }, [&](std::size_t i, std::size_t v) {
        EXPECT_EQ(i, v);
        order.push_back(i);
      });
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
  EXPECT_EQ(order.size(), 50u);
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(spectrum(9, QuiverKind::Line, 9).values(), (std::set<int>{2, 3, 4, 5, 8}));
  EXPECT_EQ(spectrum(9, QuiverKind::Cycle, 18, 0).values(),
            (std::set<int>{3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16}));
  const auto two = spectrum(2, QuiverKind::Cycle, 4);
  EXPECT_EQ(two.values(), (std::set<int>{2}));
  EXPECT_EQ(two.witnesses.at(2).c, (std::vector<int>{2, 3}));
  EXPECT_EQ(spectrum_csv(two), "n,kind,gldim,witness_kupisch\n2,cycle,2,\"2,3\"\n");
}

TEST(Spectrum, WitnessesAreHigherAuslander) {
  for (int n = 2; n <= 7; ++n)
    for (auto kind : {QuiverKind::Line, QuiverKind::Cycle}) {
      const auto s = spectrum(n, kind, 2 * n);
      for (const auto& [g, w] : s.witnesses) {
        const Algebra a = make_algebra(w);
        EXPECT_TRUE(is_higher_auslander(a));
        EXPECT_EQ(global_dim(a), static_cast<std::uint32_t>(g));
        EXPECT_GE(g, 2);
        EXPECT_LE(g, 2 * n - 2);
      }
    }
}
