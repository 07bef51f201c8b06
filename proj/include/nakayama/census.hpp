#pragma once

// Enumeration of Nakayama algebras up to isomorphism and the higher
// Auslander spectrum.
//
// Cycle series are produced directly in canonical form (least rotation),
// so c_0 is the minimum entry. Because c_{i+1} >= c_i - 1 around the whole
// cycle, max - min <= n - 1, which bounds the search. Work is split into
// shards by the prefix (c_0, c_1) of the canonical series; every algebra
// belongs to exactly one shard, so workers never coordinate. Shards are
// emitted in prefix order, which makes the output independent of the
// number of workers.
//
// Finite global dimension forces c_i <= 2n - 1: the resolution quiver then
// has weight 1, so its cycle entries sum to n and some c_i <= n, and the
// spread bound above gives the rest. Searches restricted to finite global
// dimension therefore need cap = 2n at most.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "nakayama/classify.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

enum class Filter { All, NonSelfinjective, FiniteGldim, DefectOne };

inline std::string_view to_string(Filter f) {
  switch (f) {
    case Filter::All: return "all";
    case Filter::NonSelfinjective: return "non-selfinjective";
    case Filter::FiniteGldim: return "finite-gldim";
    case Filter::DefectOne: return "defect-1";
  }
  return "all";
}

inline std::optional<Filter> parse_filter(std::string_view text) {
  for (Filter f : {Filter::All, Filter::NonSelfinjective, Filter::FiniteGldim, Filter::DefectOne})
    if (text == to_string(f)) return f;
  return std::nullopt;
}

struct EnumSpec {
  int n = 2;
  QuiverKind kind = QuiverKind::Cycle;
  int cap = 4;  // largest allowed entry
  Filter filter = Filter::All;
  unsigned jobs = 1;  // 0 = one per hardware thread
  std::optional<std::vector<int>> resume_after;  // skip shards with prefix <= this
};

inline int default_cycle_cap(int n) { return 2 * n; }

inline void validate(const EnumSpec& spec) {
  if (spec.n < 1) fail(ErrorKind::InvalidSpec, "n must be at least 1");
  if (spec.kind == QuiverKind::Line && spec.n < 2) fail(ErrorKind::InvalidSpec, "line quivers need n >= 2");
  if (spec.cap < 2) fail(ErrorKind::InvalidSpec, "cap must be at least 2");
}

inline unsigned effective_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

class SeriesSearch {
 public:
  explicit SeriesSearch(const EnumSpec& spec) : spec_(spec), c_(static_cast<std::size_t>(spec.n)) {}

  int prefix_length() const { return std::min(2, spec_.n); }

  std::vector<std::vector<int>> shards() {
    std::vector<std::vector<int>> out;
    const int depth = prefix_length();
    extend(0, depth, [&] { out.emplace_back(c_.begin(), c_.begin() + depth); });
    return out;
  }

  //! Calls visit(const Algebra&) for every accepted series below the prefix.
  template <class Visit>
  void run_shard(const std::vector<int>& prefix, Visit&& visit) {
    std::ranges::copy(prefix, c_.begin());
    extend(static_cast<int>(prefix.size()), spec_.n, [&] {
      if (auto a = accept()) visit(*a);
    });
  }

 private:
  bool cycle() const { return spec_.kind == QuiverKind::Cycle; }

  // Inclusive range of admissible values at position pos given c_[0..pos).
  std::pair<int, int> range(int pos) const {
    const int n = spec_.n;
    if (cycle()) {
      if (pos == 0) {
        const int hi = spec_.filter == Filter::FiniteGldim ? std::min(spec_.cap, n) : spec_.cap;
        return {2, hi};
      }
      const int lo = std::max(c_[0], c_[static_cast<std::size_t>(pos - 1)] - 1);
      int hi = std::min(spec_.cap, c_[0] + n - 1);
      if (spec_.filter == Filter::DefectOne) hi = std::min(hi, c_[0] + 1);
      return {lo, hi};
    }
    if (pos == n - 1) return {1, 1};
    const int lo = pos == 0 ? 2 : std::max(2, c_[static_cast<std::size_t>(pos - 1)] - 1);
    return {lo, std::min(spec_.cap, n - pos)};
  }

  template <class Leaf>
  void extend(int pos, int depth, Leaf&& leaf) {
    if (pos == depth) {
      leaf();
      return;
    }
    const auto [lo, hi] = range(pos);
    for (int v = lo; v <= hi; ++v) {
      c_[static_cast<std::size_t>(pos)] = v;
      extend(pos + 1, depth, leaf);
    }
  }

  std::optional<Algebra> accept() const {
    const int n = spec_.n;
    if (cycle()) {
      if (c_.front() < c_.back() - 1) return std::nullopt;
      if (least_rotation(c_) != 0) return std::nullopt;
    } else if (c_[static_cast<std::size_t>(n - 2)] > 2) {
      return std::nullopt;
    }
    Algebra a = make_algebra(spec_.kind, c_);
    switch (spec_.filter) {
      case Filter::All: break;
      case Filter::NonSelfinjective:
        if (a.selfinjective()) return std::nullopt;
        break;
      case Filter::FiniteGldim:
        if (a.is_cycle() && !shen_finite_gldim(a)) return std::nullopt;
        break;
      case Filter::DefectOne:
        if (defect(a) != 1) return std::nullopt;
        break;
    }
    return a;
  }

  EnumSpec spec_;
  std::vector<int> c_;
};

}  // namespace detail

//! Runs work(i) for i in [0, count) on up to `jobs` threads and hands the
//! results to emit(i, result) on the calling thread in index order.
template <class Work, class Emit>
void run_ordered(std::size_t count, unsigned jobs, Work&& work, Emit&& emit) {
  using T = std::invoke_result_t<Work&, std::size_t>;
  jobs = std::min<unsigned>(effective_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) emit(i, work(i));
    return;
  }

  std::vector<std::optional<T>> slots(count);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;

  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        while (!stop.load()) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) break;
          try {
            T result = work(i);
            std::lock_guard lock(mutex);
            slots[i].emplace(std::move(result));
          } catch (...) {
            std::lock_guard lock(mutex);
            if (!error) error = std::current_exception();
            stop = true;
          }
          ready.notify_all();
        }
      });
    }

    try {
      for (std::size_t i = 0; i < count; ++i) {
        std::optional<T> result;
        {
          std::unique_lock lock(mutex);
          ready.wait(lock, [&] { return slots[i].has_value() || error != nullptr; });
          if (error) break;
          result = std::move(slots[i]);
          slots[i].reset();
        }
        emit(i, std::move(*result));
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!error) error = std::current_exception();
    }
    stop = true;
  }
  if (error) std::rethrow_exception(error);
}

template <class R>
struct CensusResult {
  std::uint64_t scanned = 0;
  std::vector<std::pair<Algebra, R>> hits;  // canonical order
};

//! Applies map (Algebra -> std::optional<R>) to every enumerated algebra and
//! hands each shard's engaged results, in canonical order, to
//! on_shard(prefix, scanned, hits). The prefix is a valid resume token once
//! the call returns.
template <class Map, class OnShard>
void census_stream(const EnumSpec& spec, Map&& map, OnShard&& on_shard) {
  using Opt = std::invoke_result_t<Map&, const Algebra&>;
  using R = typename Opt::value_type;
  validate(spec);

  std::vector<std::vector<int>> shards = detail::SeriesSearch(spec).shards();
  if (spec.resume_after) std::erase_if(shards, [&](const auto& p) { return p <= *spec.resume_after; });

  run_ordered(
      shards.size(), spec.jobs,
      [&](std::size_t i) {
        CensusResult<R> part;
        detail::SeriesSearch search(spec);
        search.run_shard(shards[i], [&](const Algebra& a) {
          ++part.scanned;
          if (Opt r = map(a)) part.hits.emplace_back(a, std::move(*r));
        });
        return part;
      },
      [&](std::size_t i, CensusResult<R>&& part) { on_shard(shards[i], part.scanned, std::move(part.hits)); });
}

//! Applies map to every enumerated algebra and keeps the engaged results in canonical order.
template <class Map>
auto census_map(const EnumSpec& spec, Map&& map) {
  using R = typename std::invoke_result_t<Map&, const Algebra&>::value_type;
  CensusResult<R> out;
  census_stream(spec, map, [&](const std::vector<int>&, std::uint64_t scanned, auto&& hits) {
    out.scanned += scanned;
    for (auto& hit : hits) out.hits.push_back(std::move(hit));
  });
  return out;
}

//! Streams every algebra of the family, each isomorphism class once, in canonical order.
inline void enumerate(const EnumSpec& spec, const std::function<void(const Algebra&)>& sink) {
  census_stream(spec, [](const Algebra&) -> std::optional<bool> { return true; },
                [&](const std::vector<int>&, std::uint64_t, auto&& hits) {
                  for (const auto& hit : hits) sink(hit.first);
                });
}

inline std::vector<Algebra> enumerate_all(const EnumSpec& spec) {
  std::vector<Algebra> out;
  enumerate(spec, [&](const Algebra& a) { out.push_back(a); });
  return out;
}

struct SpectrumResult {
  int n = 0;
  QuiverKind kind = QuiverKind::Cycle;
  std::uint64_t scanned = 0;
  std::map<int, KupischSeries> witnesses;  // gldim -> least canonical witness

  std::set<int> values() const {
    std::set<int> out;
    for (const auto& [g, _] : witnesses) out.insert(g);
    return out;
  }
};

//! Global dimensions realised by higher Auslander algebras on the line or
//! cycle quiver with n vertices. Cycle searches restrict to finite global
//! dimension, which is complete once cap >= 2n - 1.
inline SpectrumResult spectrum(int n, QuiverKind kind, int cap, unsigned jobs = 1) {
  EnumSpec spec{n, kind, cap, kind == QuiverKind::Cycle ? Filter::FiniteGldim : Filter::All, jobs, std::nullopt};
  const auto result = census_map(spec, [](const Algebra& a) -> std::optional<int> {
    if (!is_higher_auslander(a)) return std::nullopt;
    return static_cast<int>(global_dim(a).value());
  });
  SpectrumResult out{n, kind, result.scanned, {}};
  for (const auto& [a, g] : result.hits) {
    internal_check(g >= 2 && g <= 2 * n - 2, "higher Auslander global dimension outside [2, 2n-2]");
    out.witnesses.try_emplace(g, a.series());
  }
  return out;
}

inline std::string spectrum_csv(const SpectrumResult& s, bool header = true) {
  std::string out = header ? "n,kind,gldim,witness_kupisch\n" : "";
  for (const auto& [g, w] : s.witnesses)
    out += std::to_string(s.n) + "," + std::string(to_string(s.kind)) + "," + std::to_string(g) + ",\"" +
           format_entries(w.c) + "\"\n";
  return out;
}

}  // namespace nakayama
