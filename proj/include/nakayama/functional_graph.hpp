#pragma once

// Rho-shaped orbit analysis of a self-map on {0, ..., size-1}.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "nakayama/error.hpp"

namespace nakayama {

//! Exact non-negative rational in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den) {
    internal_check(den > 0, "rational with non-positive denominator");
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }

  bool operator==(const Rational&) const = default;

  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
};

class FunctionalGraph {
 public:
  explicit FunctionalGraph(std::vector<int> succ) : succ_(std::move(succ)) { analyze(); }

  int size() const { return static_cast<int>(succ_.size()); }
  int succ(int v) const { return succ_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& successors() const { return succ_; }

  //! Component id per vertex; ids follow the order in which cycles are found.
  int component(int v) const { return component_[static_cast<std::size_t>(v)]; }
  int component_count() const { return static_cast<int>(cycles_.size()); }

  //! Exactly one cycle per component, listed in orbit order from its least vertex.
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  bool on_cycle(int v) const { return tail_[static_cast<std::size_t>(v)] == 0; }

  //! Number of steps before the orbit of v enters its cycle.
  int tail(int v) const { return tail_[static_cast<std::size_t>(v)]; }

  int in_degree(int v) const { return in_degree_[static_cast<std::size_t>(v)]; }

  std::vector<int> sources() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
      if (in_degree_[static_cast<std::size_t>(v)] == 0) out.push_back(v);
    return out;
  }

 private:
  void analyze() {
    const std::size_t n = succ_.size();
    for (int s : succ_) internal_check(s >= 0 && static_cast<std::size_t>(s) < n, "successor out of range");
    component_.assign(n, -1);
    tail_.assign(n, -1);
    in_degree_.assign(n, 0);
    for (int s : succ_) ++in_degree_[static_cast<std::size_t>(s)];

    // 0 = unseen, 1 = on the current walk, 2 = done.
    std::vector<std::uint8_t> state(n, 0);
    std::vector<int> path;
    for (std::size_t start = 0; start < n; ++start) {
      if (state[start] != 0) continue;
      path.clear();
      int v = static_cast<int>(start);
      while (state[static_cast<std::size_t>(v)] == 0) {
        state[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        v = succ_[static_cast<std::size_t>(v)];
      }
      std::size_t settled = path.size();
      if (state[static_cast<std::size_t>(v)] == 1) {
        // The walk closed a new cycle starting at v.
        std::size_t first = 0;
        while (path[first] != v) ++first;
        std::vector<int> cycle(path.begin() + static_cast<std::ptrdiff_t>(first), path.end());
        std::size_t least = 0;
        for (std::size_t k = 1; k < cycle.size(); ++k)
          if (cycle[k] < cycle[least]) least = k;
        std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(least), cycle.end());
        const int id = static_cast<int>(cycles_.size());
        for (int u : cycle) {
          component_[static_cast<std::size_t>(u)] = id;
          tail_[static_cast<std::size_t>(u)] = 0;
          state[static_cast<std::size_t>(u)] = 2;
        }
        cycles_.push_back(std::move(cycle));
        settled = first;
      }
      for (std::size_t k = settled; k-- > 0;) {
        const auto u = static_cast<std::size_t>(path[k]);
        const auto next = static_cast<std::size_t>(succ_[u]);
        component_[u] = component_[next];
        tail_[u] = tail_[next] + 1;
        state[u] = 2;
      }
    }
  }

  std::vector<int> succ_;
  std::vector<int> component_;
  std::vector<int> tail_;
  std::vector<int> in_degree_;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace nakayama
