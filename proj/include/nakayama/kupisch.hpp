#pragma once

// Kupisch series and the validated Algebra value built from them.
//
// Conventions used everywhere in the library: vertices are 0..n-1, arrows
// go i -> i+1 (indices mod n on a cycle), and c_i = dim e_i A. The module
// e_i A / e_i J^l has composition factors S_i, S_{i+1}, ..., S_{i+l-1}
// from top to socle.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nakayama/error.hpp"

namespace nakayama {

enum class QuiverKind { Line, Cycle };

inline std::string_view to_string(QuiverKind kind) { return kind == QuiverKind::Line ? "line" : "cycle"; }

inline std::optional<QuiverKind> parse_quiver_kind(std::string_view text) {
  if (text == "line" || text == "L" || text == "l") return QuiverKind::Line;
  if (text == "cycle" || text == "C" || text == "c") return QuiverKind::Cycle;
  return std::nullopt;
}

struct KupischSeries {
  QuiverKind kind = QuiverKind::Cycle;
  std::vector<int> c;

  int n() const { return static_cast<int>(c.size()); }

  auto operator<=>(const KupischSeries&) const = default;
};

//! Comma separated entries, e.g. "2,4,3,3,3".
inline std::string format_entries(std::span<const int> c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const KupischSeries& s) {
  return os << to_string(s.kind) << ":[" << format_entries(s.c) << ']';
}

class Algebra;
Algebra make_algebra(QuiverKind kind, std::vector<int> c);

//! A connected, non-semisimple Nakayama algebra, identified by its Kupisch
//! series. Only obtainable through make_algebra, so every instance is valid.
class Algebra {
 public:
  const KupischSeries& series() const { return series_; }
  QuiverKind kind() const { return series_.kind; }
  bool is_cycle() const { return series_.kind == QuiverKind::Cycle; }
  bool is_line() const { return series_.kind == QuiverKind::Line; }
  int n() const { return series_.n(); }
  std::span<const int> dims() const { return series_.c; }

  //! Reduces a vertex label: mod n on a cycle; on a line it must already lie in range.
  int vertex(long i) const {
    const long n = series_.n();
    if (is_cycle()) return static_cast<int>(((i % n) + n) % n);
    internal_check(i >= 0 && i < n, "line vertex out of range: " + std::to_string(i));
    return static_cast<int>(i);
  }

  //! c_i, with i reduced as by vertex().
  int c(long i) const { return series_.c[static_cast<std::size_t>(vertex(i))]; }

  int max_entry() const { return max_entry_; }
  int total_dim() const { return total_dim_; }
  bool selfinjective() const { return selfinjective_; }

  //! Dense index of M(i, l) in [0, total_dim()); one slot per indecomposable.
  int module_index(int i, int length) const { return offsets_[static_cast<std::size_t>(i)] + length - 1; }

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.series_ == b.series_; }

  friend std::ostream& operator<<(std::ostream& os, const Algebra& a) { return os << a.series_; }

 private:
  friend Algebra make_algebra(QuiverKind kind, std::vector<int> c);

  explicit Algebra(KupischSeries series) : series_(std::move(series)) {
    offsets_.reserve(series_.c.size());
    for (int ci : series_.c) {
      offsets_.push_back(total_dim_);
      total_dim_ += ci;
    }
    max_entry_ = *std::ranges::max_element(series_.c);
    selfinjective_ = is_cycle() && std::ranges::all_of(series_.c, [&](int x) { return x == series_.c.front(); });
  }

  KupischSeries series_;
  std::vector<int> offsets_;
  int total_dim_ = 0;
  int max_entry_ = 0;
  bool selfinjective_ = false;
};

inline Algebra make_algebra(QuiverKind kind, std::vector<int> c) {
  const int n = static_cast<int>(c.size());
  auto invalid = [](const std::string& msg) { fail(ErrorKind::InvalidSeries, msg); };
  auto at = [&](int i) { return "c_" + std::to_string(i) + " = " + std::to_string(c[static_cast<std::size_t>(i)]); };

  if (n == 0) invalid("empty series");
  for (int i = 0; i < n; ++i)
    if (c[static_cast<std::size_t>(i)] < 1) invalid(at(i) + " is not positive");
  if (std::ranges::all_of(c, [](int x) { return x == 1; }))
    fail(ErrorKind::Semisimple, "all entries equal 1; the algebra is semisimple");

  if (kind == QuiverKind::Cycle) {
    for (int i = 0; i < n; ++i)
      if (c[static_cast<std::size_t>(i)] < 2) invalid(at(i) + " < 2 on a cycle quiver");
  } else {
    if (c.back() != 1) invalid("last entry " + at(n - 1) + " must be 1 on a line quiver");
    for (int i = 0; i + 1 < n; ++i)
      if (c[static_cast<std::size_t>(i)] < 2) invalid(at(i) + " < 2 disconnects the line quiver");
    for (int i = 0; i < n; ++i)
      if (c[static_cast<std::size_t>(i)] > n - i)
        invalid(at(i) + " exceeds n - i = " + std::to_string(n - i) + " on a line quiver");
  }

  const int steps = kind == QuiverKind::Cycle ? n : n - 1;
  for (int i = 0; i < steps; ++i) {
    const int next = (i + 1) % n;
    if (c[static_cast<std::size_t>(next)] < c[static_cast<std::size_t>(i)] - 1) {
      invalid(at(i) + " but " + at(next) + " < c_" + std::to_string(i) + " - 1" +
              (next == 0 ? " (wraparound)" : ""));
    }
  }
  return Algebra(KupischSeries{kind, std::move(c)});
}

inline Algebra make_algebra(const KupischSeries& s) { return make_algebra(s.kind, s.c); }

//! Index r minimising the rotation c_r, c_{r+1}, ... lexicographically (smallest r on ties).
inline std::size_t least_rotation(std::span<const int> c) {
  const std::size_t n = c.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const int x = c[(r + k) % n];
      const int y = c[(best + k) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  return best;
}

inline std::vector<int> rotate_left(std::span<const int> c, std::size_t r) {
  std::vector<int> out(c.begin(), c.end());
  if (!out.empty()) std::ranges::rotate(out, out.begin() + static_cast<std::ptrdiff_t>(r % out.size()));
  return out;
}

//! Isomorphism-class representative: cycles become their least rotation; lines are unchanged.
inline Algebra canonical_form(const Algebra& a) {
  if (a.is_line()) return a;
  const std::size_t r = least_rotation(a.dims());
  if (r == 0) return a;
  return make_algebra(QuiverKind::Cycle, rotate_left(a.dims(), r));
}

inline bool is_canonical(const Algebra& a) { return a.is_line() || least_rotation(a.dims()) == 0; }

inline bool isomorphic(const Algebra& a, const Algebra& b) { return canonical_form(a) == canonical_form(b); }

//! Parses the text form "2,4,3,3,3" (or "2 4 3 3 3"), optionally tagged "line:..." or "cycle:...".
//! Without a tag (or forced kind) a trailing 1 means a line quiver.
inline KupischSeries parse_kupisch(std::string_view text, std::optional<QuiverKind> forced = std::nullopt) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::optional<QuiverKind> tagged;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    tagged = parse_quiver_kind(trim(text.substr(0, colon)));
    if (!tagged) fail(ErrorKind::InvalidSeries, "unknown quiver tag '" + std::string(text.substr(0, colon)) + "'");
    text = trim(text.substr(colon + 1));
  }
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = trim(text.substr(1, text.size() - 2));

  // Entries are comma separated, or whitespace separated when no comma occurs.
  const bool commas = text.find(',') != std::string_view::npos;
  std::vector<int> c;
  while (true) {
    const auto comma = commas ? text.find(',') : text.find_first_of(" \t");
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      fail(ErrorKind::InvalidSeries, "cannot parse entry '" + std::string(token) + "'");
    c.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (!commas) text = trim(text);
  }

  if (forced && tagged && *forced != *tagged) fail(ErrorKind::InvalidSeries, "conflicting quiver kinds");
  QuiverKind kind = c.back() == 1 ? QuiverKind::Line : QuiverKind::Cycle;
  if (tagged) kind = *tagged;
  if (forced) kind = *forced;
  return KupischSeries{kind, std::move(c)};
}

inline Algebra parse_algebra(std::string_view text, std::optional<QuiverKind> forced = std::nullopt) {
  return make_algebra(parse_kupisch(text, forced));
}

}  // namespace nakayama
