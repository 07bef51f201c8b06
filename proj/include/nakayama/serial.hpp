#pragma once

// Indecomposable modules over a Nakayama algebra and their structural
// calculus: covers, envelopes, (co)syzygies, AR translates, Hom dimensions,
// plus the two algebra-level constructions every later layer needs
// (opposite algebra and the corner algebra eAe for e = 1 - e_{n-1}).

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

//! M(top, length) = e_top A / e_top J^length.
struct UniserialModule {
  int top = 0;
  int length = 1;

  auto operator<=>(const UniserialModule&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const UniserialModule& m) {
    return os << "M(" << m.top << ',' << m.length << ')';
  }
};

//! std::nullopt plays the role of the zero module.
using ModuleOrZero = std::optional<UniserialModule>;

inline bool is_valid_module(const Algebra& a, const UniserialModule& m) {
  return m.top >= 0 && m.top < a.n() && m.length >= 1 && m.length <= a.c(m.top);
}

inline UniserialModule simple_module(int i) { return {i, 1}; }

inline UniserialModule projective_module(const Algebra& a, int i) { return {i, a.c(i)}; }

inline int socle_vertex(const Algebra& a, const UniserialModule& m) { return a.vertex(long{m.top} + m.length - 1); }

inline bool is_projective(const Algebra& a, const UniserialModule& m) { return m.length == a.c(m.top); }

//! M(i,l) is injective iff it is not the radical-quotient of a longer module
//! with the same socle, i.e. iff M(i-1, l+1) does not exist.
inline bool is_injective(const Algebra& a, const UniserialModule& m) {
  if (a.is_line() && m.top == 0) return true;
  return a.c(long{m.top} - 1) <= m.length;
}

inline bool is_projective_injective(const Algebra& a, const UniserialModule& m) {
  return is_projective(a, m) && is_injective(a, m);
}

inline UniserialModule projective_cover(const Algebra& a, const UniserialModule& m) {
  return projective_module(a, m.top);
}

//! The longest module with the same socle as m.
inline UniserialModule injective_envelope(const Algebra& a, const UniserialModule& m) {
  const long s = socle_vertex(a, m);
  int r = m.length - 1;
  while (true) {
    const long j = s - (r + 1);
    if (a.is_line() && j < 0) break;
    if (a.c(j) < r + 2) break;
    ++r;
  }
  return {a.vertex(s - r), r + 1};
}

inline ModuleOrZero syzygy(const Algebra& a, const UniserialModule& m) {
  if (is_projective(a, m)) return std::nullopt;
  return UniserialModule{a.vertex(long{m.top} + m.length), a.c(m.top) - m.length};
}

inline ModuleOrZero cosyzygy(const Algebra& a, const UniserialModule& m) {
  if (is_injective(a, m)) return std::nullopt;
  const UniserialModule env = injective_envelope(a, m);
  return UniserialModule{env.top, env.length - m.length};
}

inline UniserialModule tau(const Algebra& a, const UniserialModule& m) {
  if (is_projective(a, m)) fail(ErrorKind::NotInDomain, "tau of a projective module");
  return {a.vertex(long{m.top} + 1), m.length};
}

inline UniserialModule tau_inverse(const Algebra& a, const UniserialModule& m) {
  if (is_injective(a, m)) fail(ErrorKind::NotInDomain, "tau inverse of an injective module");
  return {a.vertex(long{m.top} - 1), m.length};
}

//! dim Hom(m, v): one homomorphism per common length t whose image is the
//! length-t quotient of m and the length-t submodule of v.
inline int hom_dim(const Algebra& a, const UniserialModule& m, const UniserialModule& v) {
  int count = 0;
  const int bound = std::min(m.length, v.length);
  for (int t = 1; t <= bound; ++t) {
    const long image_top = long{v.top} + v.length - t;
    const bool match = a.is_cycle() ? a.vertex(image_top) == m.top : image_top == m.top;
    if (match) ++count;
  }
  return count;
}

//! All indecomposable modules, in (top, length) order.
inline std::vector<UniserialModule> all_modules(const Algebra& a) {
  std::vector<UniserialModule> out;
  out.reserve(static_cast<std::size_t>(a.total_dim()));
  for (int i = 0; i < a.n(); ++i)
    for (int l = 1; l <= a.c(i); ++l) out.push_back({i, l});
  return out;
}

//! Length of the indecomposable injective with socle S_i, i.e. the number
//! of nonzero paths ending at i: #{k >= 0 : c_{i-k} > k}.
inline int injective_length(const Algebra& a, int i) {
  int count = 0;
  for (int k = 0; k < a.max_entry(); ++k) {
    if (a.is_line() && i - k < 0) break;
    if (a.c(long{i} - k) > k) ++count;
  }
  return count;
}

//! Vertex of A matching vertex j of the opposite algebra (orientation reversed).
inline int opposite_vertex(const Algebra& a, int j) {
  return a.is_cycle() ? (a.n() - j) % a.n() : a.n() - 1 - j;
}

inline Algebra opposite(const Algebra& a) {
  std::vector<int> c(static_cast<std::size_t>(a.n()));
  for (int j = 0; j < a.n(); ++j) c[static_cast<std::size_t>(j)] = injective_length(a, opposite_vertex(a, j));
  return make_algebra(a.kind(), std::move(c));
}

//! eAe for e = e_0 + ... + e_{n-2} on a cycle algebra. dim e_i A e is c_i
//! minus the multiplicity of S_{n-1} in e_i A. The quiver stays a cycle when
//! the path n-2 -> n-1 -> 0 survives and becomes a line otherwise.
inline Algebra truncate_last_vertex(const Algebra& a) {
  const int n = a.n();
  if (!a.is_cycle() || n < 2) fail(ErrorKind::NotApplicable, "truncation needs a cycle algebra with n >= 2");
  std::vector<int> r(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    int hits = 0;
    for (int k = 0; k < a.c(i); ++k)
      if ((i + k) % n == n - 1) ++hits;
    r[static_cast<std::size_t>(i)] = a.c(i) - hits;
  }
  const QuiverKind kind = r.back() == 1 ? QuiverKind::Line : QuiverKind::Cycle;
  try {
    return make_algebra(kind, std::move(r));
  } catch (const Error& e) {
    fail(ErrorKind::NotApplicable, std::string("truncated series is not a valid algebra: ") + e.what());
  }
}

//! eAe for e = 1 - e_v: rotates v into the last position, then truncates.
//! Vertex i != v of the result corresponds to vertex (v + 1 + i) mod n of a.
inline Algebra truncate_vertex(const Algebra& a, int v) {
  if (!a.is_cycle()) fail(ErrorKind::NotApplicable, "truncation needs a cycle algebra");
  const auto shift = static_cast<std::size_t>(a.vertex(long{v} + 1));
  return truncate_last_vertex(make_algebra(QuiverKind::Cycle, rotate_left(a.dims(), shift)));
}

}  // namespace nakayama
