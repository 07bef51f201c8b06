#pragma once

// Defect-one Nakayama algebras N_{n,a,s}, the corner-algebra map E with its
// closed form and inverse, the algebras Z_{n,m}, the higher Auslander and
// minimal Auslander-Gorenstein predicates, and the Morita-Nakayama
// algebras End_B(B + P/soc P) over selfinjective Nakayama algebras B.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/serial.hpp"

namespace nakayama {

//! N_{n,a,s}: Kupisch series a (s times) followed by a+1 (n-s times).
struct DOneParams {
  int n = 2;
  int a = 2;
  int s = 1;

  auto operator<=>(const DOneParams&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const DOneParams& p) {
    return os << "N[" << p.n << ',' << p.a << ',' << p.s << ']';
  }
};

//! C_n: the line algebra [2, ..., 2, 1] with n vertices.
struct LineMarker {
  int n = 1;

  auto operator<=>(const LineMarker&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const LineMarker& l) { return os << "C[" << l.n << ']'; }
};

//! Target of the corner-algebra map: a D1 cycle algebra or the line C_{n-1}.
using EImage = std::variant<DOneParams, LineMarker>;

inline std::ostream& operator<<(std::ostream& os, const EImage& e) {
  std::visit([&](const auto& x) { os << x; }, e);
  return os;
}

inline void validate(const DOneParams& p) {
  if (p.n < 2 || p.a < 2 || p.s < 1 || p.s > p.n - 1)
    fail(ErrorKind::InvalidParams, "N_{n,a,s} needs n >= 2, a >= 2, 1 <= s <= n-1; got n=" + std::to_string(p.n) +
                                       " a=" + std::to_string(p.a) + " s=" + std::to_string(p.s));
}

inline Algebra make_d1(const DOneParams& p) {
  validate(p);
  std::vector<int> c(static_cast<std::size_t>(p.n), p.a + 1);
  std::fill_n(c.begin(), p.s, p.a);
  return make_algebra(QuiverKind::Cycle, std::move(c));
}

inline Algebra make_line_c(int n) {
  if (n < 2) fail(ErrorKind::InvalidParams, "C_n needs n >= 2");
  std::vector<int> c(static_cast<std::size_t>(n), 2);
  c.back() = 1;
  return make_algebra(QuiverKind::Line, std::move(c));
}

inline Algebra to_algebra(const EImage& e) {
  if (const auto* p = std::get_if<DOneParams>(&e)) return make_d1(*p);
  return make_line_c(std::get<LineMarker>(e).n);
}

//! Rotation amount that brings a defect-one cycle series into the normal
//! form a^s (a+1)^{n-s}; nullopt if the series is not of that shape.
inline std::optional<std::size_t> d1_normal_rotation(std::span<const int> c) {
  const std::size_t n = c.size();
  if (n < 2) return std::nullopt;
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = c[(i + n - 1) % n];
    if (prev > c[i]) {
      if (start) return std::nullopt;
      start = i;
    }
  }
  if (!start) return std::nullopt;
  const int a = c[*start];
  for (int x : c)
    if (x != a && x != a + 1) return std::nullopt;
  return start;
}

//! Parameters (n, a, s) iff a is a defect-one cycle algebra.
inline std::optional<DOneParams> d1_params(const Algebra& a) {
  if (!a.is_cycle() || defect(a) != 1) return std::nullopt;
  const auto r = d1_normal_rotation(a.dims());
  internal_check(r.has_value(), "defect-one cycle series is not of the form a..a a+1..a+1");
  const auto c = rotate_left(a.dims(), *r);
  const int s = static_cast<int>(std::ranges::count(c, c.front()));
  return DOneParams{a.n(), c.front(), s};
}

//! Dominant dimension of N_{n,a,s} is at least 3 exactly when a + s and a + s + 1 avoid 0 mod n.
inline bool e_map_applicable(const DOneParams& p) {
  return p.n >= 3 && p.a >= 2 && p.a <= p.n - 1 && p.s >= 1 && p.s <= p.n - 1 && p.s != p.n - p.a &&
         p.s != p.n - 1 - p.a;
}

inline void require_e_domain(const DOneParams& p) {
  validate(p);
  if (!e_map_applicable(p))
    fail(ErrorKind::NotInDomain, "E is defined for 2 <= a <= n-1 with dominant dimension >= 3");
}

//! E(N_{n,a,s}) = eAe computed from the truncation formula.
inline Algebra e_map(const DOneParams& p) {
  require_e_domain(p);
  return truncate_last_vertex(make_d1(p));
}

inline EImage e_map_closed_form(const DOneParams& p) {
  require_e_domain(p);
  const int n = p.n, a = p.a, s = p.s;
  if (a == 2 && s == n - 1) return LineMarker{n - 1};
  if (s > n - a && a > 2) return DOneParams{n - 1, a - 1, s - (n - a)};
  if (s < n - a - 1) return DOneParams{n - 1, a, s + a};
  fail(ErrorKind::InternalError, "closed form of E does not cover this input");
}

//! Inverse of E; the argument lives over n-1 simples, the result over n.
inline DOneParams e_map_inverse(const EImage& image) {
  if (const auto* line = std::get_if<LineMarker>(&image)) {
    if (line->n < 2) fail(ErrorKind::InvalidParams, "C_n needs n >= 2");
    const int n = line->n + 1;
    return DOneParams{n, 2, n - 1};
  }
  const auto& p = std::get<DOneParams>(image);
  validate(p);
  const int n = p.n + 1;
  if (p.a < 2 || p.a > n - 2) fail(ErrorKind::InvalidParams, "inverse of E needs 2 <= a <= n-2");
  if (p.s <= p.a) return DOneParams{n, p.a + 1, p.s - p.a + n - 1};
  return DOneParams{n, p.a, p.s - p.a};
}

inline void validate_z(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1)
    fail(ErrorKind::InvalidParams, "Z_{n,m} needs n >= 2 and 1 <= m <= n-1; got n=" + std::to_string(n) +
                                       " m=" + std::to_string(m));
}

//! Closed-form parameters of Z_{n,m}, the defect-one cycle algebra with
//! global dimension n + m - 1.
inline DOneParams z_params(int n, int m) {
  validate_z(n, m);
  int a = 0;
  long twice_s = 0;
  if ((n - m) % 2 != 0) {
    a = (2 * n) / (n - m + 1);
    twice_s = long{a} * ((a - 1) * n - (a + 1) * m + a - 1) + 2;
  } else {
    a = (2 * (n - 1)) / (n - m);
    twice_s = long{a} * ((a - 1) * n - (a + 1) * m + 2);
  }
  internal_check(twice_s % 2 == 0, "Z closed form produced a non-integral s");
  return DOneParams{n, a, static_cast<int>(twice_s / 2)};
}

inline Algebra z_algebra(int n, int m) { return make_d1(z_params(n, m)); }

//! Z_{n,m} built by the recursion Z_{n,m} = E^{-1}(Z_{n-1,m-1}) from the
//! base cases Z_{n,1} = N_{n,2,n-1} and Z_{n,n-1} = N_{n,n,1}.
inline DOneParams z_params_recursive(int n, int m) {
  validate_z(n, m);
  if (m == 1) return DOneParams{n, 2, n - 1};
  if (m == n - 1) return DOneParams{n, n, 1};
  return e_map_inverse(z_params_recursive(n - 1, m - 1));
}

inline bool is_higher_auslander(const Algebra& a) {
  const ExtNat g = global_dim(a);
  return g.is_finite() && g.value() >= 2 && g == domdim_algebra(a);
}

inline bool is_min_auslander_gorenstein(const Algebra& a) {
  const ExtNat g = gorenstein_dim(a);
  return g.is_finite() && g.value() >= 2 && g == domdim_algebra(a);
}

//! For defect one and infinite global dimension: Gorenstein iff the dominant dimension is even.
inline bool d1_gorenstein_criterion(const Algebra& a) {
  if (defect(a) != 1 || global_dim(a).is_finite())
    fail(ErrorKind::NotInDomain, "criterion needs defect one and infinite global dimension");
  const ExtNat d = domdim_algebra(a);
  return d.is_finite() && d.value() % 2 == 0;
}

inline void validate_morita(int n, int w) {
  if (n < 2 || w < 2)
    fail(ErrorKind::InvalidParams, "Morita-Nakayama algebra needs n >= 2 and w >= 2; got n=" + std::to_string(n) +
                                       " w=" + std::to_string(w));
}

//! End_B(B + P/soc P) for B = [w, ..., w] with n simples and P = e_0 B.
//! The Kupisch series is read off the dimensions dim Hom_B(M, X) over the
//! summands X of M; for a defect-one algebra the multiset determines it.
inline Algebra morita_nakayama(int n, int w) {
  validate_morita(n, w);
  const Algebra base = make_algebra(QuiverKind::Cycle, std::vector<int>(static_cast<std::size_t>(n), w));
  std::vector<UniserialModule> summands;
  for (int i = 0; i < n; ++i) summands.push_back(projective_module(base, i));
  summands.push_back({0, w - 1});

  std::map<int, int> multiset;
  for (const auto& x : summands) {
    int dim = 0;
    for (const auto& y : summands) dim += hom_dim(base, y, x);
    ++multiset[dim];
  }
  if (multiset.size() != 2 || std::next(multiset.begin())->first != multiset.begin()->first + 1)
    fail(ErrorKind::InternalError, "endomorphism algebra dimensions are not of defect-one form");
  const int a = multiset.begin()->first;
  const int s = multiset.begin()->second;
  return make_d1(DOneParams{n + 1, a, s});
}

//! B selfinjective with n simples and Loewy length w; M = B + sum of e_x B / e_x J^{w-1}.
struct MoritaSpec {
  int n = 2;
  int w = 2;
  std::vector<int> points;
};

//! inf{k >= 1 : x_j + w - 1 = x_i + ceil((k+1)/2) w - g_k (mod n)} + 1,
//! with g_k = 1 for even k and 0 for odd k.
inline int morita_domdim_formula(const MoritaSpec& spec) {
  validate_morita(spec.n, spec.w);
  if (spec.points.empty()) fail(ErrorKind::InvalidParams, "Morita spec needs at least one point");
  const long n = spec.n;
  auto mod = [n](long x) { return ((x % n) + n) % n; };
  // ceil((k+1)/2) w - g_k is periodic in k with period dividing 2n.
  const int limit = 2 * spec.n * spec.w + 2;
  for (int k = 1; k <= limit; ++k) {
    const long shift = long{(k + 2) / 2} * spec.w - (k % 2 == 0 ? 1 : 0);
    for (int xi : spec.points)
      for (int xj : spec.points)
        if (mod(xj + spec.w - 1) == mod(xi + shift)) return k + 1;
  }
  fail(ErrorKind::InternalError, "dominant dimension formula did not terminate");
}

//! d_o = 2 inf{h >= 1 : hw = 0 mod n} + 1.
inline int morita_d_odd(int n, int w) {
  for (int h = 1;; ++h)
    if ((long{h} * w) % n == 0) return 2 * h + 1;
}

//! d_e = 2 inf{h >= 0 : hw + 1 = 0 mod n} + 2; nullopt when w is not a unit mod n.
inline std::optional<int> morita_d_even(int n, int w) {
  for (int h = 0; h < n; ++h)
    if ((long{h} * w + 1) % n == 0) return 2 * h + 2;
  return std::nullopt;
}

//! Single-point specialisation: min(d_o, d_e).
inline int morita_domdim_single(int n, int w) {
  validate_morita(n, w);
  const int d_o = morita_d_odd(n, w);
  const auto d_e = morita_d_even(n, w);
  return d_e ? std::min(d_o, *d_e) : d_o;
}

//! Gorenstein iff w is a unit mod n; then Gdim = d_e. Needs w > 2 and n >= 3.
inline std::pair<bool, ExtNat> morita_gorenstein(int n, int w) {
  if (n < 3 || w <= 2) fail(ErrorKind::InvalidParams, "Gorenstein criterion needs n >= 3 and w > 2");
  if (std::gcd(n, w) != 1) return {false, ExtNat::infinity()};
  const auto d_e = morita_d_even(n, w);
  internal_check(d_e.has_value(), "unit w without an inverse residue");
  return {true, ExtNat(static_cast<std::uint32_t>(*d_e))};
}

}  // namespace nakayama
