#pragma once

#include <vector>

#include "nakayama/nakayama.hpp"
#include "oracle.hpp"

namespace testing_support {

inline nakayama::Algebra cyc(std::vector<int> c) { return nakayama::make_algebra(nakayama::QuiverKind::Cycle, std::move(c)); }
inline nakayama::Algebra line(std::vector<int> c) { return nakayama::make_algebra(nakayama::QuiverKind::Line, std::move(c)); }

inline oracle::Model model(const nakayama::Algebra& a) {
  return oracle::Model{a.is_cycle(), {a.dims().begin(), a.dims().end()}};
}

inline std::vector<int> factors(const nakayama::Algebra& a, const nakayama::UniserialModule& m) {
  return model(a).factors(m.top, m.length);
}

inline std::vector<int> factors(const nakayama::Algebra& a, const nakayama::ModuleOrZero& m) {
  return m ? factors(a, *m) : std::vector<int>{};
}

inline int as_int(const nakayama::ExtNat& x) { return x.is_infinite() ? -1 : static_cast<int>(x.value()); }

//! Small exhaustive family: cycles with n <= 5 and entries <= 8, all lines with n <= 6.
inline std::vector<nakayama::Algebra> small_family(int cycle_n = 5, int cap = 8, int line_n = 6) {
  using namespace nakayama;
  std::vector<Algebra> out;
  for (int n = 1; n <= cycle_n; ++n)
    for (auto& a : enumerate_all(EnumSpec{n, QuiverKind::Cycle, cap, Filter::All, 1, {}})) out.push_back(a);
  for (int n = 2; n <= line_n; ++n)
    for (auto& a : enumerate_all(EnumSpec{n, QuiverKind::Line, n, Filter::All, 1, {}})) out.push_back(a);
  return out;
}

}  // namespace testing_support
