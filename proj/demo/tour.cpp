// A short tour of the library: one invariant report, a Z-algebra, the
// defect-one map E, a Morita-Nakayama algebra and a small spectrum.

#include <iostream>

#include "nakayama/nakayama.hpp"

namespace nk = nakayama;

int main() {
  const nk::Algebra a = nk::parse_algebra("2,4,3,3,3");
  std::cout << nk::to_text(nk::compute_report(a)) << '\n';

  const nk::Algebra z = nk::z_algebra(9, 2);
  std::cout << "Z_{9,2} = " << nk::format_entries(z.dims()) << ", gldim " << nk::global_dim(z) << ", domdim "
            << nk::domdim_algebra(z) << "\n";

  const nk::DOneParams p{7, 4, 6};
  std::cout << "E(N_{7,4,6}) = " << nk::e_map_closed_form(p) << " = "
            << nk::format_entries(nk::e_map(p).dims()) << "\n";

  const nk::Algebra m = nk::morita_nakayama(4, 3);
  std::cout << "Morita-Nakayama (n=4, w=3): " << nk::format_entries(m.dims()) << ", domdim "
            << nk::domdim_algebra(m) << ", Gdim " << nk::gorenstein_dim(m) << "\n";

  for (auto kind : {nk::QuiverKind::Line, nk::QuiverKind::Cycle}) {
    const auto s = nk::spectrum(5, kind, 10);
    std::cout << "zeta(" << nk::to_string(kind) << ", 5) =";
    for (int g : s.values()) std::cout << ' ' << g;
    std::cout << "\n";
  }
  return 0;
}
