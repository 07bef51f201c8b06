#include <gtest/gtest.h>

#include "common.hpp"

using namespace nakayama;
using testing_support::cyc;
using testing_support::line;

TEST(DefectOne, NormalForm) {
  EXPECT_EQ(make_d1({5, 2, 3}), cyc({2, 2, 2, 3, 3}));
  EXPECT_EQ(d1_params(cyc({3, 2, 2, 3, 2, 2})), std::nullopt);
  EXPECT_EQ(defect(cyc({3, 2, 2, 3, 2, 2})), 2);
  EXPECT_EQ(d1_params(cyc({3, 3, 2})), (DOneParams{3, 2, 1}));
  EXPECT_EQ(d1_params(line({2, 2, 1})), std::nullopt);
  EXPECT_THROW(make_d1({5, 2, 5}), Error);
  EXPECT_THROW(make_d1({5, 1, 2}), Error);
  for (int n = 2; n <= 9; ++n)
    for (int a = 2; a <= 2 * n; ++a)
      for (int s = 1; s <= n - 1; ++s) {
        const DOneParams p{n, a, s};
        EXPECT_EQ(d1_params(make_d1(p)), p);
        for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
          EXPECT_EQ(d1_params(make_algebra(QuiverKind::Cycle, rotate_left(make_d1(p).dims(), r))), p);
      }
}

TEST(DefectOne, BasicDominantDimensionFacts) {
  for (int n = 2; n <= 9; ++n)
    for (int a = 2; a <= 2 * n; ++a)
      for (int s = 1; s <= n - 1; ++s) {
        const Algebra A = make_d1({n, a, s});
        const ExtNat dd = domdim_algebra(A);
        EXPECT_EQ(dd == 1u, (s + a) % n == 0) << A.series();
        EXPECT_EQ(dd == 2u, (s + a + 1) % n == 0) << A.series();
        if (dd == 2u) {
          EXPECT_EQ(gorenstein_dim(A), 2u);
        }
        if (dd == 1u) {
          EXPECT_TRUE(gorenstein_dim(A).is_infinite());
        }
        if (a >= n + 1) {
          EXPECT_TRUE(global_dim(A).is_infinite());
        }
      }
  EXPECT_EQ(global_dim(cyc({2, 3})), 2u);
}

TEST(EMap, Examples) {
  EXPECT_EQ(e_map_closed_form({7, 3, 5}), EImage(DOneParams{6, 2, 1}));
  EXPECT_EQ(e_map_closed_form({7, 2, 3}), EImage(DOneParams{6, 2, 5}));
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(e_map_closed_form({n, 2, n - 1}), EImage(LineMarker{n - 1}));
    EXPECT_EQ(e_map({n, 2, n - 1}), make_line_c(n - 1));
  }
  EXPECT_EQ(e_map_inverse(DOneParams{6, 2, 1}), (DOneParams{7, 3, 5}));
  EXPECT_EQ(e_map_inverse(DOneParams{6, 2, 5}), (DOneParams{7, 2, 3}));
  EXPECT_THROW(e_map_closed_form({7, 2, 5}), Error);
  EXPECT_THROW(e_map({7, 7, 1}), Error);
}

TEST(EMap, TableRowsRoundTrip) {
  int mapped = 0;
  for (const auto& row : table1_rows()) {
    if (!row.image) {
      EXPECT_LE(domdim_algebra(make_d1(row.source)), ExtNat(2));
      continue;
    }
    ++mapped;
    EXPECT_EQ(e_map_closed_form(row.source), *row.image);
    EXPECT_EQ(e_map_inverse(*row.image), row.source);
    EXPECT_TRUE(isomorphic(e_map(row.source), to_algebra(*row.image)));
  }
  EXPECT_EQ(mapped, 21);
}

TEST(EMap, BijectionForAllSmallN) {
  for (int n = 3; n <= 12; ++n) {
    std::set<EImage> images;
    int domain = 0;
    for (int a = 2; a <= n - 1; ++a)
      for (int s = 1; s <= n - 1; ++s) {
        const DOneParams p{n, a, s};
        EXPECT_EQ(e_map_applicable(p), domdim_algebra(make_d1(p)) >= ExtNat(3)) << p;
        if (!e_map_applicable(p)) continue;
        ++domain;
        const EImage img = e_map_closed_form(p);
        EXPECT_TRUE(isomorphic(e_map(p), to_algebra(img))) << p;
        EXPECT_EQ(e_map_inverse(img), p);
        images.insert(img);
      }
    EXPECT_EQ(domain, (n - 3) * (n - 2) + 1);
    EXPECT_EQ(images.size(), static_cast<std::size_t>(domain));
  }
}

TEST(ZAlgebra, Examples) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(z_params(n, 1), (DOneParams{n, 2, n - 1}));
    EXPECT_EQ(global_dim(z_algebra(n, 1)), static_cast<std::uint32_t>(n));
    EXPECT_EQ(z_params(n, n - 1), (DOneParams{n, n, 1}));
    EXPECT_EQ(global_dim(z_algebra(n, n - 1)), static_cast<std::uint32_t>(2 * n - 2));
  }
  EXPECT_EQ(z_params(9, 2), (DOneParams{9, 2, 5}));
  EXPECT_EQ(e_map_inverse(z_params(8, 1)), (DOneParams{9, 2, 5}));
  EXPECT_EQ(global_dim(z_algebra(9, 2)), 10u);
  EXPECT_EQ(z_params(9, 3), (DOneParams{9, 2, 2}));
  EXPECT_EQ(global_dim(z_algebra(9, 3)), 11u);
  EXPECT_THROW(z_params(5, 5), Error);
  EXPECT_THROW(z_params(1, 1), Error);
}

TEST(ZAlgebra, AgreesWithExplicitModel) {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m <= n - 1; ++m) {
      const oracle::Model model = testing_support::model(z_algebra(n, m));
      EXPECT_EQ(model.gldim(), n + m - 1);
      EXPECT_EQ(model.domdim_algebra(), n + m - 1);
      EXPECT_EQ(model.defect(), 1);
    }
}

TEST(Auslander, Examples) {
  EXPECT_TRUE(is_higher_auslander(cyc({2, 2, 3, 2, 2, 3, 2, 2, 3})));
  EXPECT_EQ(global_dim(cyc({2, 2, 3, 2, 2, 3, 2, 2, 3})), 3u);
  EXPECT_TRUE(is_higher_auslander(cyc({5, 5, 5, 5, 5, 9, 8, 7, 6})));
  EXPECT_EQ(global_dim(cyc({5, 5, 5, 5, 5, 9, 8, 7, 6})), 3u);
  EXPECT_TRUE(is_min_auslander_gorenstein(cyc({3, 3, 4})));
  EXPECT_FALSE(is_higher_auslander(cyc({3, 3, 4})));
  EXPECT_TRUE(is_higher_auslander(line({2, 2, 1})));
}

TEST(Auslander, GorensteinCriterion) {
  EXPECT_TRUE(d1_gorenstein_criterion(cyc({3, 3, 4})));
  EXPECT_FALSE(d1_gorenstein_criterion(make_d1({5, 3, 2})));
  EXPECT_THROW(d1_gorenstein_criterion(cyc({2, 3})), Error);
  EXPECT_THROW(d1_gorenstein_criterion(cyc({2, 4, 3, 3, 3})), Error);
}

TEST(Morita, Examples) {
  for (int n = 2; n <= 10; ++n) {
    std::vector<int> c(static_cast<std::size_t>(n + 1), 2);
    c.back() = 3;
    const Algebra a = morita_nakayama(n, 2);
    EXPECT_EQ(a, cyc(c));
    EXPECT_EQ(global_dim(a), static_cast<std::uint32_t>(n + 1));
    EXPECT_EQ(domdim_algebra(a), static_cast<std::uint32_t>(morita_domdim_formula({n, 2, {0}})));
  }
  const Algebra a = morita_nakayama(4, 3);
  EXPECT_EQ(domdim_algebra(a), 4u);
  EXPECT_EQ(gorenstein_dim(a), 4u);
  EXPECT_TRUE(global_dim(a).is_infinite());
  const Algebra b = morita_nakayama(5, 3);
  EXPECT_EQ(domdim_algebra(b), 8u);
  EXPECT_TRUE(is_higher_auslander(b));
  EXPECT_EQ(morita_domdim_formula({4, 3, {0}}), 4);
  EXPECT_EQ(morita_d_odd(4, 3), 9);
  EXPECT_EQ(morita_d_even(4, 3), 4);
  EXPECT_EQ(morita_gorenstein(4, 3), (std::pair{true, ExtNat(4)}));
  EXPECT_EQ(morita_gorenstein(6, 3), (std::pair{false, ExtNat::infinity()}));
  EXPECT_EQ(morita_gorenstein(4, 5), (std::pair{true, ExtNat(8)}));
  EXPECT_EQ(gorenstein_dim(morita_nakayama(4, 5)), 8u);
  EXPECT_THROW(morita_gorenstein(4, 2), Error);
  EXPECT_THROW(morita_nakayama(4, 1), Error);
}

TEST(Morita, FormulaSpecialisation) {
  for (int n = 2; n <= 20; ++n)
    for (int w = 2; w <= 20; ++w) EXPECT_EQ(morita_domdim_formula({n, w, {0}}), morita_domdim_single(n, w));
  // Several points never increase the dominant dimension.
  for (int n = 2; n <= 12; ++n)
    for (int w = 2; w <= 12; ++w)
      EXPECT_LE(morita_domdim_formula({n, w, {0, 1}}), morita_domdim_formula({n, w, {0}}));
}
