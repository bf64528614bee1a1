#include <gtest/gtest.h>

#include <random>

#include "facegroup/approx_bridge.hpp"
#include "facegroup/examples.hpp"

namespace fg = facegroup;
using fg::VertexId;

namespace {

const fg::TargetPtr& oct() {
  static const fg::TargetPtr t = fg::octahedron();
  return t;
}

VertexId V(const char* name) { return oct()->complex->vertex(name); }

bool anti_diagonal_fails(const fg::GridMap& g) {
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.m(); ++i) {
      if (!oct()->complex->is_simplex({g.at(i, j + 1), g.at(i + 1, j)})) return true;
    }
  }
  return false;
}

}  // namespace

TEST(GridMap, AntiDiagonalIsUnconstrained) {
  fg::LabelGrid g(3, 3, V("-e1"));
  g.at(1, 2) = V("e2");
  g.at(2, 1) = V("-e2");
  const auto map = fg::GridMap::from_grid(oct(), g);
  EXPECT_TRUE(anti_diagonal_fails(map));
  EXPECT_THROW(fg::FaceSphere::from_grid(oct(), g), fg::Error);
}

TEST(GridMap, TriangleViolation) {
  fg::LabelGrid g(3, 3, V("-e1"));
  g.at(1, 1) = V("e2");
  g.at(2, 2) = V("-e2");
  try {
    fg::GridMap::from_grid(oct(), g);
    FAIL();
  } catch (const fg::Error& e) {
    EXPECT_EQ(e.kind(), fg::ErrorKind::SimplexViolation);
    EXPECT_EQ(*e.cell(), (fg::Cell{1, 1}));
  }
}

TEST(GridMap, GeneratorReachesAntiDiagonalFailures) {
  std::mt19937_64 rng(2);
  bool seen = false;
  for (int t = 0; t < 200 && !seen; ++t) seen = anti_diagonal_fails(fg::random_grid_map(oct(), 4, 4, 40, rng));
  EXPECT_TRUE(seen);
}

TEST(Maps, EAndFriendsAreSimplicial) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; n += 3) {
      EXPECT_TRUE(fg::validate(fg::e_map(m, n)).empty());
      EXPECT_TRUE(fg::validate(fg::gamma(m, n)).empty());
    }
  }
  EXPECT_TRUE(fg::validate(fg::rho_k(3, 2, 3)).empty());
  EXPECT_THROW(fg::rho_k(2, 2, 1), fg::Error);
  // The reverse vertex map I_m x I_n -> I_{m,n} is not simplicial.
  const auto c = fg::cartesian_grid(1, 1);
  std::vector<VertexId> id{0, 1, 2, 3};
  EXPECT_FALSE(fg::validate(fg::grid_product(1, 1), c, id).empty());
}

TEST(Maps, RhoAndGammaFormulas) {
  const auto r = fg::rho_k(1, 1, 2);
  const auto& dom = *r.domain();
  const auto& cod = *r.codomain();
  EXPECT_EQ(cod.grid_coords(r(dom.grid_vertex(1, 0))), (std::pair{0, 0}));
  EXPECT_EQ(cod.grid_coords(r(dom.grid_vertex(2, 1))), (std::pair{1, 0}));
  EXPECT_EQ(cod.grid_coords(r(dom.grid_vertex(2, 2))), (std::pair{1, 1}));
  const auto g = fg::gamma(3, 2);
  EXPECT_EQ(g.codomain()->grid_coords(g(g.domain()->grid_vertex(7, 5))), (std::pair{3, 2}));
  EXPECT_EQ(g.codomain()->grid_coords(g(g.domain()->grid_vertex(4, 3))), (std::pair{2, 1}));
}

TEST(DConstruction, ConstantAndSmall) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const auto c = fg::GridMap::from_grid(oct(), fg::LabelGrid(m, n, oct()->basepoint));
      EXPECT_EQ(fg::d_construction(c), fg::constant_sphere(oct(), 2 * m + 1, 2 * n + 1));
    }
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = fg::random_grid_map(oct(), 2, 2, 10, rng);
    EXPECT_EQ(fg::d_construction(g).grid(), fg::compose_gamma(g).grid());
  }
}

TEST(DConstruction, AdjustedEntries) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto g = fg::random_grid_map(oct(), 4, 4, 40, rng);
    const auto d = fg::d_construction(g);
    ASSERT_EQ(d.m(), 9);
    ASSERT_EQ(d.n(), 9);
    for (int y = 0; y <= 9; ++y) {
      for (int x = 0; x <= 9; ++x) {
        const bool adjusted = x % 2 == 1 && y % 2 == 0 && x / 2 >= 1 && x / 2 <= 2 && y / 2 >= 2 && y / 2 <= 3;
        EXPECT_EQ(d.at(x, y), adjusted ? g.at(x / 2, y / 2 - 1) : g.at(x / 2, y / 2));
      }
    }
  }
}

TEST(DigitalF, RandomMaps) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    EXPECT_TRUE(fg::check_digital_f(fg::random_grid_map(oct(), m, n, 50, rng)));
  }
}

TEST(EThenD, ExampleAndConstants) {
  const auto f = fg::fig3_sphere();
  const auto cert = fg::check_e_then_d(f);
  EXPECT_EQ(cert.start.m(), 11);
  EXPECT_EQ(cert.start.n(), 9);
  EXPECT_EQ(fg::replay(cert), f);
  const auto c = fg::constant_sphere(oct(), 2, 3);
  EXPECT_EQ(fg::replay(fg::check_e_then_d(c)), c);
  EXPECT_THROW(fg::check_e_then_d(fg::constant_sphere(oct(), 0, 2)), fg::Error);
}

TEST(EThenD, RandomSpheres) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const auto g = fg::random_sphere(oct(), 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5), 40, rng);
    EXPECT_EQ(fg::replay(fg::check_e_then_d(g)), g);
  }
}

TEST(LiftSpider, ExhaustiveFromConstant) {
  const auto base = fg::GridMap::from_grid(oct(), fg::LabelGrid(4, 4, oct()->basepoint));
  EXPECT_TRUE(fg::lift_spider(base, base));
  int pairs = 0;
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 3; ++i) {
      for (VertexId v = 0; v < 6; ++v) {
        fg::LabelGrid g = base.grid();
        g.at(i, j) = v;
        if (fg::check_grid_map(*oct(), g)) continue;
        const auto other = fg::GridMap::from_grid(oct(), g);
        if (!fg::is_contiguous(base, other)) continue;
        EXPECT_TRUE(fg::lift_spider(base, other));
        ++pairs;
      }
    }
  }
  EXPECT_EQ(pairs, 9 * 5);
}

TEST(LiftSpider, RandomPairs) {
  std::mt19937_64 rng(7);
  int pairs = 0;
  for (int t = 0; t < 300; ++t) {
    const auto g = fg::random_grid_map(oct(), 2 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 5), 40, rng);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.m() - 1));
    const int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.n() - 1));
    fg::LabelGrid h = g.grid();
    h.at(i, j) = static_cast<VertexId>(rng() % 6);
    if (fg::check_grid_map(*oct(), h)) continue;
    const auto other = fg::GridMap::from_grid(oct(), h);
    if (!fg::is_contiguous(g, other)) continue;
    EXPECT_TRUE(fg::lift_spider(g, other));
    ++pairs;
  }
  EXPECT_GT(pairs, 50);
}

TEST(LiftSpider, RejectsNonPairs) {
  const auto base = fg::GridMap::from_grid(oct(), fg::LabelGrid(4, 4, oct()->basepoint));
  fg::LabelGrid two = base.grid();
  two.at(1, 1) = V("e2");
  two.at(2, 2) = V("e2");
  auto kind_of = [&](const fg::LabelGrid& g) {
    try {
      fg::lift_spider(base, fg::GridMap::from_grid(oct(), g));
    } catch (const fg::Error& e) {
      return e.kind();
    }
    return fg::ErrorKind::EmptyComplex;
  };
  EXPECT_EQ(kind_of(two), fg::ErrorKind::NotSpiderPair);
  // One differing vertex, but e2 and -e2 are not adjacent.
  fg::LabelGrid up = base.grid();
  up.at(2, 2) = V("e2");
  fg::LabelGrid down = base.grid();
  down.at(2, 2) = V("-e2");
  try {
    fg::lift_spider(fg::GridMap::from_grid(oct(), up), fg::GridMap::from_grid(oct(), down));
    FAIL();
  } catch (const fg::Error& e) {
    EXPECT_EQ(e.kind(), fg::ErrorKind::NotSpiderPair);
  }
}

TEST(SubdivisionChain, SubdivisionIndicesGiveRho) {
  // alpha_I with the subdivision index list sends ik + r to i.
  for (int m = 1; m <= 4; ++m) {
    for (int k = 2; k <= 3; ++k) {
      const auto idx = fg::subdivision_indices(m, k);
      for (int s = 0; s <= k * m; ++s) EXPECT_EQ(fg::alpha_seq_eval(idx, m, s), s / k);
    }
  }
}

TEST(SubdivisionChain, AllSmallCases) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 2; k <= 3; ++k) {
        const auto report = fg::check_lemma_7_1(m, n, k);
        EXPECT_TRUE(report.ok()) << m << " " << n << " " << k << ": " << report.failure;
        EXPECT_GT(report.chain_steps, 0);
      }
    }
  }
}
