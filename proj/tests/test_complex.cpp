#include <gtest/gtest.h>

#include <algorithm>

#include "facegroup/complex.hpp"
#include "facegroup/errors.hpp"

namespace fg = facegroup;
using fg::VertexId;

namespace {

// Brute-force membership in a list of maximal vertex sets.
bool in_some(const std::vector<std::vector<VertexId>>& maximal, std::vector<VertexId> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return std::any_of(maximal.begin(), maximal.end(), [&](std::vector<VertexId> m) {
    std::sort(m.begin(), m.end());
    return std::includes(m.begin(), m.end(), s.begin(), s.end());
  });
}

std::vector<VertexId> subset(unsigned mask, const std::vector<VertexId>& pool) {
  std::vector<VertexId> out;
  for (std::size_t b = 0; b < pool.size(); ++b) {
    if (mask & (1u << b)) out.push_back(pool[b]);
  }
  return out;
}

}  // namespace

TEST(Simplex, SortsAndDeduplicates) {
  fg::Simplex s{3, 1, 3, 2};
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.vertices()[0], 1u);
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_TRUE((fg::Simplex{1, 2}).is_face_of(s));
  EXPECT_FALSE((fg::Simplex{0, 2}).is_face_of(s));
}

TEST(Octahedron, Census) {
  const auto oct = fg::octahedron();
  const auto counts = oct->complex->face_counts();
  ASSERT_EQ(counts.size(), 3u);
  EXPECT_EQ(counts[0], 6u);
  EXPECT_EQ(counts[1], 12u);
  EXPECT_EQ(counts[2], 8u);
  EXPECT_EQ(oct->complex->vertex_name(oct->basepoint), "-e1");
}

TEST(Octahedron, AntipodalPairsAreNotEdges) {
  const auto& cx = *fg::octahedron()->complex;
  for (const char* axis : {"e1", "e2", "e3"}) {
    const VertexId a = cx.vertex(axis);
    const VertexId b = cx.vertex(std::string("-") + axis);
    EXPECT_FALSE(cx.is_simplex({a, b})) << axis;
  }
  EXPECT_TRUE(cx.is_simplex({cx.vertex("e1"), cx.vertex("e2"), cx.vertex("e3")}));
  EXPECT_TRUE(cx.is_simplex({cx.vertex("e3")}));
}

TEST(Octahedron, EveryFaceOfEveryTriangleIsASimplex) {
  const auto& cx = *fg::octahedron()->complex;
  for (const auto& s : cx.maximal_simplices()) {
    std::vector<VertexId> pool(s.vertices().begin(), s.vertices().end());
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
      EXPECT_TRUE(cx.is_simplex(subset(mask, pool)));
    }
  }
}

TEST(Complex, UnknownVertexThrows) {
  const auto& cx = *fg::octahedron()->complex;
  EXPECT_THROW(cx.vertex("e4"), fg::Error);
  EXPECT_THROW(cx.is_simplex({0, 6}), fg::Error);
}

TEST(BuildExplicit, DropsDominatedSimplices) {
  auto cx = fg::build_explicit({{"a", "b"}, {"a", "b", "c"}, {"c", "d"}, {"d"}});
  EXPECT_EQ(cx->maximal_simplices().size(), 2u);
  EXPECT_TRUE(cx->is_simplex({cx->vertex("a"), cx->vertex("c")}));
  EXPECT_FALSE(cx->is_simplex({cx->vertex("a"), cx->vertex("d")}));
}

TEST(Interval, Shapes) {
  EXPECT_EQ(fg::interval(0)->vertex_count(), 1u);
  const auto i2 = fg::interval(2);
  EXPECT_TRUE(i2->is_simplex({0, 1}));
  EXPECT_TRUE(i2->is_simplex({1, 2}));
  EXPECT_FALSE(i2->is_simplex({0, 2}));
  const auto i5 = fg::interval(5);
  const auto counts = i5->face_counts();
  EXPECT_EQ(counts[0], 6u);
  EXPECT_EQ(counts[1], 5u);
}

TEST(GridProduct, UnitSquareIsA3Simplex) {
  const auto g = fg::grid_product(5, 4);
  EXPECT_EQ(g->vertex_count(), 30u);
  EXPECT_TRUE(g->is_simplex({g->grid_vertex(0, 0), g->grid_vertex(1, 0), g->grid_vertex(0, 1),
                             g->grid_vertex(1, 1)}));
  EXPECT_FALSE(g->is_simplex({g->grid_vertex(0, 0), g->grid_vertex(2, 0)}));
  EXPECT_EQ(g->vertex_name(g->grid_vertex(2, 3)), "(2,3)");
  EXPECT_EQ(fg::grid_product(1, 1)->maximal_simplices().size(), 1u);
}

TEST(GridProduct, DegenerateIsAnInterval) {
  const auto g = fg::grid_product(4, 0);
  const auto i = fg::interval(4);
  for (VertexId a = 0; a <= 4; ++a) {
    for (VertexId b = 0; b <= 4; ++b) EXPECT_EQ(g->is_simplex({a, b}), i->is_simplex({a, b}));
  }
}

TEST(CartesianGrid, TriangleCounts) {
  EXPECT_EQ(fg::cartesian_grid(5, 4)->vertex_count(), 30u);
  EXPECT_EQ(fg::cartesian_grid(5, 4)->maximal_simplices().size(), 40u);
  EXPECT_EQ(fg::cartesian_grid(2, 1)->maximal_simplices().size(), 4u);
  const auto c = fg::cartesian_grid(1, 1);
  const auto tris = c->maximal_simplices();
  ASSERT_EQ(tris.size(), 2u);
  const VertexId diag_a = c->grid_vertex(0, 0);
  const VertexId diag_b = c->grid_vertex(1, 1);
  for (const auto& t : tris) EXPECT_TRUE(t.contains(diag_a) && t.contains(diag_b));
}

TEST(CartesianGrid, AntiDiagonalIsNotAnEdge) {
  const auto c = fg::cartesian_grid(3, 3);
  const auto g = fg::grid_product(3, 3);
  EXPECT_FALSE(c->is_simplex({c->grid_vertex(0, 1), c->grid_vertex(1, 0)}));
  EXPECT_TRUE(g->is_simplex({g->grid_vertex(0, 1), g->grid_vertex(1, 0)}));
}

TEST(CartesianGrid, MembershipImpliesGridProductMembership) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto c = fg::cartesian_grid(m, n);
      const auto g = fg::grid_product(m, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
          std::vector<VertexId> block{c->grid_vertex(i, j), c->grid_vertex(i + 1, j),
                                      c->grid_vertex(i, j + 1), c->grid_vertex(i + 1, j + 1)};
          for (unsigned mask = 0; mask < 16; ++mask) {
            auto s = subset(mask, block);
            if (c->is_simplex(s)) {
              EXPECT_TRUE(g->is_simplex(s));
            }
          }
        }
      }
    }
  }
}

TEST(Boundary, Contains) {
  EXPECT_TRUE(fg::boundary_contains(5, 4, 0, 2));
  EXPECT_FALSE(fg::boundary_contains(5, 4, 2, 2));
  EXPECT_TRUE(fg::boundary_contains(5, 4, 5, 4));
  EXPECT_THROW(fg::boundary_contains(5, 4, 6, 0), fg::Error);
}

TEST(CliqueComplex, SmallGraphs) {
  auto k3 = fg::clique_complex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "a"}});
  EXPECT_EQ(k3->maximal_simplices().size(), 1u);
  EXPECT_EQ(k3->face_counts().size(), 3u);
  auto c4 = fg::clique_complex({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  const auto counts = c4->face_counts();
  EXPECT_EQ(counts.size(), 2u);
  EXPECT_EQ(counts[1], 4u);
  EXPECT_THROW(fg::clique_complex({"a"}, {{"a", "z"}}), fg::Error);
}

TEST(CliqueComplex, KingGraphAgreesWithGridProductOnBlocks) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto k = fg::grid_clique_complex(m, n);
      const auto g = fg::grid_product(m, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
          std::vector<VertexId> block{g->grid_vertex(i, j), g->grid_vertex(i + 1, j),
                                      g->grid_vertex(i, j + 1), g->grid_vertex(i + 1, j + 1)};
          std::vector<VertexId> kblock;
          for (VertexId v : block) kblock.push_back(k->vertex(g->vertex_name(v)));
          for (unsigned mask = 0; mask < 16; ++mask) {
            EXPECT_EQ(k->is_simplex(subset(mask, kblock)), g->is_simplex(subset(mask, block)));
          }
        }
      }
    }
  }
}

TEST(Product, MembershipThroughProjections) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const auto p = fg::categorical_product(fg::interval(a), fg::interval(b));
      const auto g = fg::grid_product(a, b);
      const auto n = static_cast<unsigned>(p->vertex_count());
      if (n > 12) continue;
      std::vector<VertexId> all(n);
      for (VertexId v = 0; v < n; ++v) all[v] = v;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto s = subset(mask, all);
        std::vector<VertexId> left;
        std::vector<VertexId> right;
        std::vector<VertexId> grid;
        for (VertexId v : s) {
          auto [l, r] = p->split_vertex(v);
          left.push_back(l);
          right.push_back(r);
          grid.push_back(g->grid_vertex(static_cast<int>(l), static_cast<int>(r)));
        }
        const bool expect = fg::interval(a)->is_simplex(left) && fg::interval(b)->is_simplex(right);
        ASSERT_EQ(p->is_simplex(s), expect);
        ASSERT_EQ(g->is_simplex(grid), expect);
      }
    }
  }
}

TEST(Product, OctahedronSquaredMixedQuery) {
  const auto oct = fg::octahedron()->complex;
  const auto p = fg::categorical_product(oct, oct);
  std::vector<std::vector<VertexId>> faces;
  for (const auto& s : oct->maximal_simplices()) faces.emplace_back(s.vertices().begin(), s.vertices().end());
  const VertexId e1 = oct->vertex("e1");
  const VertexId e2 = oct->vertex("e2");
  const VertexId e3 = oct->vertex("e3");
  const VertexId m1 = oct->vertex("-e1");
  std::vector<std::pair<VertexId, VertexId>> good{{e1, e2}, {e2, e3}, {e3, e1}, {e1, e1}};
  std::vector<std::pair<VertexId, VertexId>> bad{{e1, e2}, {m1, e3}, {e3, e1}, {e2, e2}};
  for (const auto* pairs : {&good, &bad}) {
    std::vector<VertexId> s;
    std::vector<VertexId> left;
    std::vector<VertexId> right;
    for (auto [l, r] : *pairs) {
      s.push_back(p->pair_vertex(l, r));
      left.push_back(l);
      right.push_back(r);
    }
    EXPECT_EQ(p->is_simplex(s), in_some(faces, left) && in_some(faces, right));
  }
  EXPECT_EQ(p->vertex_name(p->pair_vertex(e1, m1)), "(e1,-e1)");
}

TEST(Product, TimesAPointIsIsomorphic) {
  const auto oct = fg::octahedron()->complex;
  const auto p = fg::categorical_product(oct, fg::interval(0));
  for (const auto& s : oct->maximal_simplices()) {
    std::vector<VertexId> lifted;
    for (VertexId v : s.vertices()) lifted.push_back(p->pair_vertex(v, 0));
    EXPECT_TRUE(p->is_simplex(lifted));
  }
  EXPECT_FALSE(p->is_simplex({p->pair_vertex(oct->vertex("e1"), 0), p->pair_vertex(oct->vertex("-e1"), 0)}));
}

TEST(Pointed, MakePointedByName) {
  auto t = fg::make_pointed(fg::build_explicit({{"a", "b"}}), "b");
  EXPECT_EQ(t->complex->vertex_name(t->basepoint), "b");
  EXPECT_THROW(fg::make_pointed(fg::build_explicit({{"a", "b"}}), "z"), fg::Error);
}
