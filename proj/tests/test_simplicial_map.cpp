#include <gtest/gtest.h>

#include <random>

#include "facegroup/simplicial_map.hpp"

namespace fg = facegroup;
using fg::VertexId;

namespace {

std::vector<int> eval_all(const fg::SimplicialMap& f) {
  std::vector<int> out;
  for (VertexId v : f.assignment()) out.push_back(static_cast<int>(v));
  return out;
}

// Independent two-case evaluation of alpha_i.
int alpha_ref(int i, int s) { return s <= i ? s : s - 1; }

}  // namespace

TEST(Validate, IdentityAndConstantAreSimplicial) {
  const auto oct = fg::octahedron();
  EXPECT_TRUE(fg::validate(fg::identity_map(oct->complex)).empty());
  EXPECT_TRUE(fg::validate(fg::constant_map(fg::grid_product(3, 3), oct->complex, oct->basepoint)).empty());
}

TEST(Validate, AntipodalCornerViolatesTheUnitSquare) {
  const auto& cx = *fg::octahedron()->complex;
  std::vector<VertexId> a{cx.vertex("e1"), cx.vertex("-e1"), cx.vertex("e2"), cx.vertex("e3")};
  auto bad = fg::validate(fg::grid_product(1, 1), fg::octahedron()->complex, a);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad.front().size(), 4u);
  EXPECT_THROW(fg::SimplicialMap(fg::grid_product(1, 1), fg::octahedron()->complex, a), fg::Error);
}

TEST(Validate, PartialAssignment) {
  try {
    fg::validate(fg::interval(2), fg::interval(2), std::vector<VertexId>{0, fg::kNoVertex, 2});
    FAIL();
  } catch (const fg::Error& e) {
    EXPECT_EQ(e.kind(), fg::ErrorKind::MissingVertex);
  }
}

TEST(Alpha, Formula) {
  EXPECT_EQ(fg::alpha(2, 2)(3), 2u);
  EXPECT_EQ(fg::alpha(0, 1)(0), 0u);
  EXPECT_EQ(eval_all(fg::alpha(1, 3)), (std::vector<int>{0, 1, 1, 2, 3}));
  for (int m = 0; m <= 5; ++m) {
    for (int i = 0; i <= m; ++i) {
      const auto a = fg::alpha(i, m);
      for (int s = 0; s <= m + 1; ++s) EXPECT_EQ(static_cast<int>(a(s)), alpha_ref(i, s));
    }
  }
  EXPECT_THROW(fg::alpha(3, 2), fg::Error);
}

TEST(Alpha, NeighbouringIndicesAreContiguous) {
  for (int m = 1; m <= 5; ++m) {
    for (int i = 0; i < m; ++i) EXPECT_TRUE(fg::is_contiguous(fg::alpha(i, m), fg::alpha(i + 1, m)));
  }
  EXPECT_FALSE(fg::is_contiguous(fg::alpha(0, 2), fg::alpha(2, 2)));
}

TEST(AlphaSeq, SingletonAndRepeats) {
  EXPECT_EQ(fg::alpha_seq(std::vector<int>{3}, 3), fg::alpha(3, 3));
  EXPECT_EQ(fg::alpha_seq(std::vector<int>{1, 1}, 2)(4), 2u);
  // alpha_1 o alpha_1 evaluated by hand: 4 -> 3 -> 2.
  EXPECT_EQ(alpha_ref(1, alpha_ref(1, 4)), 2);
}

TEST(AlphaSeq, MatchesNestedEvaluation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng() % 4);
    const int r = 1 + static_cast<int>(rng() % 4);
    std::vector<int> idx;
    for (int t = 1; t <= r; ++t) idx.push_back(static_cast<int>(rng() % static_cast<unsigned>(m + t)));
    const auto f = fg::alpha_seq(idx, m);
    for (int s = 0; s <= m + r; ++s) {
      int v = s;
      for (int t = r; t >= 1; --t) v = alpha_ref(idx[t - 1], v);
      ASSERT_EQ(static_cast<int>(f(s)), v);
      ASSERT_EQ(fg::alpha_seq_eval(idx, m, s), v);
    }
  }
}

TEST(AlphaSeq, RangeRule) {
  // Exhaustive over pairs: valid exactly when 0 <= i_t <= m + t - 1.
  for (int m = 0; m <= 3; ++m) {
    for (int a = -1; a <= m + 2; ++a) {
      for (int b = -1; b <= m + 3; ++b) {
        const bool ok = a >= 0 && a <= m && b >= 0 && b <= m + 1;
        std::vector<int> idx{a, b};
        if (ok) {
          EXPECT_NO_THROW(fg::alpha_seq(idx, m));
        } else {
          EXPECT_THROW(fg::alpha_seq(idx, m), fg::Error);
        }
      }
    }
  }
}

TEST(AlphaSeq, DoublingPatternHalves) {
  // alpha_0 o alpha_2 o ... o alpha_{2m} sends 2k + e to k.
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> idx;
    for (int t = 0; t <= m; ++t) idx.push_back(2 * t);
    const auto f = fg::alpha_seq(idx, m);
    for (int s = 0; s <= 2 * m + 1; ++s) EXPECT_EQ(static_cast<int>(f(s)), s / 2);
  }
}

TEST(AlphaChain, StepwiseContiguity) {
  for (int m = 1; m <= 5; ++m) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        for (int t = i; t < j; ++t) ASSERT_TRUE(fg::is_contiguous(fg::alpha(t, m), fg::alpha(t + 1, m)));
      }
    }
  }
}

TEST(Translation, Formula) {
  EXPECT_EQ(fg::translate(0, 0)(4, 5), (std::pair{4, 5}));
  EXPECT_EQ(fg::translate(6, 5)(6, 5), (std::pair{0, 0}));
  EXPECT_EQ(fg::translate(3, 2)(5, 2), (std::pair{2, 0}));
  EXPECT_EQ(fg::translate(3, 2).inverse()(2, 0), (std::pair{5, 2}));
}

TEST(Compose, IdentityAndProjection) {
  const auto oct = fg::octahedron()->complex;
  const auto i3 = fg::interval(3);
  const auto& cx = *oct;
  fg::SimplicialMap f(i3, oct, {cx.vertex("-e1"), cx.vertex("e2"), cx.vertex("e3"), cx.vertex("-e1")});
  fg::SimplicialMap g(i3, oct, {cx.vertex("e2"), cx.vertex("e2"), cx.vertex("e1"), cx.vertex("e3")});
  EXPECT_EQ(fg::compose(fg::identity_map(oct), f), f);
  const auto pair = fg::pair_map(f, g);
  EXPECT_EQ(fg::compose(fg::projection(pair.codomain(), 1), pair), f);
  EXPECT_EQ(fg::compose(fg::projection(pair.codomain(), 2), pair), g);
  EXPECT_THROW(fg::compose(f, f), fg::Error);
}

TEST(ProductMap, AlphaZeroSquared) {
  const auto p = fg::grid_product_map(fg::alpha(0, 1), fg::alpha(0, 1));
  const auto& dom = *p.domain();
  const auto& cod = *p.codomain();
  EXPECT_EQ(cod.grid_coords(p(dom.grid_vertex(2, 2))), (std::pair{1, 1}));
  const auto q = fg::product_map(fg::alpha(0, 1), fg::alpha(0, 1));
  const auto v = q.domain()->pair_vertex(2, 2);
  EXPECT_EQ(q.codomain()->split_vertex(q(v)), (std::pair<VertexId, VertexId>{1, 1}));
}

TEST(Contiguity, ReflexiveAndSymmetricOnRandomMaps) {
  std::mt19937 rng(11);
  const auto oct = fg::octahedron()->complex;
  const auto dom = fg::interval(4);
  auto random_path = [&] {
    std::vector<VertexId> a{static_cast<VertexId>(rng() % 6)};
    while (a.size() < 5) {
      VertexId v = static_cast<VertexId>(rng() % 6);
      if (oct->is_simplex({a.back(), v})) a.push_back(v);
    }
    return fg::SimplicialMap(dom, oct, a);
  };
  for (int t = 0; t < 300; ++t) {
    auto f = random_path();
    auto g = random_path();
    EXPECT_TRUE(fg::is_contiguous(f, f));
    EXPECT_EQ(fg::is_contiguous(f, g), fg::is_contiguous(g, f));
  }
}

TEST(Contiguity, CompositionRespectsContiguity) {
  // f ~ f' and g ~ g' give g o f ~ g o f' and g o f' ~ g' o f'.
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < m + 1; ++i) {
      const auto f = fg::alpha(i, m + 1);
      const auto f2 = fg::alpha(i + 1, m + 1);
      for (int k = 0; k < m; ++k) {
        const auto g = fg::alpha(k, m);
        const auto g2 = fg::alpha(k + 1, m);
        EXPECT_TRUE(fg::is_contiguous(fg::compose(g, f), fg::compose(g, f2)));
        EXPECT_TRUE(fg::is_contiguous(fg::compose(g, f2), fg::compose(g2, f2)));
      }
    }
  }
}

TEST(Contiguity, ProductsAndPairsRespectContiguity) {
  for (int m = 0; m <= 1; ++m) {
    for (int i = 0; i < m; ++i) {
      const auto f = fg::alpha(i, m);
      const auto f2 = fg::alpha(i + 1, m);
      const auto g = fg::alpha(0, 1);
      EXPECT_TRUE(fg::is_contiguous(fg::grid_product_map(f, g), fg::grid_product_map(f2, g)));
      EXPECT_TRUE(fg::is_contiguous(fg::product_map(f, g), fg::product_map(f2, g)));
    }
  }
  const auto f = fg::alpha(0, 1);
  const auto f2 = fg::alpha(1, 1);
  const auto g = fg::alpha(1, 1);
  EXPECT_TRUE(fg::is_contiguous(fg::pair_map(f, g), fg::pair_map(f2, g)));
  EXPECT_TRUE(fg::is_contiguous(fg::product_map(f, g), fg::product_map(f2, g)));
}
