#include <gtest/gtest.h>

#include <algorithm>

#include "facegroup/edge_group.hpp"
#include "facegroup/examples.hpp"
#include "facegroup/face_sphere.hpp"

namespace fg = facegroup;
using fg::LoopMove;
using fg::VertexId;

namespace {

fg::TargetPtr triangle(bool solid) {
  if (solid) return fg::make_pointed(fg::build_explicit({{"a", "b", "c"}}), "a");
  return fg::make_pointed(fg::build_explicit({{"a", "b"}, {"b", "c"}, {"c", "a"}}), "a");
}

fg::EdgeLoop loop_of(const fg::TargetPtr& t, std::vector<std::string> names) {
  std::vector<VertexId> vs;
  for (const auto& n : names) vs.push_back(t->complex->vertex(n));
  return fg::EdgeLoop(t, vs);
}

// Paths of equal length that are contiguous edge by edge.
bool contiguous_paths(const fg::SimplicialComplex& cx, const std::vector<VertexId>& a,
                      const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (!cx.is_simplex({a[i], a[i + 1], b[i], b[i + 1]})) return false;
  }
  return true;
}

}  // namespace

TEST(EdgeLoop, Validation) {
  const auto oct = fg::octahedron();
  EXPECT_NO_THROW(loop_of(oct, {"-e1", "e2", "e3", "-e1"}));
  EXPECT_THROW(loop_of(oct, {"-e1", "e2", "-e2", "-e1"}), fg::Error);
  EXPECT_THROW(loop_of(oct, {"e2", "e3", "e2"}), fg::Error);
  EXPECT_THROW(loop_of(oct, {"-e1"}), fg::Error);
}

TEST(EdgeLoop, RowsOfSpheresAreLoops) {
  for (const auto& f : {fg::fig3_sphere(), fg::fig10_sphere()}) {
    for (const auto& row : fg::rows_as_edge_loops(f)) EXPECT_NO_THROW(fg::EdgeLoop(f.target(), row));
  }
}

TEST(LoopMoves, ConstantSubstitutions) {
  const auto oct = fg::octahedron();
  const auto c = fg::EdgeLoop::constant(oct, 2);
  std::vector<VertexId> subs;
  for (const auto& mv : fg::loop_moves(c)) {
    if (mv.kind == LoopMove::Kind::Sub) {
      EXPECT_EQ(mv.index, 1);
      subs.push_back(mv.label);
    }
  }
  std::vector<VertexId> expect;
  for (const char* n : {"e2", "-e2", "e3", "-e3"}) expect.push_back(oct->complex->vertex(n));
  std::sort(expect.begin(), expect.end());
  std::sort(subs.begin(), subs.end());
  EXPECT_EQ(subs, expect);
}

TEST(LoopMoves, Deletions) {
  const auto oct = fg::octahedron();
  std::vector<int> dels;
  for (const auto& mv : fg::loop_moves(loop_of(oct, {"-e1", "e2", "e2", "-e1"}))) {
    if (mv.kind == LoopMove::Kind::Del) dels.push_back(mv.index);
  }
  EXPECT_EQ(dels, (std::vector<int>{1, 2}));
  for (const auto& mv : fg::loop_moves(loop_of(oct, {"-e1", "e2", "e3", "-e1"}))) {
    EXPECT_NE(mv.kind, LoopMove::Kind::Del);
  }
}

TEST(LoopMoves, SubstitutionIsContiguityExhaustively) {
  // Every loop of length <= 4 over the octahedron.
  const auto oct = fg::octahedron();
  const auto& cx = *oct->complex;
  const VertexId x0 = oct->basepoint;
  for (int len = 1; len <= 4; ++len) {
    int inner = len - 1;
    int total = 1;
    for (int t = 0; t < inner; ++t) total *= 6;
    for (int code = 0; code < total; ++code) {
      std::vector<VertexId> vs{x0};
      int c = code;
      for (int t = 0; t < inner; ++t) {
        vs.push_back(static_cast<VertexId>(c % 6));
        c /= 6;
      }
      vs.push_back(x0);
      bool valid = true;
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) valid = valid && cx.is_simplex({vs[i], vs[i + 1]});
      if (!valid) continue;
      const fg::EdgeLoop l(oct, vs);
      const auto moves = fg::loop_moves(l);
      for (int i = 1; i < len; ++i) {
        for (VertexId v = 0; v < 6; ++v) {
          if (v == vs[i]) continue;
          auto ws = vs;
          ws[i] = v;
          const bool legal = std::find(moves.begin(), moves.end(), LoopMove{LoopMove::Kind::Sub, i, v}) != moves.end();
          ASSERT_EQ(legal, contiguous_paths(cx, vs, ws));
        }
      }
    }
  }
}

TEST(Concat, DropsSharedBasepoint) {
  const auto oct = fg::octahedron();
  const auto a = loop_of(oct, {"-e1", "e2", "-e1"});
  const auto b = loop_of(oct, {"-e1", "e3", "e2", "-e1"});
  EXPECT_EQ(fg::concat(a, b).vertices().size(), 6u);
  EXPECT_THROW(fg::concat(a, fg::EdgeLoop::constant(triangle(true))), fg::Error);
}

TEST(LoopSearch, ConstantPrefixIsRemovable) {
  const auto oct = fg::octahedron();
  const auto l = loop_of(oct, {"-e1", "e2", "e3", "-e1"});
  const auto out = fg::loop_search(fg::concat(fg::EdgeLoop::constant(oct, 2), l), l);
  ASSERT_TRUE(out.equivalent);
  EXPECT_EQ(fg::replay(out.certificate->start, out.certificate->moves), l);
}

TEST(LoopSearch, SolidTriangleNulls) {
  const auto t = triangle(true);
  const auto out = fg::loop_search(loop_of(t, {"a", "b", "c", "a"}), fg::EdgeLoop::constant(t));
  ASSERT_TRUE(out.equivalent);
  EXPECT_EQ(fg::replay(out.certificate->start, out.certificate->moves), fg::EdgeLoop::constant(t));
}

TEST(LoopSearch, HollowTriangleExhausts) {
  const auto t = triangle(false);
  const auto out = fg::loop_search(loop_of(t, {"a", "b", "c", "a"}), fg::EdgeLoop::constant(t));
  EXPECT_FALSE(out.equivalent);
  EXPECT_TRUE(out.frontier_exhausted);
}
