#include "grid_ops.hpp"

#include <algorithm>
#include <array>

#include "facegroup/errors.hpp"

namespace facegroup::detail {

SimplexOracle::SimplexOracle(const SimplicialComplex& cx) : cx_(&cx) {
  if (cx.vertex_count() > 64) return;
  small_ = true;
  cx.for_each_maximal([&](const Simplex& s) {
    std::uint64_t mask = 0;
    for (VertexId v : s.vertices()) mask |= bit(v);
    maximal_.push_back(mask);
  });
}

bool SimplexOracle::is_simplex(std::span<const VertexId> vs) const {
  if (!small_) return cx_->is_simplex(vs);
  std::uint64_t mask = 0;
  for (VertexId v : vs) mask |= bit(v);
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [mask](std::uint64_t m) { return (mask & ~m) == 0; });
}

std::uint64_t SimplexOracle::admissible(std::uint64_t mask) const {
  std::uint64_t out = 0;
  for (std::uint64_t m : maximal_) {
    if ((mask & ~m) == 0) out |= m;
  }
  return out;
}

namespace {

std::uint64_t cell_mask(const LabelGrid& g, int i, int j) {
  return bit(g.at(i, j)) | bit(g.at(i + 1, j)) | bit(g.at(i, j + 1)) | bit(g.at(i + 1, j + 1));
}

}  // namespace

std::uint64_t SimplexOracle::spider_labels(const LabelGrid& g, int i, int j) const {
  std::uint64_t allowed = admissible(cell_mask(g, i - 1, j - 1));
  if (allowed == 0) return 0;
  allowed &= admissible(cell_mask(g, i, j - 1));
  allowed &= admissible(cell_mask(g, i - 1, j));
  allowed &= admissible(cell_mask(g, i, j));
  return allowed & ~bit(g.at(i, j));
}

bool SimplexOracle::spider_ok(const LabelGrid& g, int i, int j, VertexId v) const {
  if (small_) return (spider_labels(g, i, j) >> v) & 1u;
  if (v == g.at(i, j)) return false;
  for (int dj = -1; dj <= 0; ++dj) {
    for (int di = -1; di <= 0; ++di) {
      const int a = i + di;
      const int b = j + dj;
      std::array<VertexId, 5> s{g.at(a, b), g.at(a + 1, b), g.at(a, b + 1), g.at(a + 1, b + 1), v};
      if (!cx_->is_simplex(s)) return false;
    }
  }
  return true;
}

bool rows_equal(const LabelGrid& g, int j1, int j2) {
  auto a = g.cells.begin() + static_cast<std::ptrdiff_t>(g.index(0, j1));
  auto b = g.cells.begin() + static_cast<std::ptrdiff_t>(g.index(0, j2));
  return std::equal(a, a + g.width(), b);
}

bool cols_equal(const LabelGrid& g, int i1, int i2) {
  for (int j = 0; j <= g.n; ++j) {
    if (g.at(i1, j) != g.at(i2, j)) return false;
  }
  return true;
}

LabelGrid dup_row(const LabelGrid& g, int j) {
  LabelGrid out;
  out.m = g.m;
  out.n = g.n + 1;
  out.cells.reserve(g.cells.size() + static_cast<std::size_t>(g.width()));
  auto row_end = g.cells.begin() + static_cast<std::ptrdiff_t>(g.index(0, j + 1));
  out.cells.insert(out.cells.end(), g.cells.begin(), row_end);
  out.cells.insert(out.cells.end(), row_end - g.width(), row_end);
  out.cells.insert(out.cells.end(), row_end, g.cells.end());
  return out;
}

LabelGrid del_row(const LabelGrid& g, int j) {
  LabelGrid out = g;
  auto first = out.cells.begin() + static_cast<std::ptrdiff_t>(g.index(0, j + 1));
  out.cells.erase(first, first + g.width());
  out.n = g.n - 1;
  return out;
}

LabelGrid dup_col(const LabelGrid& g, int i) {
  LabelGrid out;
  out.m = g.m + 1;
  out.n = g.n;
  out.cells.reserve(g.cells.size() + static_cast<std::size_t>(g.height()));
  for (int j = 0; j <= g.n; ++j) {
    for (int x = 0; x <= g.m; ++x) {
      out.cells.push_back(g.at(x, j));
      if (x == i) out.cells.push_back(g.at(x, j));
    }
  }
  return out;
}

LabelGrid del_col(const LabelGrid& g, int i) {
  LabelGrid out;
  out.m = g.m - 1;
  out.n = g.n;
  out.cells.reserve(g.cells.size() - static_cast<std::size_t>(g.height()));
  for (int j = 0; j <= g.n; ++j) {
    for (int x = 0; x <= g.m; ++x) {
      if (x != i + 1) out.cells.push_back(g.at(x, j));
    }
  }
  return out;
}

LabelGrid apply_raw(const LabelGrid& g, const Move& mv) {
  switch (mv.kind) {
    case Move::Kind::RowDup: return dup_row(g, mv.j);
    case Move::Kind::RowDel: return del_row(g, mv.j);
    case Move::Kind::ColDup: return dup_col(g, mv.i);
    case Move::Kind::ColDel: return del_col(g, mv.i);
    case Move::Kind::Spider: {
      LabelGrid out = g;
      out.at(mv.i, mv.j) = mv.label;
      return out;
    }
  }
  return g;
}

namespace {

// Keeps the first row of every run of equal rows, subject to the 1 x 1 floor,
// deleting lowest-index duplicates first.
bool squeeze_rows(LabelGrid& g, std::vector<Move>* moves) {
  std::vector<int> kept{0};
  for (int j = 1; j <= g.n; ++j) {
    const int total = static_cast<int>(kept.size()) + (g.n - j + 1);
    if (total >= 3 && rows_equal(g, j, kept.back())) {
      if (moves) moves->push_back(Move::row_del(static_cast<int>(kept.size()) - 1));
      continue;
    }
    kept.push_back(j);
  }
  if (static_cast<int>(kept.size()) == g.n + 1) return false;
  LabelGrid out;
  out.m = g.m;
  out.n = static_cast<int>(kept.size()) - 1;
  out.cells.reserve(kept.size() * static_cast<std::size_t>(g.width()));
  for (int j : kept) {
    auto row = g.cells.begin() + static_cast<std::ptrdiff_t>(g.index(0, j));
    out.cells.insert(out.cells.end(), row, row + g.width());
  }
  g = std::move(out);
  return true;
}

bool squeeze_cols(LabelGrid& g, std::vector<Move>* moves) {
  std::vector<int> kept{0};
  for (int i = 1; i <= g.m; ++i) {
    const int total = static_cast<int>(kept.size()) + (g.m - i + 1);
    if (total >= 3 && cols_equal(g, i, kept.back())) {
      if (moves) moves->push_back(Move::col_del(static_cast<int>(kept.size()) - 1));
      continue;
    }
    kept.push_back(i);
  }
  if (static_cast<int>(kept.size()) == g.m + 1) return false;
  LabelGrid out;
  out.m = static_cast<int>(kept.size()) - 1;
  out.n = g.n;
  out.cells.reserve(kept.size() * static_cast<std::size_t>(g.height()));
  for (int j = 0; j <= g.n; ++j) {
    for (int i : kept) out.cells.push_back(g.at(i, j));
  }
  g = std::move(out);
  return true;
}

}  // namespace

void normalize_grid(LabelGrid& g, std::vector<Move>* moves) {
  // Column deletions never create equal rows, so this settles after one round.
  for (;;) {
    const bool rows = squeeze_rows(g, moves);
    const bool cols = squeeze_cols(g, moves);
    if (!rows && !cols) return;
  }
}

Move inverse_move(const LabelGrid& before, const Move& mv) {
  switch (mv.kind) {
    case Move::Kind::RowDup: return Move::row_del(mv.j);
    case Move::Kind::RowDel: return Move::row_dup(mv.j);
    case Move::Kind::ColDup: return Move::col_del(mv.i);
    case Move::Kind::ColDel: return Move::col_dup(mv.i);
    case Move::Kind::Spider: return Move::spider(mv.i, mv.j, before.at(mv.i, mv.j));
  }
  return mv;
}

}  // namespace facegroup::detail
