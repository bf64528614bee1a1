#include "facegroup/face_sphere.hpp"

#include <algorithm>
#include <array>

namespace facegroup {

LabelGrid::LabelGrid(int m_, int n_, VertexId fill) : m(m_), n(n_) {
  if (m_ < 0 || n_ < 0) throw Error(ErrorKind::IndexError, "grid size must be nonnegative");
  cells.assign(static_cast<std::size_t>(m_ + 1) * static_cast<std::size_t>(n_ + 1), fill);
}

LabelGrid LabelGrid::sub_grid(int i0, int j0, int w, int h) const {
  if (w < 0 || h < 0 || !in_range(i0, j0) || !in_range(i0 + w, j0 + h)) {
    throw Error(ErrorKind::IndexError, "sub-grid out of range", Cell{i0, j0});
  }
  LabelGrid out(w, h, 0);
  for (int j = 0; j <= h; ++j) {
    for (int i = 0; i <= w; ++i) out.at(i, j) = at(i0 + i, j0 + j);
  }
  return out;
}

namespace {

bool cell_ok(const SimplicialComplex& cx, const LabelGrid& g, int i, int j) {
  std::array<VertexId, 4> s{g.at(i, j), g.at(i + 1, j), g.at(i, j + 1), g.at(i + 1, j + 1)};
  return cx.is_simplex(s);
}

}  // namespace

std::optional<Error> check_sphere(const PointedComplex& target, const LabelGrid& grid) {
  const auto& cx = *target.complex;
  if (grid.m < 0 || grid.n < 0 || grid.cells.size() != grid.index(0, grid.n + 1)) {
    return Error(ErrorKind::ShapeMismatch, "grid storage does not match its size");
  }
  for (int j = 0; j <= grid.n; ++j) {
    for (int i = 0; i <= grid.m; ++i) {
      if (grid.at(i, j) >= cx.vertex_count()) {
        return Error(ErrorKind::UnknownVertex, "label not in the target", Cell{i, j});
      }
    }
  }
  for (int j = 0; j <= grid.n; ++j) {
    for (int i = 0; i <= grid.m; ++i) {
      bool on_boundary = i == 0 || i == grid.m || j == 0 || j == grid.n;
      if (on_boundary && grid.at(i, j) != target.basepoint) {
        return Error(ErrorKind::BoundaryViolation,
                     "boundary label " + cx.vertex_name(grid.at(i, j)) + " is not the basepoint",
                     Cell{i, j});
      }
    }
  }
  for (int j = 0; j < grid.n; ++j) {
    for (int i = 0; i < grid.m; ++i) {
      if (!cell_ok(cx, grid, i, j)) {
        return Error(ErrorKind::SimplexViolation, "labels of the unit square are not a simplex",
                     Cell{i, j});
      }
    }
  }
  return std::nullopt;
}

FaceSphere FaceSphere::from_grid(TargetPtr target, LabelGrid grid) {
  if (auto err = check_sphere(*target, grid)) throw *err;
  return FaceSphere(std::move(target), std::move(grid));
}

FaceSphere FaceSphere::unchecked(TargetPtr target, LabelGrid grid) {
  return FaceSphere(std::move(target), std::move(grid));
}

bool FaceSphere::operator==(const FaceSphere& other) const {
  return grid_ == other.grid_ && same_target(target_, other.target_);
}

SimplicialMap FaceSphere::as_map() const {
  return SimplicialMap::unchecked(grid_product(m(), n()), target_->complex, grid_.cells);
}

FaceSphere constant_sphere(const TargetPtr& target, int m, int n) {
  return FaceSphere::unchecked(target, LabelGrid(m, n, target->basepoint));
}

bool is_constant(const FaceSphere& f) {
  const auto& c = f.grid().cells;
  return std::all_of(c.begin(), c.end(), [&](VertexId v) { return v == f.basepoint(); });
}

namespace {

// alpha_i^r evaluated at index s.
int repeat_index(int i, int r, int s) { return s <= i ? s : std::max(i, s - r); }

}  // namespace

FaceSphere extend(const FaceSphere& f, int i, int r, int j, int s) {
  if (i < 0 || i > f.m() || j < 0 || j > f.n()) {
    throw Error(ErrorKind::IndexError, "repeated row or column out of range", Cell{i, j});
  }
  if (r < 0 || s < 0) throw Error(ErrorKind::IndexError, "repeat counts must be nonnegative");
  LabelGrid out(f.m() + r, f.n() + s, f.basepoint());
  for (int y = 0; y <= out.n; ++y) {
    const int sj = repeat_index(j, s, y);
    for (int x = 0; x <= out.m; ++x) out.at(x, y) = f.at(repeat_index(i, r, x), sj);
  }
  return FaceSphere::unchecked(f.target(), std::move(out));
}

FaceSphere trivial_extension(const FaceSphere& f, int r, int s) {
  return extend(f, f.m(), r, f.n(), s);
}

FaceSphere product(const FaceSphere& f, const FaceSphere& g) {
  if (!same_target(f.target(), g.target())) {
    throw Error(ErrorKind::TargetMismatch, "product of spheres over different targets");
  }
  const int m = f.m();
  const int n = f.n();
  LabelGrid out(m + g.m() + 1, n + g.n() + 1, f.basepoint());
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= m; ++i) out.at(i, j) = f.at(i, j);
  }
  const Translation t = translate(m + 1, n + 1);
  for (int j = n + 1; j <= out.n; ++j) {
    for (int i = m + 1; i <= out.m; ++i) {
      auto [gi, gj] = t(i, j);
      out.at(i, j) = g.at(gi, gj);
    }
  }
  return FaceSphere::from_grid(f.target(), std::move(out));
}

FaceSphere inverse(const FaceSphere& f) {
  LabelGrid out(f.m(), f.n(), f.basepoint());
  for (int j = 0; j <= f.n(); ++j) {
    for (int i = 0; i <= f.m(); ++i) out.at(i, j) = f.at(f.m() - i, j);
  }
  return FaceSphere::unchecked(f.target(), std::move(out));
}

FaceSphere patch(const FaceSphere& f, int p, int q, int r, int s, const LabelGrid& block) {
  if (p < 0 || r < 0 || q > f.m() || s > f.n() || p > q || r > s) {
    throw Error(ErrorKind::IndexError, "patch rectangle out of range", Cell{p, r});
  }
  if (block.m != q - p || block.n != s - r) {
    throw Error(ErrorKind::ShapeMismatch, "block size does not match the rectangle");
  }
  LabelGrid out = f.grid();
  for (int j = 0; j <= block.n; ++j) {
    for (int i = 0; i <= block.m; ++i) {
      bool border = i == 0 || i == block.m || j == 0 || j == block.n;
      if (border && block.at(i, j) != f.at(p + i, r + j)) {
        throw Error(ErrorKind::PatchBoundaryMismatch, "block disagrees with the sphere on the border",
                    Cell{p + i, r + j});
      }
      out.at(p + i, r + j) = block.at(i, j);
    }
  }
  return FaceSphere::from_grid(f.target(), std::move(out));
}

bool is_contiguous(const FaceSphere& f, const FaceSphere& g) {
  if (f.m() != g.m() || f.n() != g.n() || !same_target(f.target(), g.target())) {
    throw Error(ErrorKind::ShapeMismatch, "contiguity needs equal sizes and a common target");
  }
  const auto& cx = *f.pointed().complex;
  for (int j = 0; j < f.n(); ++j) {
    for (int i = 0; i < f.m(); ++i) {
      std::array<VertexId, 8> s{f.at(i, j),     f.at(i + 1, j),     f.at(i, j + 1),
                                f.at(i + 1, j + 1), g.at(i, j),     g.at(i + 1, j),
                                g.at(i, j + 1), g.at(i + 1, j + 1)};
      if (!cx.is_simplex(s)) return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> rows_as_edge_loops(const FaceSphere& f) {
  std::vector<std::vector<VertexId>> rows;
  rows.reserve(static_cast<std::size_t>(f.n()) + 1);
  for (int j = 0; j <= f.n(); ++j) {
    std::vector<VertexId> row;
    row.reserve(static_cast<std::size_t>(f.m()) + 1);
    for (int i = 0; i <= f.m(); ++i) row.push_back(f.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

FaceSphere push_forward(const SimplicialMap& phi, const TargetPtr& new_target, const FaceSphere& f) {
  if (!(*phi.domain() == *f.pointed().complex) || !(*phi.codomain() == *new_target->complex)) {
    throw Error(ErrorKind::ShapeMismatch, "map does not fit the sphere's target");
  }
  if (phi(f.basepoint()) != new_target->basepoint) {
    throw Error(ErrorKind::ShapeMismatch, "map does not preserve the basepoint");
  }
  LabelGrid out = f.grid();
  for (auto& v : out.cells) v = phi(v);
  return FaceSphere::from_grid(new_target, std::move(out));
}

FaceSphere pair_sphere(const FaceSphere& f, const FaceSphere& g, const TargetPtr& product) {
  const auto& px = *product->complex;
  if (px.kind() != SimplicialComplex::Kind::Product || !(*px.left() == *f.pointed().complex) ||
      !(*px.right() == *g.pointed().complex)) {
    throw Error(ErrorKind::TargetMismatch, "product target does not match the factors");
  }
  if (f.m() != g.m() || f.n() != g.n()) {
    throw Error(ErrorKind::ShapeMismatch, "paired spheres must have equal sizes");
  }
  LabelGrid out(f.m(), f.n(), product->basepoint);
  for (std::size_t k = 0; k < out.cells.size(); ++k) {
    out.cells[k] = px.pair_vertex(f.grid().cells[k], g.grid().cells[k]);
  }
  return FaceSphere::from_grid(product, std::move(out));
}

FaceSphere project(const FaceSphere& f, int side, const TargetPtr& factor) {
  return push_forward(projection(f.pointed().complex, side), factor, f);
}

}  // namespace facegroup
