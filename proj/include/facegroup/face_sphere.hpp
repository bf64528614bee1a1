#pragma once

#include <optional>
#include <vector>

#include "facegroup/complex.hpp"
#include "facegroup/errors.hpp"
#include "facegroup/simplicial_map.hpp"

namespace facegroup {

/// (m+1) x (n+1) array of labels; entry (i, j) sits at j * (m + 1) + i, row 0 at the bottom.
struct LabelGrid {
  int m = 0;
  int n = 0;
  std::vector<VertexId> cells;

  LabelGrid() = default;
  LabelGrid(int m_, int n_, VertexId fill);

  int width() const noexcept { return m + 1; }
  int height() const noexcept { return n + 1; }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(i);
  }
  VertexId at(int i, int j) const { return cells[index(i, j)]; }
  VertexId& at(int i, int j) { return cells[index(i, j)]; }
  bool in_range(int i, int j) const noexcept { return i >= 0 && i <= m && j >= 0 && j <= n; }

  /// Block [i0, i0+w] x [j0, j0+h].
  LabelGrid sub_grid(int i0, int j0, int w, int h) const;

  friend bool operator==(const LabelGrid&, const LabelGrid&) = default;
};

/// First violation of the face-sphere invariants in raster order (labels,
/// then boundary, then cells), or nullopt when the grid is a valid sphere.
std::optional<Error> check_sphere(const PointedComplex& target, const LabelGrid& grid);

/// Simplicial map (I_m x I_n, boundary) -> (X, x0) stored as its label grid.
class FaceSphere {
 public:
  /// Throws UnknownVertex, BoundaryViolation, SimplexViolation.
  static FaceSphere from_grid(TargetPtr target, LabelGrid grid);
  /// For callers that guarantee validity (the move engine, proven constructions).
  static FaceSphere unchecked(TargetPtr target, LabelGrid grid);

  const TargetPtr& target() const noexcept { return target_; }
  const PointedComplex& pointed() const noexcept { return *target_; }
  VertexId basepoint() const noexcept { return target_->basepoint; }
  int m() const noexcept { return grid_.m; }
  int n() const noexcept { return grid_.n; }
  VertexId at(int i, int j) const { return grid_.at(i, j); }
  const LabelGrid& grid() const noexcept { return grid_; }

  /// Same target and same labels.
  bool operator==(const FaceSphere& other) const;

  /// The sphere as a simplicial map out of grid_product(m, n).
  SimplicialMap as_map() const;

 private:
  FaceSphere(TargetPtr target, LabelGrid grid) : target_(std::move(target)), grid_(std::move(grid)) {}

  TargetPtr target_;
  LabelGrid grid_;
};

FaceSphere constant_sphere(const TargetPtr& target, int m, int n);
bool is_constant(const FaceSphere& f);

/// f o (alpha_m^r x alpha_n^s): pads with basepoint on the right and top.
FaceSphere trivial_extension(const FaceSphere& f, int r, int s);

/// f o (alpha_i^r x alpha_j^s): column i repeated r extra times, row j s extra times.
FaceSphere extend(const FaceSphere& f, int i, int r, int j, int s);

/// Block-diagonal product: f lower left, g upper right. Throws TargetMismatch.
FaceSphere product(const FaceSphere& f, const FaceSphere& g);

/// Horizontal flip, f~(i, j) = f(m - i, j).
FaceSphere inverse(const FaceSphere& f);

/// Replaces [p, q] x [r, s] by block, whose border must agree with f there.
/// Throws IndexError, ShapeMismatch, PatchBoundaryMismatch, SimplexViolation.
FaceSphere patch(const FaceSphere& f, int p, int q, int r, int s, const LabelGrid& block);

/// Union condition on every unit 3-simplex. Throws ShapeMismatch.
bool is_contiguous(const FaceSphere& f, const FaceSphere& g);

/// Row j read as the edge loop (f(0, j), ..., f(m, j)).
std::vector<std::vector<VertexId>> rows_as_edge_loops(const FaceSphere& f);

/// phi o f for a based simplicial map phi out of f's target complex.
/// Throws ShapeMismatch when phi does not preserve basepoints.
FaceSphere push_forward(const SimplicialMap& phi, const TargetPtr& new_target, const FaceSphere& f);

/// (f, g) into the product target; f and g must have equal sizes.
FaceSphere pair_sphere(const FaceSphere& f, const FaceSphere& g, const TargetPtr& product);

/// p_side o f for a sphere over a product target.
FaceSphere project(const FaceSphere& f, int side, const TargetPtr& factor);

}  // namespace facegroup
