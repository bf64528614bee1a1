#pragma once

#include <random>
#include <string>
#include <vector>

#include "facegroup/face_sphere.hpp"
#include "facegroup/move_engine.hpp"
#include "facegroup/simplicial_map.hpp"

namespace facegroup {

/// First violation of the grid-map invariants (labels, boundary, then the two
/// triangles of each cell in raster order), or nullopt. The anti-diagonal pair
/// of a cell is not constrained.
std::optional<Error> check_grid_map(const PointedComplex& target, const LabelGrid& grid);

/// Simplicial map (I_{m,n}, boundary) -> (X, x0) out of the triangulated grid.
class GridMap {
 public:
  /// Throws UnknownVertex, BoundaryViolation, SimplexViolation, IndexError (m or n < 1).
  static GridMap from_grid(TargetPtr target, LabelGrid grid);
  static GridMap unchecked(TargetPtr target, LabelGrid grid);

  const TargetPtr& target() const noexcept { return target_; }
  const PointedComplex& pointed() const noexcept { return *target_; }
  VertexId basepoint() const noexcept { return target_->basepoint; }
  int m() const noexcept { return grid_.m; }
  int n() const noexcept { return grid_.n; }
  VertexId at(int i, int j) const { return grid_.at(i, j); }
  const LabelGrid& grid() const noexcept { return grid_; }

  bool operator==(const GridMap& other) const;

  SimplicialMap as_map() const;

 private:
  GridMap(TargetPtr target, LabelGrid grid) : target_(std::move(target)), grid_(std::move(grid)) {}

  TargetPtr target_;
  LabelGrid grid_;
};

/// Union condition on every triangle of I_{m,n}. Throws ShapeMismatch.
bool is_contiguous(const GridMap& f, const GridMap& g);

/// E : I_{m,n} -> I_m x I_n, the identity on indices.
SimplicialMap e_map(int m, int n);
/// rho_k : I_{km,kn} -> I_{m,n}, (ki + r, kj + s) -> (i, j). Throws IndexError for k < 2.
SimplicialMap rho_k(int m, int n, int k);
/// gamma : I_{2m+1,2n+1} -> I_{m,n}, (2k + e1, 2l + e2) -> (k, l).
SimplicialMap gamma(int m, int n);

/// f o E for a face sphere: the same label grid read on the triangulation.
GridMap restrict_to_triangulation(const FaceSphere& f);

/// f o gamma: every row and column doubled.
GridMap compose_gamma(const GridMap& f);

/// The adjusted doubling D_f on I_{2m+1} x I_{2n+1}, validated as a face sphere.
FaceSphere d_construction(const GridMap& f);

/// f o gamma ~ D_f o E on every triangle.
bool check_digital_f(const GridMap& f);

/// Chain D_{g o E} -> g o (alpha_I x alpha_J) -> trivial extension -> g.
/// Throws ShapeMismatch when g has m or n below 1.
MoveCertificate check_e_then_d(const FaceSphere& g);

/// D_g ~ D_{g'} for a pair of grid maps differing in at most one interior
/// vertex. Throws NotSpiderPair when the inputs are not such a pair.
bool lift_spider(const GridMap& g, const GridMap& g_prime);

struct Lemma71Report {
  bool exact_equality = false;  ///< E o rho_k equals (alpha_I x alpha_J) o E on vertices
  bool chain_verified = false;  ///< every rewiring step is a contiguity
  int chain_steps = 0;
  std::string failure;          ///< first failed check, empty when all passed
  bool ok() const { return exact_equality && chain_verified; }
};

/// Verifies the exact-equality step and the alpha-rewiring chain for (m, n, k).
Lemma71Report check_lemma_7_1(int m, int n, int k);

/// The index list 0^(k-1), k^(k-1), ..., ((m-1)k)^(k-1) with alpha_I = E o rho_k in one coordinate.
std::vector<int> subdivision_indices(int m, int k);

/// Valid grid map built from the constant map by `steps` random legal
/// single-vertex changes.
GridMap random_grid_map(const TargetPtr& target, int m, int n, int steps, std::mt19937_64& rng);

/// Valid face sphere built from the constant sphere by `steps` random legal spiders.
FaceSphere random_sphere(const TargetPtr& target, int m, int n, int steps, std::mt19937_64& rng);

}  // namespace facegroup
