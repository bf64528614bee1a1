#pragma once

// Raw label-grid operations shared by the move engine, the search and the
// bridge constructions. Nothing here validates against a target.

#include <cstdint>
#include <vector>

#include "facegroup/complex.hpp"
#include "facegroup/face_sphere.hpp"
#include "facegroup/move_engine.hpp"

namespace facegroup::detail {

/// Membership oracle with a bitmask fast path for targets of at most 64 vertices.
class SimplexOracle {
 public:
  explicit SimplexOracle(const SimplicialComplex& cx);

  bool small() const noexcept { return small_; }
  bool is_simplex(std::span<const VertexId> vs) const;
  /// Union of the maximal simplices containing `mask`: the labels that can join it.
  std::uint64_t admissible(std::uint64_t mask) const;

  /// Labels v != current that a spider may write at interior (i, j) of g.
  /// Bit v of the result; small targets only.
  std::uint64_t spider_labels(const LabelGrid& g, int i, int j) const;
  bool spider_ok(const LabelGrid& g, int i, int j, VertexId v) const;

  std::size_t vertex_count() const noexcept { return cx_->vertex_count(); }

 private:
  const SimplicialComplex* cx_;
  bool small_ = false;
  std::vector<std::uint64_t> maximal_;
};

inline std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

bool rows_equal(const LabelGrid& g, int j1, int j2);
bool cols_equal(const LabelGrid& g, int i1, int i2);

/// Row j copied to j + 1.
LabelGrid dup_row(const LabelGrid& g, int j);
/// Row j + 1 removed.
LabelGrid del_row(const LabelGrid& g, int j);
LabelGrid dup_col(const LabelGrid& g, int i);
LabelGrid del_col(const LabelGrid& g, int i);

/// Applies a structurally legal move without target checks.
LabelGrid apply_raw(const LabelGrid& g, const Move& mv);

/// In-place normalization; deletions appended to `moves` when non-null.
void normalize_grid(LabelGrid& g, std::vector<Move>* moves);

/// Inverse of a move applied to `before`.
Move inverse_move(const LabelGrid& before, const Move& mv);

}  // namespace facegroup::detail
