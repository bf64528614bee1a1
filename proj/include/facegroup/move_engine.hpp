#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facegroup/face_sphere.hpp"

namespace facegroup {

/// One intrinsic move. Row moves keep their index in `j`, column moves in `i`.
struct Move {
  enum class Kind : std::uint8_t { RowDup, RowDel, ColDup, ColDel, Spider };

  Kind kind = Kind::RowDup;
  int i = 0;
  int j = 0;
  VertexId label = 0;

  static Move row_dup(int j) { return {Kind::RowDup, 0, j, 0}; }
  static Move row_del(int j) { return {Kind::RowDel, 0, j, 0}; }
  static Move col_dup(int i) { return {Kind::ColDup, i, 0, 0}; }
  static Move col_del(int i) { return {Kind::ColDel, i, 0, 0}; }
  static Move spider(int i, int j, VertexId label) { return {Kind::Spider, i, j, label}; }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// "rowdup 2", "spider 3 2 e2", ...
std::string describe(const Move& mv, const SimplicialComplex& target);

struct MoveCertificate {
  FaceSphere start;
  std::vector<Move> moves;
  FaceSphere end;
};

/// Why `mv` cannot be applied to `f`, or nullopt when it is legal.
std::optional<std::string> illegal_reason(const FaceSphere& f, const Move& mv);

/// Throws IllegalMove with the violated condition.
FaceSphere apply_move(const FaceSphere& f, const Move& mv);

/// The four incident unit squares stay simplices after writing v at (i, j).
bool spider_legal(const FaceSphere& f, int i, int j, VertexId v);

/// Deterministic order: RowDup < RowDel < ColDup < ColDel < Spider, then (i, j), then label.
/// Spiders that would rewrite an entry with its current label are omitted.
std::vector<Move> legal_moves(const FaceSphere& f);

/// Replays from `start`; throws ReplayFailed naming the first bad step.
FaceSphere replay(const FaceSphere& start, std::span<const Move> moves);
/// Also checks that the replay lands on `cert.end`.
FaceSphere replay(const MoveCertificate& cert);

/// Inverse move sequence, from the end of `moves` back to `start`.
std::vector<Move> reverse_moves(const FaceSphere& start, std::span<const Move> moves);
MoveCertificate reverse(const MoveCertificate& cert);

/// Spider moves in raster order turning f into the contiguous sphere g.
/// Throws ShapeMismatch if the spheres are not contiguous, DecompositionFailed
/// if some raster step is not a legal spider.
MoveCertificate contiguity_to_spiders(const FaceSphere& f, const FaceSphere& g);

/// Deletes the lowest deletable row, then the lowest deletable column, until
/// none remain. Never shrinks below 1 x 1. The deletions are appended to `moves`.
FaceSphere normalize(const FaceSphere& f, std::vector<Move>* moves = nullptr);

struct SearchBudget {
  std::size_t max_states = 2'000'000;
  int max_pad = 4;
  std::uint64_t seed = 0;
  /// 0 reads FACEGROUP_THREADS, falling back to the hardware concurrency.
  int threads = 0;
};

struct SearchOutcome {
  bool equivalent = false;
  std::optional<MoveCertificate> certificate;
  std::size_t states_explored = 0;
  bool frontier_exhausted = false;
};

/// Bounded bidirectional breadth-first search for extension-contiguity
/// equivalence. Throws TargetMismatch.
SearchOutcome search_equivalence(const FaceSphere& f, const FaceSphere& g,
                                 const SearchBudget& budget = {});

/// Explicit chain from f . f~ down to a 1 x 1 constant sphere.
MoveCertificate inverse_cancellation_certificate(const FaceSphere& f);

/// Block-sliding chain from f . g to g . f. Throws TargetMismatch.
MoveCertificate commutativity_certificate(const FaceSphere& f, const FaceSphere& g);

/// Records a chain of moves from a start sphere, with helpers that turn
/// contiguities and block slides into spider moves.
class ChainBuilder {
 public:
  explicit ChainBuilder(FaceSphere start);

  const FaceSphere& current() const noexcept { return current_; }
  void apply(const Move& mv);
  /// Reach the same-size sphere `next`, which must be contiguous to the current one.
  void morph_to(const FaceSphere& next);
  void normalize_all();

  /// Moves a block that owns whole columns [lo, hi] (vertical) or whole rows
  /// [lo, hi] (horizontal). Along the sliding axis, grid position p shows block
  /// row or column `from[p]`; the slide ends at `to[p]`. Patterns must be
  /// monotone with steps of at most one.
  void slide_block(bool vertical, int lo, int hi, const LabelGrid& block, std::vector<int> from,
                   const std::vector<int>& to);

  MoveCertificate finish() const;

 private:
  FaceSphere start_;
  FaceSphere current_;
  std::vector<Move> moves_;
};

/// clamp(p - shift, 0, size) for p in [0, length].
std::vector<int> clamp_pattern(int length, int shift, int size);

/// Coherent orientation of a closed 2-dimensional target, one cyclic order per face.
class Orientation {
 public:
  /// Throws NonOrientableTarget when two faces induce an edge in the same direction.
  explicit Orientation(std::vector<std::array<VertexId, 3>> faces);

  /// +1 if (a, b, c) agrees with the stored order of its face, -1 if opposite, 0 if absent.
  int sign(VertexId a, VertexId b, VertexId c) const;
  const std::vector<std::array<VertexId, 3>>& faces() const noexcept { return faces_; }

 private:
  std::vector<std::array<VertexId, 3>> faces_;
};

/// Outward orientation of the built-in octahedron.
Orientation octahedron_orientation();

/// Signed count of the 2mn triangles of I_{m,n} mapped onto `face`.
/// Throws SimplexViolation when `face` is not one of the oriented faces.
int degree(const FaceSphere& f, const Orientation& orientation, std::array<VertexId, 3> face);

}  // namespace facegroup
