#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facegroup/complex.hpp"
#include "facegroup/errors.hpp"

namespace facegroup {

/// Closed edge path (v_0, ..., v_m) at the basepoint.
class EdgeLoop {
 public:
  /// Throws UnknownVertex, BoundaryViolation (endpoints), SimplexViolation
  /// (consecutive pair not an edge), ShapeMismatch (fewer than two vertices).
  EdgeLoop(TargetPtr target, std::vector<VertexId> vertices);

  static EdgeLoop constant(const TargetPtr& target, int length = 1);

  const TargetPtr& target() const noexcept { return target_; }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  int length() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  bool operator==(const EdgeLoop& other) const;

 private:
  TargetPtr target_;
  std::vector<VertexId> vertices_;
};

struct LoopMove {
  enum class Kind : std::uint8_t { Dup, Del, Sub };

  Kind kind = Kind::Dup;
  int index = 0;
  VertexId label = 0;

  friend bool operator==(const LoopMove&, const LoopMove&) = default;
  friend auto operator<=>(const LoopMove&, const LoopMove&) = default;
};

/// "dup 2", "del 1", "sub 1 e2".
std::string describe(const LoopMove& mv, const SimplicialComplex& target);

/// Duplications (v_i repeated after itself), deletions of an entry equal to a
/// neighbour, and substitutions at interior entries, in that order.
std::vector<LoopMove> loop_moves(const EdgeLoop& l);

/// Throws IllegalMove.
EdgeLoop apply_loop_move(const EdgeLoop& l, const LoopMove& mv);

/// l1 followed by l2 with the shared basepoint written once. Throws TargetMismatch.
EdgeLoop concat(const EdgeLoop& l1, const EdgeLoop& l2);

struct LoopBudget {
  std::size_t max_states = 1'000'000;
  int max_length = 8;
};

struct LoopCertificate {
  EdgeLoop start;
  std::vector<LoopMove> moves;
  EdgeLoop end;
};

struct LoopSearchOutcome {
  bool equivalent = false;
  std::optional<LoopCertificate> certificate;
  std::size_t states_explored = 0;
  bool frontier_exhausted = false;
};

/// Bidirectional breadth-first search over loops of length at most
/// budget.max_length. Throws TargetMismatch.
LoopSearchOutcome loop_search(const EdgeLoop& l1, const EdgeLoop& l2, const LoopBudget& budget = {});

/// Throws ReplayFailed.
EdgeLoop replay(const EdgeLoop& start, std::span<const LoopMove> moves);

}  // namespace facegroup
