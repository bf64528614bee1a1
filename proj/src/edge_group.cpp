#include "facegroup/edge_group.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <unordered_map>

namespace facegroup {

namespace {

std::string key_of(const std::vector<VertexId>& vs) {
  return {reinterpret_cast<const char*>(vs.data()), vs.size() * sizeof(VertexId)};
}

std::vector<VertexId> apply_raw(const std::vector<VertexId>& vs, const LoopMove& mv) {
  std::vector<VertexId> out = vs;
  const auto at = out.begin() + mv.index;
  switch (mv.kind) {
    case LoopMove::Kind::Dup: out.insert(at, *at); break;
    case LoopMove::Kind::Del: out.erase(at); break;
    case LoopMove::Kind::Sub: *at = mv.label; break;
  }
  return out;
}

std::vector<LoopMove> moves_of(const SimplicialComplex& cx, const std::vector<VertexId>& vs) {
  std::vector<LoopMove> out;
  const int last = static_cast<int>(vs.size()) - 1;
  for (int i = 0; i <= last; ++i) out.push_back({LoopMove::Kind::Dup, i, 0});
  if (last >= 2) {
    for (int i = 0; i <= last; ++i) {
      const bool repeat = (i > 0 && vs[i - 1] == vs[i]) || (i < last && vs[i + 1] == vs[i]);
      if (repeat) out.push_back({LoopMove::Kind::Del, i, 0});
    }
  }
  for (int i = 1; i < last; ++i) {
    for (VertexId v = 0; v < cx.vertex_count(); ++v) {
      if (v == vs[i]) continue;
      std::array<VertexId, 3> before{vs[i - 1], vs[i], v};
      std::array<VertexId, 3> after{vs[i], v, vs[i + 1]};
      if (cx.is_simplex(before) && cx.is_simplex(after)) out.push_back({LoopMove::Kind::Sub, i, v});
    }
  }
  return out;
}

std::optional<std::string> illegal(const SimplicialComplex& cx, const std::vector<VertexId>& vs,
                                   const LoopMove& mv) {
  const auto legal = moves_of(cx, vs);
  if (std::find(legal.begin(), legal.end(), mv) != legal.end()) return std::nullopt;
  return describe(mv, cx) + " is not a legal move";
}

}  // namespace

EdgeLoop::EdgeLoop(TargetPtr target, std::vector<VertexId> vertices)
    : target_(std::move(target)), vertices_(std::move(vertices)) {
  const auto& cx = *target_->complex;
  if (vertices_.size() < 2) throw Error(ErrorKind::ShapeMismatch, "a loop needs at least two vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] >= cx.vertex_count()) {
      throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(i) + " not in the target");
    }
  }
  if (vertices_.front() != target_->basepoint || vertices_.back() != target_->basepoint) {
    throw Error(ErrorKind::BoundaryViolation, "a loop starts and ends at the basepoint");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    std::array<VertexId, 2> e{vertices_[i], vertices_[i + 1]};
    if (!cx.is_simplex(e)) {
      throw Error(ErrorKind::SimplexViolation, "vertices " + std::to_string(i) + " and " +
                                                   std::to_string(i + 1) + " are not adjacent");
    }
  }
}

EdgeLoop EdgeLoop::constant(const TargetPtr& target, int length) {
  return EdgeLoop(target, std::vector<VertexId>(static_cast<std::size_t>(std::max(length, 1)) + 1,
                                                target->basepoint));
}

bool EdgeLoop::operator==(const EdgeLoop& other) const {
  return vertices_ == other.vertices_ && same_target(target_, other.target_);
}

std::string describe(const LoopMove& mv, const SimplicialComplex& target) {
  switch (mv.kind) {
    case LoopMove::Kind::Dup: return "dup " + std::to_string(mv.index);
    case LoopMove::Kind::Del: return "del " + std::to_string(mv.index);
    case LoopMove::Kind::Sub:
      return "sub " + std::to_string(mv.index) + " " + target.vertex_name(mv.label);
  }
  return {};
}

std::vector<LoopMove> loop_moves(const EdgeLoop& l) {
  return moves_of(*l.target()->complex, l.vertices());
}

EdgeLoop apply_loop_move(const EdgeLoop& l, const LoopMove& mv) {
  if (auto why = illegal(*l.target()->complex, l.vertices(), mv)) {
    throw Error(ErrorKind::IllegalMove, *why);
  }
  return EdgeLoop(l.target(), apply_raw(l.vertices(), mv));
}

EdgeLoop concat(const EdgeLoop& l1, const EdgeLoop& l2) {
  if (!same_target(l1.target(), l2.target())) {
    throw Error(ErrorKind::TargetMismatch, "loops over different targets");
  }
  std::vector<VertexId> vs = l1.vertices();
  vs.insert(vs.end(), l2.vertices().begin() + 1, l2.vertices().end());
  return EdgeLoop(l1.target(), std::move(vs));
}

EdgeLoop replay(const EdgeLoop& start, std::span<const LoopMove> moves) {
  EdgeLoop cur = start;
  for (std::size_t s = 0; s < moves.size(); ++s) {
    if (auto why = illegal(*cur.target()->complex, cur.vertices(), moves[s])) {
      throw Error(ErrorKind::ReplayFailed, "step " + std::to_string(s) + ": " + *why);
    }
    cur = EdgeLoop(cur.target(), apply_raw(cur.vertices(), moves[s]));
  }
  return cur;
}

namespace {

struct Visit {
  std::string parent;  // empty at the root
  LoopMove move;       // applied to the parent to reach this state
};

using VisitMap = std::unordered_map<std::string, Visit>;

std::vector<VertexId> decode(std::string_view key) {
  std::vector<VertexId> vs(key.size() / sizeof(VertexId));
  std::copy(key.begin(), key.end(), reinterpret_cast<char*>(vs.data()));
  return vs;
}

// Moves from the root of `side` to `key`.
std::vector<LoopMove> path_to(const VisitMap& side, std::string key) {
  std::vector<LoopMove> out;
  for (;;) {
    const Visit& v = side.at(key);
    if (v.parent.empty()) break;
    out.push_back(v.move);
    key = v.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Walks from `key` back to the root of `side`, finding each inverse step among
// the legal moves of the current loop.
std::vector<LoopMove> path_from(const SimplicialComplex& cx, const VisitMap& side, std::string key) {
  std::vector<LoopMove> out;
  for (;;) {
    const Visit& v = side.at(key);
    if (v.parent.empty()) break;
    const auto here = decode(key);
    const auto there = decode(v.parent);
    for (const LoopMove& mv : moves_of(cx, here)) {
      if (apply_raw(here, mv) == there) {
        out.push_back(mv);
        break;
      }
    }
    key = v.parent;
  }
  return out;
}

}  // namespace

LoopSearchOutcome loop_search(const EdgeLoop& l1, const EdgeLoop& l2, const LoopBudget& budget) {
  if (!same_target(l1.target(), l2.target())) {
    throw Error(ErrorKind::TargetMismatch, "loops over different targets");
  }
  const auto& cx = *l1.target()->complex;
  LoopSearchOutcome outcome;
  const std::string k1 = key_of(l1.vertices());
  const std::string k2 = key_of(l2.vertices());
  if (k1 == k2) {
    outcome.equivalent = true;
    outcome.certificate = LoopCertificate{l1, {}, l2};
    outcome.states_explored = 1;
    return outcome;
  }
  std::array<VisitMap, 2> seen;
  std::array<std::vector<std::string>, 2> frontier{std::vector{k1}, std::vector{k2}};
  seen[0].emplace(k1, Visit{});
  seen[1].emplace(k2, Visit{});

  auto finish = [&](const std::string& meet) {
    std::vector<LoopMove> moves = path_to(seen[0], meet);
    auto tail = path_from(cx, seen[1], meet);
    moves.insert(moves.end(), tail.begin(), tail.end());
    EdgeLoop end = replay(l1, moves);
    if (!(end == l2)) throw Error(ErrorKind::ReplayFailed, "loop certificate misses its target");
    outcome.equivalent = true;
    outcome.certificate = LoopCertificate{l1, std::move(moves), l2};
  };

  for (;;) {
    outcome.states_explored = seen[0].size() + seen[1].size();
    if (frontier[0].empty() || frontier[1].empty()) {
      outcome.frontier_exhausted = true;
      return outcome;
    }
    if (outcome.states_explored > budget.max_states) return outcome;
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::string> next;
    for (const std::string& key : frontier[side]) {
      const auto vs = decode(key);
      for (const LoopMove& mv : moves_of(cx, vs)) {
        auto child = apply_raw(vs, mv);
        if (static_cast<int>(child.size()) - 1 > budget.max_length) continue;
        std::string ck = key_of(child);
        if (!seen[side].emplace(ck, Visit{key, mv}).second) continue;
        if (seen[1 - side].count(ck)) {
          finish(ck);
          outcome.states_explored = seen[0].size() + seen[1].size();
          return outcome;
        }
        next.push_back(std::move(ck));
      }
    }
    frontier[side] = std::move(next);
  }
}

}  // namespace facegroup
