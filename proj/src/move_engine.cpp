#include "facegroup/move_engine.hpp"

#include <algorithm>
#include <map>

#include "grid_ops.hpp"

namespace facegroup {

using detail::SimplexOracle;

std::string describe(const Move& mv, const SimplicialComplex& target) {
  switch (mv.kind) {
    case Move::Kind::RowDup: return "rowdup " + std::to_string(mv.j);
    case Move::Kind::RowDel: return "rowdel " + std::to_string(mv.j);
    case Move::Kind::ColDup: return "coldup " + std::to_string(mv.i);
    case Move::Kind::ColDel: return "coldel " + std::to_string(mv.i);
    case Move::Kind::Spider:
      return "spider " + std::to_string(mv.i) + " " + std::to_string(mv.j) + " " +
             target.vertex_name(mv.label);
  }
  return {};
}

namespace {

std::optional<std::string> illegal_reason(const LabelGrid& g, const Move& mv,
                                          const SimplexOracle& oracle) {
  switch (mv.kind) {
    case Move::Kind::RowDup:
      if (mv.j < 0 || mv.j > g.n) return "row " + std::to_string(mv.j) + " out of range";
      return std::nullopt;
    case Move::Kind::ColDup:
      if (mv.i < 0 || mv.i > g.m) return "column " + std::to_string(mv.i) + " out of range";
      return std::nullopt;
    case Move::Kind::RowDel:
      if (mv.j < 0 || mv.j >= g.n) return "row " + std::to_string(mv.j) + " has no row above it";
      if (!detail::rows_equal(g, mv.j, mv.j + 1)) {
        return "rows " + std::to_string(mv.j) + " and " + std::to_string(mv.j + 1) + " differ";
      }
      return std::nullopt;
    case Move::Kind::ColDel:
      if (mv.i < 0 || mv.i >= g.m) return "column " + std::to_string(mv.i) + " has no column to its right";
      if (!detail::cols_equal(g, mv.i, mv.i + 1)) {
        return "columns " + std::to_string(mv.i) + " and " + std::to_string(mv.i + 1) + " differ";
      }
      return std::nullopt;
    case Move::Kind::Spider:
      if (mv.i < 1 || mv.i > g.m - 1 || mv.j < 1 || mv.j > g.n - 1) {
        return "spider position (" + std::to_string(mv.i) + "," + std::to_string(mv.j) +
               ") is not interior";
      }
      if (mv.label >= oracle.vertex_count()) return "label not in the target";
      if (g.at(mv.i, mv.j) == mv.label) return "spider does not change the entry";
      if (!oracle.spider_ok(g, mv.i, mv.j, mv.label)) {
        return "an incident square together with the new label is not a simplex";
      }
      return std::nullopt;
  }
  return "unknown move";
}

}  // namespace

std::optional<std::string> illegal_reason(const FaceSphere& f, const Move& mv) {
  SimplexOracle oracle(*f.pointed().complex);
  return illegal_reason(f.grid(), mv, oracle);
}

FaceSphere apply_move(const FaceSphere& f, const Move& mv) {
  if (auto why = illegal_reason(f, mv)) {
    throw Error(ErrorKind::IllegalMove, describe(mv, *f.pointed().complex) + ": " + *why,
                Cell{mv.i, mv.j});
  }
  return FaceSphere::unchecked(f.target(), detail::apply_raw(f.grid(), mv));
}

bool spider_legal(const FaceSphere& f, int i, int j, VertexId v) {
  return !illegal_reason(f, Move::spider(i, j, v)).has_value();
}

std::vector<Move> legal_moves(const FaceSphere& f) {
  const LabelGrid& g = f.grid();
  SimplexOracle oracle(*f.pointed().complex);
  std::vector<Move> out;
  for (int j = 0; j <= g.n; ++j) out.push_back(Move::row_dup(j));
  if (g.n >= 2) {
    for (int j = 0; j < g.n; ++j) {
      if (detail::rows_equal(g, j, j + 1)) out.push_back(Move::row_del(j));
    }
  }
  for (int i = 0; i <= g.m; ++i) out.push_back(Move::col_dup(i));
  if (g.m >= 2) {
    for (int i = 0; i < g.m; ++i) {
      if (detail::cols_equal(g, i, i + 1)) out.push_back(Move::col_del(i));
    }
  }
  const auto vc = static_cast<VertexId>(oracle.vertex_count());
  for (int i = 1; i < g.m; ++i) {
    for (int j = 1; j < g.n; ++j) {
      for (VertexId v = 0; v < vc; ++v) {
        if (v != g.at(i, j) && oracle.spider_ok(g, i, j, v)) out.push_back(Move::spider(i, j, v));
      }
    }
  }
  return out;
}

FaceSphere replay(const FaceSphere& start, std::span<const Move> moves) {
  SimplexOracle oracle(*start.pointed().complex);
  LabelGrid g = start.grid();
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (auto why = illegal_reason(g, moves[k], oracle)) {
      throw Error(ErrorKind::ReplayFailed,
                  "step " + std::to_string(k + 1) + " (" +
                      describe(moves[k], *start.pointed().complex) + "): " + *why,
                  Cell{moves[k].i, moves[k].j});
    }
    g = detail::apply_raw(g, moves[k]);
  }
  return FaceSphere::unchecked(start.target(), std::move(g));
}

FaceSphere replay(const MoveCertificate& cert) {
  FaceSphere end = replay(cert.start, cert.moves);
  if (!(end == cert.end)) {
    throw Error(ErrorKind::ReplayFailed, "replay does not reach the recorded end sphere");
  }
  return end;
}

std::vector<Move> reverse_moves(const FaceSphere& start, std::span<const Move> moves) {
  std::vector<Move> inverse;
  inverse.reserve(moves.size());
  LabelGrid g = start.grid();
  for (const Move& mv : moves) {
    inverse.push_back(detail::inverse_move(g, mv));
    g = detail::apply_raw(g, mv);
  }
  std::reverse(inverse.begin(), inverse.end());
  return inverse;
}

MoveCertificate reverse(const MoveCertificate& cert) {
  return {cert.end, reverse_moves(cert.start, cert.moves), cert.start};
}

MoveCertificate contiguity_to_spiders(const FaceSphere& f, const FaceSphere& g) {
  if (!is_contiguous(f, g)) {
    throw Error(ErrorKind::ShapeMismatch, "spheres are not contiguous");
  }
  SimplexOracle oracle(*f.pointed().complex);
  LabelGrid cur = f.grid();
  std::vector<Move> moves;
  for (int j = 1; j < f.n(); ++j) {
    for (int i = 1; i < f.m(); ++i) {
      const VertexId want = g.at(i, j);
      if (cur.at(i, j) == want) continue;
      if (!oracle.spider_ok(cur, i, j, want)) {
        throw Error(ErrorKind::DecompositionFailed, "raster step is not a legal spider", Cell{i, j});
      }
      cur.at(i, j) = want;
      moves.push_back(Move::spider(i, j, want));
    }
  }
  return {f, std::move(moves), g};
}

FaceSphere normalize(const FaceSphere& f, std::vector<Move>* moves) {
  LabelGrid g = f.grid();
  detail::normalize_grid(g, moves);
  return FaceSphere::unchecked(f.target(), std::move(g));
}

ChainBuilder::ChainBuilder(FaceSphere start) : start_(start), current_(std::move(start)) {}

void ChainBuilder::apply(const Move& mv) {
  current_ = apply_move(current_, mv);
  moves_.push_back(mv);
}

void ChainBuilder::morph_to(const FaceSphere& next) {
  if (next == current_) return;
  auto cert = contiguity_to_spiders(current_, next);
  moves_.insert(moves_.end(), cert.moves.begin(), cert.moves.end());
  current_ = next;
}

void ChainBuilder::normalize_all() { current_ = normalize(current_, &moves_); }

void ChainBuilder::slide_block(bool vertical, int lo, int hi, const LabelGrid& block,
                               std::vector<int> from, const std::vector<int>& to) {
  const int span_len = vertical ? current_.n() : current_.m();
  const int block_size = vertical ? block.n : block.m;
  if (static_cast<int>(from.size()) != span_len + 1 || to.size() != from.size() ||
      (vertical ? block.m : block.n) != hi - lo) {
    throw Error(ErrorKind::ShapeMismatch, "slide pattern does not fit the sphere");
  }
  auto paint = [&](LabelGrid& g, int p, int b) {
    for (int t = 0; t <= hi - lo; ++t) {
      if (vertical) {
        g.at(lo + t, p) = block.at(t, b);
      } else {
        g.at(p, lo + t) = block.at(b, t);
      }
    }
  };
  {
    LabelGrid expect = current_.grid();
    for (int p = 0; p <= span_len; ++p) paint(expect, p, from[p]);
    if (!(expect == current_.grid())) {
      throw Error(ErrorKind::ShapeMismatch, "sphere does not show the block at its start pattern");
    }
  }
  for (;;) {
    int chosen = -1;
    for (int p = 0; p <= span_len && chosen < 0; ++p) {
      if (from[p] == to[p]) continue;
      const int b = from[p] + (to[p] > from[p] ? 1 : -1);
      if (b < 0 || b > block_size) continue;
      const bool below_ok = p == 0 || (b - from[p - 1] >= 0 && b - from[p - 1] <= 1);
      const bool above_ok = p == span_len || (from[p + 1] - b >= 0 && from[p + 1] - b <= 1);
      if (below_ok && above_ok) chosen = p;
    }
    if (chosen < 0) {
      if (from == to) return;
      throw Error(ErrorKind::DecompositionFailed, "block slide has no admissible step");
    }
    from[chosen] += to[chosen] > from[chosen] ? 1 : -1;
    LabelGrid next = current_.grid();
    paint(next, chosen, from[chosen]);
    morph_to(FaceSphere::unchecked(current_.target(), std::move(next)));
  }
}

MoveCertificate ChainBuilder::finish() const { return {start_, moves_, current_}; }

std::vector<int> clamp_pattern(int length, int shift, int size) {
  std::vector<int> out(static_cast<std::size_t>(length) + 1);
  for (int p = 0; p <= length; ++p) out[p] = std::clamp(p - shift, 0, size);
  return out;
}

MoveCertificate inverse_cancellation_certificate(const FaceSphere& f) {
  const FaceSphere tilde = inverse(f);
  ChainBuilder chain(product(f, tilde));
  if (is_constant(chain.current())) {
    chain.normalize_all();
    return chain.finish();
  }
  const int m = f.m();
  const int n = f.n();
  const int height = 2 * n + 1;
  // Bring f~ down beside f: (f | f~) with basepoint rows on top.
  chain.slide_block(true, m + 1, 2 * m + 1, tilde.grid(), clamp_pattern(height, n + 1, n),
                    clamp_pattern(height, 0, n));
  for (int k = 0; k <= n; ++k) chain.apply(Move::row_del(n));
  // Merge the two basepoint columns in the middle: this is g_m.
  chain.apply(Move::col_del(m));
  for (int r = m; r >= 1; --r) {
    // g_r -> g_{r-1} with column r-1 tripled, then drop two copies.
    LabelGrid next = chain.current().grid();
    for (int j = 0; j <= next.n; ++j) next.at(r, j) = next.at(r - 1, j);
    chain.morph_to(FaceSphere::unchecked(f.target(), std::move(next)));
    if (r >= 2) {
      chain.apply(Move::col_del(r - 1));
      chain.apply(Move::col_del(r - 1));
    }
  }
  chain.normalize_all();
  return chain.finish();
}

MoveCertificate commutativity_certificate(const FaceSphere& f, const FaceSphere& g) {
  if (!same_target(f.target(), g.target())) {
    throw Error(ErrorKind::TargetMismatch, "spheres over different targets");
  }
  const int m = f.m();
  const int n = f.n();
  const int r = g.m();
  const int s = g.n();
  const int width = m + r + 1;
  const int height = n + s + 1;
  ChainBuilder chain(product(f, g));
  chain.slide_block(true, m + 1, m + r + 1, g.grid(), clamp_pattern(height, n + 1, s),
                    clamp_pattern(height, 0, s));
  chain.slide_block(true, 0, m, f.grid(), clamp_pattern(height, 0, n),
                    clamp_pattern(height, s + 1, n));
  chain.slide_block(false, s + 1, height, f.grid(), clamp_pattern(width, 0, m),
                    clamp_pattern(width, r + 1, m));
  chain.slide_block(false, 0, s, g.grid(), clamp_pattern(width, m + 1, r),
                    clamp_pattern(width, 0, r));
  if (!(chain.current() == product(g, f))) {
    throw Error(ErrorKind::ReplayFailed, "commutativity chain did not reach g . f");
  }
  return chain.finish();
}

namespace {

// Sign of the permutation taking (a, b, c) to (x, y, z); 0 if the sets differ.
int relative_sign(const std::array<VertexId, 3>& ref, VertexId x, VertexId y, VertexId z) {
  const std::array<VertexId, 3> t{x, y, z};
  for (int rot = 0; rot < 3; ++rot) {
    if (t[0] == ref[rot] && t[1] == ref[(rot + 1) % 3] && t[2] == ref[(rot + 2) % 3]) return 1;
    if (t[0] == ref[rot] && t[1] == ref[(rot + 2) % 3] && t[2] == ref[(rot + 1) % 3]) return -1;
  }
  return 0;
}

}  // namespace

Orientation::Orientation(std::vector<std::array<VertexId, 3>> faces) : faces_(std::move(faces)) {
  std::map<std::pair<VertexId, VertexId>, std::size_t> directed;
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    const auto& f = faces_[k];
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      throw Error(ErrorKind::NonOrientableTarget, "degenerate oriented face");
    }
    for (int e = 0; e < 3; ++e) {
      auto key = std::make_pair(f[e], f[(e + 1) % 3]);
      auto [it, fresh] = directed.emplace(key, k);
      if (!fresh) {
        throw Error(ErrorKind::NonOrientableTarget,
                    "faces " + std::to_string(it->second) + " and " + std::to_string(k) +
                        " induce the same edge direction");
      }
    }
  }
}

int Orientation::sign(VertexId a, VertexId b, VertexId c) const {
  for (const auto& f : faces_) {
    if (int s = relative_sign(f, a, b, c)) return s;
  }
  return 0;
}

Orientation octahedron_orientation() {
  // Vertex ids follow octahedron(): e1, -e1, e2, -e2, e3, -e3.
  std::vector<std::array<VertexId, 3>> faces;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        const VertexId a = s1 > 0 ? 0 : 1;
        const VertexId b = s2 > 0 ? 2 : 3;
        const VertexId c = s3 > 0 ? 4 : 5;
        if (s1 * s2 * s3 > 0) {
          faces.push_back({a, b, c});
        } else {
          faces.push_back({a, c, b});
        }
      }
    }
  }
  return Orientation(std::move(faces));
}

int degree(const FaceSphere& f, const Orientation& orientation, std::array<VertexId, 3> face) {
  const int face_sign = orientation.sign(face[0], face[1], face[2]);
  if (face_sign == 0) {
    throw Error(ErrorKind::SimplexViolation, "face is not among the oriented faces");
  }
  int total = 0;
  for (int j = 0; j < f.n(); ++j) {
    for (int i = 0; i < f.m(); ++i) {
      // Both triangles of the cell, counter-clockwise.
      total += relative_sign(face, f.at(i, j), f.at(i + 1, j), f.at(i + 1, j + 1));
      total += relative_sign(face, f.at(i, j), f.at(i + 1, j + 1), f.at(i, j + 1));
    }
  }
  return total;
}

}  // namespace facegroup
