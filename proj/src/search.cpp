// Bounded bidirectional search for extension-contiguity equivalence.
//
// States are normalized label grids. A step from a state N duplicates at most
// one row and one column of N, rewrites one entry next to the duplicated lines
// (or anywhere when nothing was duplicated) with a legal spider, and
// normalizes again. Every step therefore expands into concrete legal moves,
// which is how certificates are rebuilt once the two frontiers meet.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>

#include "facegroup/move_engine.hpp"
#include "grid_ops.hpp"

namespace facegroup {

namespace {

using detail::SimplexOracle;

struct Edge {
  std::int16_t dup_row = -1;
  std::int16_t dup_col = -1;
  std::int16_t i = 0;
  std::int16_t j = 0;
  VertexId label = 0;
};

struct Node {
  std::uint32_t parent = 0;
  Edge edge;
  std::string_view key;
};

constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

// Stable storage for keys; views into it never move.
class KeyArena {
 public:
  std::string_view store(std::string_view key) {
    if (key.size() > kBlock - used_) {
      blocks_.push_back(std::make_unique<char[]>(std::max(kBlock, key.size())));
      used_ = 0;
    }
    char* dst = blocks_.back().get() + used_;
    std::copy(key.begin(), key.end(), dst);
    used_ += key.size();
    return {dst, key.size()};
  }

 private:
  static constexpr std::size_t kBlock = 1 << 20;
  std::vector<std::unique_ptr<char[]>> blocks_;
  std::size_t used_ = kBlock;
};

class Codec {
 public:
  explicit Codec(std::size_t vertex_count) : wide_(vertex_count > 255) {}

  void encode(const LabelGrid& g, std::string& out) const {
    out.clear();
    out.push_back(static_cast<char>(g.m));
    out.push_back(static_cast<char>(g.n));
    for (VertexId v : g.cells) {
      if (wide_) {
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
      } else {
        out.push_back(static_cast<char>(v));
      }
    }
  }

  LabelGrid decode(std::string_view key) const {
    LabelGrid g;
    g.m = static_cast<unsigned char>(key[0]);
    g.n = static_cast<unsigned char>(key[1]);
    const std::size_t count = static_cast<std::size_t>(g.m + 1) * static_cast<std::size_t>(g.n + 1);
    g.cells.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      if (wide_) {
        VertexId v = 0;
        for (int b = 0; b < 4; ++b) {
          v |= static_cast<VertexId>(static_cast<unsigned char>(key[2 + 4 * k + b])) << (8 * b);
        }
        g.cells[k] = v;
      } else {
        g.cells[k] = static_cast<unsigned char>(key[2 + k]);
      }
    }
    return g;
  }

 private:
  bool wide_;
};

struct Neighbour {
  std::string key;
  Edge edge;
};

class Expander {
 public:
  Expander(const SimplexOracle& oracle, const Codec& codec, int m_cap, int n_cap)
      : oracle_(oracle), codec_(codec), m_cap_(m_cap), n_cap_(n_cap) {}

  void expand(const LabelGrid& g, std::vector<Neighbour>& out) const {
    out.clear();
    std::string key;
    for (int dr = -1; dr <= g.n; ++dr) {
      for (int dc = -1; dc <= g.m; ++dc) {
        LabelGrid e = g;
        if (dc >= 0) e = detail::dup_col(e, dc);
        if (dr >= 0) e = detail::dup_row(e, dr);
        if (e.m > m_cap_ || e.n > n_cap_) continue;
        const int j_lo = std::max(1, dr >= 0 ? dr : 1);
        const int j_hi = std::min(e.n - 1, dr >= 0 ? dr + 1 : e.n - 1);
        const int i_lo = std::max(1, dc >= 0 ? dc : 1);
        const int i_hi = std::min(e.m - 1, dc >= 0 ? dc + 1 : e.m - 1);
        for (int j = j_lo; j <= j_hi; ++j) {
          for (int i = i_lo; i <= i_hi; ++i) {
            const VertexId old = e.at(i, j);
            for_each_label(e, i, j, [&](VertexId v) {
              LabelGrid next = e;
              next.at(i, j) = v;
              detail::normalize_grid(next, nullptr);
              codec_.encode(next, key);
              out.push_back({key, Edge{static_cast<std::int16_t>(dr), static_cast<std::int16_t>(dc),
                                       static_cast<std::int16_t>(i), static_cast<std::int16_t>(j), v}});
            });
            e.at(i, j) = old;
          }
        }
      }
    }
  }

  // Concrete moves realizing one edge out of the state `from`.
  std::vector<Move> moves_for(const LabelGrid& from, const Edge& edge) const {
    std::vector<Move> moves;
    LabelGrid e = from;
    if (edge.dup_col >= 0) {
      moves.push_back(Move::col_dup(edge.dup_col));
      e = detail::dup_col(e, edge.dup_col);
    }
    if (edge.dup_row >= 0) {
      moves.push_back(Move::row_dup(edge.dup_row));
      e = detail::dup_row(e, edge.dup_row);
    }
    moves.push_back(Move::spider(edge.i, edge.j, edge.label));
    e.at(edge.i, edge.j) = edge.label;
    detail::normalize_grid(e, &moves);
    return moves;
  }

 private:
  template <typename Fn>
  void for_each_label(const LabelGrid& e, int i, int j, Fn&& fn) const {
    if (oracle_.small()) {
      std::uint64_t labels = oracle_.spider_labels(e, i, j);
      while (labels) {
        const auto v = static_cast<VertexId>(__builtin_ctzll(labels));
        labels &= labels - 1;
        fn(v);
      }
      return;
    }
    const auto vc = static_cast<VertexId>(oracle_.vertex_count());
    for (VertexId v = 0; v < vc; ++v) {
      if (oracle_.spider_ok(e, i, j, v)) fn(v);
    }
  }

  const SimplexOracle& oracle_;
  const Codec& codec_;
  int m_cap_;
  int n_cap_;
};

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FACEGROUP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs of equal adjacent rows (or columns): start index and length.
std::vector<std::pair<int, int>> runs(const LabelGrid& g, bool rows) {
  std::vector<std::pair<int, int>> out;
  const int last = rows ? g.n : g.m;
  for (int k = 0; k <= last; ++k) {
    const bool same = k > 0 && (rows ? detail::rows_equal(g, k - 1, k) : detail::cols_equal(g, k - 1, k));
    if (same) {
      ++out.back().second;
    } else {
      out.emplace_back(k, 1);
    }
  }
  return out;
}

// Deletions turning `big` into `small`, when such a sequence exists.
std::optional<std::vector<Move>> deletions_between(const LabelGrid& big, const LabelGrid& small) {
  if (big.m < small.m || big.n < small.n) return std::nullopt;
  std::vector<Move> moves;
  LabelGrid g = big;
  for (bool rows : {true, false}) {
    auto have = runs(g, rows);
    auto want = runs(small, rows);
    if (have.size() != want.size()) return std::nullopt;
    for (std::size_t k = have.size(); k-- > 0;) {
      if (have[k].second < want[k].second) return std::nullopt;
      for (int c = want[k].second; c < have[k].second; ++c) {
        const Move mv = rows ? Move::row_del(have[k].first) : Move::col_del(have[k].first);
        moves.push_back(mv);
        g = detail::apply_raw(g, mv);
      }
    }
  }
  if (!(g == small)) return std::nullopt;
  return moves;
}

// Pads degenerate all-basepoint spheres to 1 x 1 so the search has room to move.
LabelGrid lift_degenerate(const LabelGrid& g, std::vector<Move>& moves) {
  LabelGrid out = g;
  if (out.m == 0) {
    moves.push_back(Move::col_dup(0));
    out = detail::dup_col(out, 0);
  }
  if (out.n == 0) {
    moves.push_back(Move::row_dup(0));
    out = detail::dup_row(out, 0);
  }
  return out;
}

}  // namespace

SearchOutcome search_equivalence(const FaceSphere& f, const FaceSphere& g,
                                 const SearchBudget& budget) {
  if (!same_target(f.target(), g.target())) {
    throw Error(ErrorKind::TargetMismatch, "spheres over different targets");
  }
  SearchOutcome outcome;
  auto finish = [&](std::vector<Move> moves) {
    MoveCertificate cert{f, std::move(moves), g};
    replay(cert);
    outcome.equivalent = true;
    outcome.certificate = std::move(cert);
    return outcome;
  };
  if (f == g) return finish({});
  if (auto dels = deletions_between(f.grid(), g.grid())) return finish(std::move(*dels));
  if (auto dels = deletions_between(g.grid(), f.grid())) {
    return finish(reverse_moves(g, *dels));
  }

  const auto& cx = *f.pointed().complex;
  SimplexOracle oracle(cx);
  Codec codec(cx.vertex_count());
  const int m_cap = std::min(255, std::max(f.m(), g.m()) + budget.max_pad);
  const int n_cap = std::min(255, std::max(f.n(), g.n()) + budget.max_pad);
  Expander expander(oracle, codec, m_cap, n_cap);

  // Both ends are normalized first; the deletions become the certificate's
  // prefix and, reversed, its suffix.
  std::array<std::vector<Move>, 2> to_root;
  std::array<LabelGrid, 2> roots;
  {
    const FaceSphere* ends[2] = {&f, &g};
    for (int side = 0; side < 2; ++side) {
      LabelGrid r = lift_degenerate(ends[side]->grid(), to_root[side]);
      detail::normalize_grid(r, &to_root[side]);
      roots[side] = std::move(r);
    }
  }

  std::array<std::vector<Node>, 2> nodes;
  std::array<std::unordered_map<std::string_view, std::uint32_t>, 2> seen;
  std::array<std::vector<std::uint32_t>, 2> frontier;
  KeyArena arena;
  std::string scratch;
  for (int side = 0; side < 2; ++side) {
    codec.encode(roots[side], scratch);
    auto key = arena.store(scratch);
    nodes[side].push_back({kRoot, {}, key});
    seen[side].emplace(key, 0);
    frontier[side].push_back(0);
  }

  // Moves from the root of `side` down to node `id`.
  auto path_moves = [&](int side, std::uint32_t id) {
    std::vector<std::uint32_t> chain;
    for (std::uint32_t cur = id; cur != kRoot; cur = nodes[side][cur].parent) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    std::vector<Move> moves;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const Node& child = nodes[side][chain[k]];
      LabelGrid from = codec.decode(nodes[side][child.parent].key);
      auto step = expander.moves_for(from, child.edge);
      moves.insert(moves.end(), step.begin(), step.end());
    }
    return moves;
  };

  auto meet = [&](std::uint32_t fwd_id, std::uint32_t bwd_id) {
    std::vector<Move> moves = to_root[0];
    auto fwd = path_moves(0, fwd_id);
    moves.insert(moves.end(), fwd.begin(), fwd.end());
    const FaceSphere g_root = FaceSphere::unchecked(g.target(), roots[1]);
    auto bwd = path_moves(1, bwd_id);
    auto back = reverse_moves(g_root, bwd);
    moves.insert(moves.end(), back.begin(), back.end());
    auto tail = reverse_moves(g, to_root[1]);
    moves.insert(moves.end(), tail.begin(), tail.end());
    return finish(std::move(moves));
  };

  if (auto it = seen[1].find(nodes[0][0].key); it != seen[1].end()) return meet(0, it->second);

  const int workers = worker_count(budget.threads);
  std::mt19937_64 rng(budget.seed);
  std::vector<std::vector<Neighbour>> buffers;

  outcome.states_explored = 2;
  for (;;) {
    if (frontier[0].empty() || frontier[1].empty()) {
      outcome.frontier_exhausted = true;
      return outcome;
    }
    const int side = frontier[1].size() < frontier[0].size() ? 1 : 0;
    const int other = 1 - side;
    std::vector<std::uint32_t> order = frontier[side];
    if (budget.seed != 0) std::shuffle(order.begin(), order.end(), rng);

    // Expand in batches so neighbour lists never pile up for a whole level.
    std::vector<std::uint32_t> next;
    const std::size_t batch = static_cast<std::size_t>(workers) * 64;
    for (std::size_t lo = 0; lo < order.size(); lo += batch) {
      const std::size_t hi = std::min(order.size(), lo + batch);
      buffers.resize(hi - lo);
      auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
          LabelGrid grid = codec.decode(nodes[side][order[lo + k]].key);
          expander.expand(grid, buffers[k]);
        }
      };
      const std::size_t count = hi - lo;
      const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), (count + 15) / 16);
      if (threads <= 1) {
        work(0, count);
      } else {
        std::vector<std::thread> pool;
        const std::size_t per = (count + threads - 1) / threads;
        for (std::size_t w = 0; w < threads; ++w) {
          const std::size_t begin = w * per;
          const std::size_t end = std::min(count, begin + per);
          if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& t : pool) t.join();
      }

      for (std::size_t k = 0; k < count; ++k) {
        for (const Neighbour& nb : buffers[k]) {
          if (seen[side].count(nb.key)) continue;
          auto key = arena.store(nb.key);
          const auto id = static_cast<std::uint32_t>(nodes[side].size());
          nodes[side].push_back({order[lo + k], nb.edge, key});
          seen[side].emplace(key, id);
          next.push_back(id);
          ++outcome.states_explored;
          if (auto it = seen[other].find(key); it != seen[other].end()) {
            return side == 0 ? meet(id, it->second) : meet(it->second, id);
          }
          if (outcome.states_explored >= budget.max_states) return outcome;
        }
      }
    }
    frontier[side] = std::move(next);
  }
}

}  // namespace facegroup
