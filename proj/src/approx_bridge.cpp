#include "facegroup/approx_bridge.hpp"

#include <algorithm>
#include <array>

namespace facegroup {

namespace {

// The two triangles of cell (i, j): lower (i,j),(i+1,j),(i+1,j+1) and upper
// (i,j),(i+1,j+1),(i,j+1).
std::array<std::array<VertexId, 3>, 2> cell_triangles(const LabelGrid& g, int i, int j) {
  const VertexId a = g.at(i, j);
  const VertexId b = g.at(i + 1, j);
  const VertexId c = g.at(i + 1, j + 1);
  const VertexId d = g.at(i, j + 1);
  return {{{a, b, c}, {a, c, d}}};
}

std::array<std::array<VertexId, 6>, 2> joint_triangles(const LabelGrid& f, const LabelGrid& g, int i,
                                                       int j) {
  auto tf = cell_triangles(f, i, j);
  auto tg = cell_triangles(g, i, j);
  std::array<std::array<VertexId, 6>, 2> out{};
  for (int t = 0; t < 2; ++t) {
    std::copy(tf[t].begin(), tf[t].end(), out[t].begin());
    std::copy(tg[t].begin(), tg[t].end(), out[t].begin() + 3);
  }
  return out;
}

LabelGrid doubled(const LabelGrid& g) {
  LabelGrid out(2 * g.m + 1, 2 * g.n + 1, 0);
  for (int y = 0; y <= out.n; ++y) {
    for (int x = 0; x <= out.m; ++x) out.at(x, y) = g.at(x / 2, y / 2);
  }
  return out;
}

std::vector<int> halving_pattern(int length) {
  std::vector<int> out(static_cast<std::size_t>(length) + 1);
  for (int p = 0; p <= length; ++p) out[p] = p / 2;
  return out;
}

SimplicialMap grid_map_between(const ComplexPtr& domain, int dm, int dn, const ComplexPtr& codomain,
                               int cm, auto&& coord) {
  std::vector<VertexId> assignment(domain->vertex_count());
  for (int y = 0; y <= dn; ++y) {
    for (int x = 0; x <= dm; ++x) {
      auto [a, b] = coord(x, y);
      assignment[static_cast<std::size_t>(y) * (dm + 1) + x] =
          static_cast<VertexId>(b * (cm + 1) + a);
    }
  }
  return SimplicialMap(domain, codomain, std::move(assignment));
}

}  // namespace

std::optional<Error> check_grid_map(const PointedComplex& target, const LabelGrid& grid) {
  const auto& cx = *target.complex;
  if (grid.m < 1 || grid.n < 1) {
    return Error(ErrorKind::IndexError, "grid maps need m, n >= 1");
  }
  if (grid.cells.size() != grid.index(0, grid.n + 1)) {
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
      const bool on_boundary = i == 0 || i == grid.m || j == 0 || j == grid.n;
      if (on_boundary && grid.at(i, j) != target.basepoint) {
        return Error(ErrorKind::BoundaryViolation,
                     "boundary label " + cx.vertex_name(grid.at(i, j)) + " is not the basepoint",
                     Cell{i, j});
      }
    }
  }
  for (int j = 0; j < grid.n; ++j) {
    for (int i = 0; i < grid.m; ++i) {
      for (const auto& tri : cell_triangles(grid, i, j)) {
        if (!cx.is_simplex(tri)) {
          return Error(ErrorKind::SimplexViolation, "a triangle of the cell is not a simplex",
                       Cell{i, j});
        }
      }
    }
  }
  return std::nullopt;
}

GridMap GridMap::from_grid(TargetPtr target, LabelGrid grid) {
  if (auto err = check_grid_map(*target, grid)) throw *err;
  return GridMap(std::move(target), std::move(grid));
}

GridMap GridMap::unchecked(TargetPtr target, LabelGrid grid) {
  return GridMap(std::move(target), std::move(grid));
}

bool GridMap::operator==(const GridMap& other) const {
  return grid_ == other.grid_ && same_target(target_, other.target_);
}

SimplicialMap GridMap::as_map() const {
  return SimplicialMap::unchecked(cartesian_grid(m(), n()), target_->complex, grid_.cells);
}

bool is_contiguous(const GridMap& f, const GridMap& g) {
  if (f.m() != g.m() || f.n() != g.n() || !same_target(f.target(), g.target())) {
    throw Error(ErrorKind::ShapeMismatch, "contiguity needs equal sizes and a common target");
  }
  const auto& cx = *f.pointed().complex;
  for (int j = 0; j < f.n(); ++j) {
    for (int i = 0; i < f.m(); ++i) {
      for (const auto& tri : joint_triangles(f.grid(), g.grid(), i, j)) {
        if (!cx.is_simplex(tri)) return false;
      }
    }
  }
  return true;
}

SimplicialMap e_map(int m, int n) {
  return grid_map_between(cartesian_grid(m, n), m, n, grid_product(m, n), m,
                          [](int x, int y) { return std::pair{x, y}; });
}

SimplicialMap rho_k(int m, int n, int k) {
  if (k < 2) throw Error(ErrorKind::IndexError, "subdivision factor must be at least 2");
  return grid_map_between(cartesian_grid(k * m, k * n), k * m, k * n, cartesian_grid(m, n), m,
                          [k](int x, int y) { return std::pair{x / k, y / k}; });
}

SimplicialMap gamma(int m, int n) {
  return grid_map_between(cartesian_grid(2 * m + 1, 2 * n + 1), 2 * m + 1, 2 * n + 1,
                          cartesian_grid(m, n), m,
                          [](int x, int y) { return std::pair{x / 2, y / 2}; });
}

GridMap restrict_to_triangulation(const FaceSphere& f) {
  return GridMap::from_grid(f.target(), f.grid());
}

GridMap compose_gamma(const GridMap& f) { return GridMap::unchecked(f.target(), doubled(f.grid())); }

FaceSphere d_construction(const GridMap& f) {
  const int m = f.m();
  const int n = f.n();
  LabelGrid d = doubled(f.grid());
  // Odd columns on even rows read the entry below-left of the anti-diagonal
  // pair, which makes every unit square a simplex.
  for (int k = 1; k <= m - 2; ++k) {
    for (int l = 2; l <= n - 1; ++l) d.at(2 * k + 1, 2 * l) = f.at(k, l - 1);
  }
  if (auto err = check_sphere(f.pointed(), d)) {
    throw Error(ErrorKind::DecompositionFailed,
                std::string("adjusted doubling is not a face sphere: ") + err->what());
  }
  return FaceSphere::unchecked(f.target(), std::move(d));
}

bool check_digital_f(const GridMap& f) {
  const FaceSphere d = d_construction(f);
  return is_contiguous(compose_gamma(f), GridMap::unchecked(f.target(), d.grid()));
}

MoveCertificate check_e_then_d(const FaceSphere& g) {
  const int m = g.m();
  const int n = g.n();
  if (m < 1 || n < 1) throw Error(ErrorKind::ShapeMismatch, "sphere must have m, n >= 1");
  const FaceSphere d = d_construction(restrict_to_triangulation(g));
  ChainBuilder chain(d);
  chain.morph_to(FaceSphere::unchecked(g.target(), doubled(g.grid())));

  // Columns first: every row of the doubled grid slides from x / 2 to min(x, m).
  LabelGrid rows_doubled(m, 2 * n + 1, 0);
  for (int y = 0; y <= 2 * n + 1; ++y) {
    for (int x = 0; x <= m; ++x) rows_doubled.at(x, y) = g.at(x, y / 2);
  }
  chain.slide_block(false, 0, 2 * n + 1, rows_doubled, halving_pattern(2 * m + 1),
                    clamp_pattern(2 * m + 1, 0, m));

  LabelGrid padded(2 * m + 1, n, 0);
  for (int y = 0; y <= n; ++y) {
    for (int x = 0; x <= 2 * m + 1; ++x) padded.at(x, y) = g.at(std::min(x, m), y);
  }
  chain.slide_block(true, 0, 2 * m + 1, padded, halving_pattern(2 * n + 1),
                    clamp_pattern(2 * n + 1, 0, n));

  for (int t = 0; t <= n; ++t) chain.apply(Move::row_del(n));
  for (int t = 0; t <= m; ++t) chain.apply(Move::col_del(m));
  if (!(chain.current() == g)) {
    throw Error(ErrorKind::ReplayFailed, "bridge chain did not reach g");
  }
  return chain.finish();
}

bool lift_spider(const GridMap& g, const GridMap& g_prime) {
  if (g.m() != g_prime.m() || g.n() != g_prime.n() || !same_target(g.target(), g_prime.target())) {
    throw Error(ErrorKind::NotSpiderPair, "grid maps differ in size or target");
  }
  std::optional<Cell> changed;
  for (int j = 0; j <= g.n(); ++j) {
    for (int i = 0; i <= g.m(); ++i) {
      if (g.at(i, j) == g_prime.at(i, j)) continue;
      if (changed) throw Error(ErrorKind::NotSpiderPair, "more than one vertex differs", Cell{i, j});
      if (i == 0 || j == 0 || i == g.m() || j == g.n()) {
        throw Error(ErrorKind::NotSpiderPair, "a boundary vertex differs", Cell{i, j});
      }
      changed = Cell{i, j};
    }
  }
  if (!is_contiguous(g, g_prime)) {
    throw Error(ErrorKind::NotSpiderPair, "grid maps are not contiguous", changed);
  }
  return is_contiguous(d_construction(g), d_construction(g_prime));
}

std::vector<int> subdivision_indices(int m, int k) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m) * (k - 1));
  for (int b = 0; b < m; ++b) out.insert(out.end(), static_cast<std::size_t>(k - 1), b * k);
  return out;
}

Lemma71Report check_lemma_7_1(int m, int n, int k) {
  if (m < 1 || n < 1) throw Error(ErrorKind::IndexError, "grid sizes must be at least 1");
  Lemma71Report report;
  const SimplicialMap e_small = e_map(m, n);
  const SimplicialMap e_big = e_map(k * m, k * n);
  const SimplicialMap left = compose(e_small, rho_k(m, n, k));

  std::vector<int> row_indices = subdivision_indices(m, k);
  std::vector<int> col_indices = subdivision_indices(n, k);
  auto composite = [&](const std::vector<int>& ri, const std::vector<int>& ci) {
    return compose(grid_product_map(alpha_seq(ri, m), alpha_seq(ci, n)), e_big);
  };
  report.exact_equality = left == composite(row_indices, col_indices);
  if (!report.exact_equality) report.failure = "E o rho_k differs from (alpha_I x alpha_J) o E";

  // Walk every index toward the terminal value, one unit at a time.
  report.chain_verified = true;
  SimplicialMap current = composite(row_indices, col_indices);
  auto walk = [&](std::vector<int>& indices, int terminal, const char* axis) {
    for (std::size_t t = 0; t < indices.size(); ++t) {
      while (indices[t] != terminal) {
        indices[t] += indices[t] < terminal ? 1 : -1;
        SimplicialMap next = composite(row_indices, col_indices);
        ++report.chain_steps;
        if (!is_contiguous(current, next)) {
          report.chain_verified = false;
          if (report.failure.empty()) {
            report.failure = std::string(axis) + " step at position " + std::to_string(t) +
                             " is not a contiguity";
          }
          return;
        }
        current = std::move(next);
      }
    }
  };
  walk(row_indices, m, "row");
  if (report.chain_verified) walk(col_indices, n, "column");
  if (report.chain_verified) {
    const std::vector<int> rows_end(static_cast<std::size_t>(m) * (k - 1), m);
    const std::vector<int> cols_end(static_cast<std::size_t>(n) * (k - 1), n);
    if (!(current == composite(rows_end, cols_end))) {
      report.chain_verified = false;
      report.failure = "chain does not end at the trivial extension";
    }
  }
  return report;
}

GridMap random_grid_map(const TargetPtr& target, int m, int n, int steps, std::mt19937_64& rng) {
  LabelGrid g(m, n, target->basepoint);
  if (m < 2 || n < 2) return GridMap::from_grid(target, std::move(g));
  const auto& cx = *target->complex;
  const auto vcount = static_cast<VertexId>(cx.vertex_count());
  std::uniform_int_distribution<int> pick_i(1, m - 1);
  std::uniform_int_distribution<int> pick_j(1, n - 1);
  std::uniform_int_distribution<VertexId> pick_v(0, vcount - 1);
  for (int s = 0; s < steps; ++s) {
    const int i = pick_i(rng);
    const int j = pick_j(rng);
    const VertexId old = g.at(i, j);
    g.at(i, j) = pick_v(rng);
    bool ok = true;
    for (int dj = -1; dj <= 0 && ok; ++dj) {
      for (int di = -1; di <= 0 && ok; ++di) {
        for (const auto& tri : cell_triangles(g, i + di, j + dj)) {
          if (!cx.is_simplex(tri)) ok = false;
        }
      }
    }
    if (!ok) g.at(i, j) = old;
  }
  return GridMap::from_grid(target, std::move(g));
}

FaceSphere random_sphere(const TargetPtr& target, int m, int n, int steps, std::mt19937_64& rng) {
  FaceSphere f = constant_sphere(target, m, n);
  if (m < 2 || n < 2) return f;
  const auto vcount = static_cast<VertexId>(target->complex->vertex_count());
  std::uniform_int_distribution<int> pick_i(1, m - 1);
  std::uniform_int_distribution<int> pick_j(1, n - 1);
  std::uniform_int_distribution<VertexId> pick_v(0, vcount - 1);
  for (int s = 0; s < steps; ++s) {
    const int i = pick_i(rng);
    const int j = pick_j(rng);
    const VertexId v = pick_v(rng);
    if (spider_legal(f, i, j, v)) f = apply_move(f, Move::spider(i, j, v));
  }
  return f;
}

}  // namespace facegroup
