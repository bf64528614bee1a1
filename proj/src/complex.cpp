#include "facegroup/complex.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "facegroup/errors.hpp"

namespace facegroup {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits "(a,b)" at the comma of parenthesis depth zero inside the outer pair.
std::optional<std::pair<std::string_view, std::string_view>> split_pair(std::string_view s) {
  s = trim(s);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) return std::make_pair(trim(s.substr(0, k)), trim(s.substr(k + 1)));
  }
  return std::nullopt;
}

template <typename Fn>
void for_each_subset(const Simplex& s, Fn&& fn) {
  auto vs = s.vertices();
  const std::size_t k = vs.size();
  if (k > 24) throw Error(ErrorKind::IndexError, "simplex too large to enumerate faces");
  std::vector<VertexId> face;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    face.clear();
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (1u << b)) face.push_back(vs[b]);
    }
    fn(face);
  }
}

}  // namespace

void SimplicialComplex::check_vertex(VertexId v) const {
  if (v >= vertex_count_) {
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v) + " not in universe");
  }
}

std::string SimplicialComplex::vertex_name(VertexId v) const {
  check_vertex(v);
  switch (kind_) {
    case Kind::Explicit:
      return names_[v];
    case Kind::Interval:
      return std::to_string(v);
    case Kind::GridProduct:
    case Kind::CartesianGrid: {
      auto [i, j] = grid_coords(v);
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    case Kind::Product: {
      auto [l, r] = split_vertex(v);
      return "(" + left_->vertex_name(l) + "," + right_->vertex_name(r) + ")";
    }
  }
  return {};
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view name) const {
  switch (kind_) {
    case Kind::Explicit: {
      auto it = index_.find(std::string(name));
      if (it == index_.end()) return std::nullopt;
      return it->second;
    }
    case Kind::Interval: {
      auto v = parse_int(trim(name));
      if (!v || *v < 0 || *v > m_) return std::nullopt;
      return static_cast<VertexId>(*v);
    }
    case Kind::GridProduct:
    case Kind::CartesianGrid: {
      auto parts = split_pair(name);
      if (!parts) return std::nullopt;
      auto i = parse_int(parts->first);
      auto j = parse_int(parts->second);
      if (!i || !j || *i < 0 || *i > m_ || *j < 0 || *j > n_) return std::nullopt;
      return grid_vertex(*i, *j);
    }
    case Kind::Product: {
      auto parts = split_pair(name);
      if (!parts) return std::nullopt;
      auto l = left_->find_vertex(parts->first);
      auto r = right_->find_vertex(parts->second);
      if (!l || !r) return std::nullopt;
      return pair_vertex(*l, *r);
    }
  }
  return std::nullopt;
}

VertexId SimplicialComplex::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

VertexId SimplicialComplex::grid_vertex(int i, int j) const {
  if (i < 0 || i > m_ || j < 0 || j > n_) {
    throw Error(ErrorKind::UnknownVertex, "grid vertex out of range", Cell{i, j});
  }
  return static_cast<VertexId>(j * (m_ + 1) + i);
}

std::pair<int, int> SimplicialComplex::grid_coords(VertexId v) const {
  check_vertex(v);
  const int w = m_ + 1;
  return {static_cast<int>(v) % w, static_cast<int>(v) / w};
}

VertexId SimplicialComplex::pair_vertex(VertexId l, VertexId r) const {
  left_->check_vertex(l);
  right_->check_vertex(r);
  return static_cast<VertexId>(l * right_->vertex_count() + r);
}

std::pair<VertexId, VertexId> SimplicialComplex::split_vertex(VertexId v) const {
  check_vertex(v);
  const auto w = static_cast<VertexId>(right_->vertex_count());
  return {v / w, v % w};
}

bool SimplicialComplex::explicit_member(std::span<const VertexId> sorted) const {
  if (sorted.empty()) return true;
  if (!maximal_masks_.empty()) {
    std::uint64_t mask = 0;
    for (VertexId v : sorted) mask |= std::uint64_t{1} << v;
    return std::any_of(maximal_masks_.begin(), maximal_masks_.end(),
                       [mask](std::uint64_t m) { return (mask & ~m) == 0; });
  }
  for (std::uint32_t idx : star_[sorted.front()]) {
    auto vs = maximal_[idx].vertices();
    if (std::includes(vs.begin(), vs.end(), sorted.begin(), sorted.end())) return true;
  }
  return false;
}

bool SimplicialComplex::is_simplex(std::span<const VertexId> vertices) const {
  for (VertexId v : vertices) check_vertex(v);
  if (vertices.empty()) return true;
  switch (kind_) {
    case Kind::Explicit: {
      if (vertices.size() <= 8) {
        std::array<VertexId, 8> buf{};
        std::copy(vertices.begin(), vertices.end(), buf.begin());
        auto end = buf.begin() + static_cast<std::ptrdiff_t>(vertices.size());
        std::sort(buf.begin(), end);
        end = std::unique(buf.begin(), end);
        return explicit_member(std::span<const VertexId>(buf.begin(), end));
      }
      Simplex s(std::vector<VertexId>(vertices.begin(), vertices.end()));
      return explicit_member(s.vertices());
    }
    case Kind::Interval: {
      auto [lo, hi] = std::minmax_element(vertices.begin(), vertices.end());
      return *hi - *lo <= 1;
    }
    case Kind::GridProduct:
    case Kind::CartesianGrid: {
      const int w = m_ + 1;
      int imin = m_, imax = 0, jmin = n_, jmax = 0;
      for (VertexId v : vertices) {
        int i = static_cast<int>(v) % w;
        int j = static_cast<int>(v) / w;
        imin = std::min(imin, i);
        imax = std::max(imax, i);
        jmin = std::min(jmin, j);
        jmax = std::max(jmax, j);
      }
      if (imax - imin > 1 || jmax - jmin > 1) return false;
      if (kind_ == Kind::GridProduct) return true;
      // Within one cell the only excluded pair is the anti-diagonal.
      bool has_lower_right = false;
      bool has_upper_left = false;
      for (VertexId v : vertices) {
        int i = static_cast<int>(v) % w;
        int j = static_cast<int>(v) / w;
        if (i == imin + 1 && j == jmin) has_lower_right = true;
        if (i == imin && j == jmin + 1) has_upper_left = true;
      }
      return !(has_lower_right && has_upper_left);
    }
    case Kind::Product: {
      const auto w = static_cast<VertexId>(right_->vertex_count());
      std::vector<VertexId> ls;
      std::vector<VertexId> rs;
      ls.reserve(vertices.size());
      rs.reserve(vertices.size());
      for (VertexId v : vertices) {
        ls.push_back(v / w);
        rs.push_back(v % w);
      }
      return left_->is_simplex(ls) && right_->is_simplex(rs);
    }
  }
  return false;
}

void SimplicialComplex::for_each_maximal(const std::function<void(const Simplex&)>& visit) const {
  switch (kind_) {
    case Kind::Explicit:
      for (const auto& s : maximal_) visit(s);
      return;
    case Kind::Interval:
      if (m_ == 0) {
        visit(Simplex{0});
        return;
      }
      for (int i = 0; i < m_; ++i) {
        visit(Simplex{static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
      }
      return;
    case Kind::GridProduct:
    case Kind::CartesianGrid: {
      if (m_ == 0 && n_ == 0) {
        visit(Simplex{0});
        return;
      }
      if (m_ == 0 || n_ == 0) {
        const int len = std::max(m_, n_);
        for (int t = 0; t < len; ++t) {
          VertexId a = m_ == 0 ? grid_vertex(0, t) : grid_vertex(t, 0);
          VertexId b = m_ == 0 ? grid_vertex(0, t + 1) : grid_vertex(t + 1, 0);
          visit(Simplex{a, b});
        }
        return;
      }
      for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < m_; ++i) {
          VertexId a = grid_vertex(i, j);
          VertexId b = grid_vertex(i + 1, j);
          VertexId c = grid_vertex(i, j + 1);
          VertexId d = grid_vertex(i + 1, j + 1);
          if (kind_ == Kind::GridProduct) {
            visit(Simplex{a, b, c, d});
          } else {
            visit(Simplex{a, b, d});
            visit(Simplex{a, c, d});
          }
        }
      }
      return;
    }
    case Kind::Product: {
      auto lefts = left_->maximal_simplices();
      auto rights = right_->maximal_simplices();
      std::vector<VertexId> vs;
      for (const auto& sl : lefts) {
        for (const auto& sr : rights) {
          vs.clear();
          for (VertexId l : sl.vertices()) {
            for (VertexId r : sr.vertices()) vs.push_back(pair_vertex(l, r));
          }
          visit(Simplex(vs));
        }
      }
      return;
    }
  }
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for_each_maximal([&](const Simplex& s) { out.push_back(s); });
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::set<std::vector<VertexId>> faces;
  for_each_maximal([&](const Simplex& s) {
    for_each_subset(s, [&](const std::vector<VertexId>& f) { faces.insert(f); });
  });
  std::vector<std::size_t> counts;
  for (const auto& f : faces) {
    if (counts.size() < f.size()) counts.resize(f.size(), 0);
    ++counts[f.size() - 1];
  }
  return counts;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || vertex_count_ != other.vertex_count_) return false;
  switch (kind_) {
    case Kind::Explicit: {
      if (names_ != other.names_) return false;
      auto a = maximal_;
      auto b = other.maximal_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case Kind::Interval:
    case Kind::GridProduct:
    case Kind::CartesianGrid:
      return m_ == other.m_ && n_ == other.n_;
    case Kind::Product:
      return *left_ == *other.left_ && *right_ == *other.right_;
  }
  return false;
}

ComplexPtr build_explicit(std::vector<std::string> names, std::vector<Simplex> maximal) {
  if (maximal.empty()) throw Error(ErrorKind::EmptyComplex, "no simplices given");
  auto cx = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  cx->kind_ = SimplicialComplex::Kind::Explicit;
  cx->vertex_count_ = names.size();
  for (VertexId v = 0; v < names.size(); ++v) {
    if (!cx->index_.emplace(names[v], v).second) {
      throw Error(ErrorKind::UnknownVertex, "duplicate vertex name '" + names[v] + "'");
    }
  }
  cx->names_ = std::move(names);

  for (const auto& s : maximal) {
    if (s.empty()) throw Error(ErrorKind::EmptyComplex, "empty simplex in input");
    for (VertexId v : s.vertices()) cx->check_vertex(v);
  }
  // Keep only simplices not contained in another; larger ones first.
  std::sort(maximal.begin(), maximal.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  for (const auto& s : maximal) {
    bool dominated = std::any_of(cx->maximal_.begin(), cx->maximal_.end(),
                                 [&](const Simplex& kept) { return s.is_face_of(kept); });
    if (!dominated) cx->maximal_.push_back(s);
  }

  std::vector<bool> used(cx->vertex_count_, false);
  cx->star_.assign(cx->vertex_count_, {});
  for (std::uint32_t idx = 0; idx < cx->maximal_.size(); ++idx) {
    for (VertexId v : cx->maximal_[idx].vertices()) {
      cx->star_[v].push_back(idx);
      used[v] = true;
    }
  }
  for (VertexId v = 0; v < cx->vertex_count_; ++v) {
    if (!used[v]) {
      throw Error(ErrorKind::UnknownVertex, "vertex '" + cx->names_[v] + "' lies in no simplex");
    }
  }
  if (cx->vertex_count_ <= 64) {
    for (const auto& s : cx->maximal_) {
      std::uint64_t mask = 0;
      for (VertexId v : s.vertices()) mask |= std::uint64_t{1} << v;
      cx->maximal_masks_.push_back(mask);
    }
  }
  return cx;
}

ComplexPtr build_explicit(const std::vector<std::vector<std::string>>& maximal) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Simplex> simplices;
  for (const auto& s : maximal) {
    std::vector<VertexId> ids;
    for (const auto& name : s) {
      auto [it, inserted] = index.emplace(name, static_cast<VertexId>(names.size()));
      if (inserted) names.push_back(name);
      ids.push_back(it->second);
    }
    simplices.emplace_back(std::move(ids));
  }
  return build_explicit(std::move(names), std::move(simplices));
}

ComplexPtr interval(int m) {
  if (m < 0) throw Error(ErrorKind::IndexError, "interval length must be nonnegative");
  auto cx = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  cx->kind_ = SimplicialComplex::Kind::Interval;
  cx->m_ = m;
  cx->vertex_count_ = static_cast<std::size_t>(m) + 1;
  return cx;
}

ComplexPtr grid_product(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorKind::IndexError, "grid size must be nonnegative");
  auto cx = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  cx->kind_ = SimplicialComplex::Kind::GridProduct;
  cx->m_ = m;
  cx->n_ = n;
  cx->vertex_count_ = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1);
  return cx;
}

ComplexPtr cartesian_grid(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::IndexError, "triangulated grid needs m, n >= 1");
  auto cx = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  cx->kind_ = SimplicialComplex::Kind::CartesianGrid;
  cx->m_ = m;
  cx->n_ = n;
  cx->vertex_count_ = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1);
  return cx;
}

ComplexPtr categorical_product(ComplexPtr left, ComplexPtr right) {
  auto cx = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  cx->kind_ = SimplicialComplex::Kind::Product;
  cx->vertex_count_ = left->vertex_count() * right->vertex_count();
  cx->left_ = std::move(left);
  cx->right_ = std::move(right);
  return cx;
}

namespace {

// Bron-Kerbosch with pivoting over adjacency bitsets stored as sorted vectors.
void bron_kerbosch(std::vector<VertexId>& r, std::vector<VertexId> p, std::vector<VertexId> x,
                   const std::vector<std::vector<VertexId>>& adj, std::vector<Simplex>& out) {
  if (p.empty() && x.empty()) {
    out.emplace_back(r);
    return;
  }
  auto neighbours_in = [&](VertexId u, const std::vector<VertexId>& set) {
    std::vector<VertexId> res;
    std::set_intersection(set.begin(), set.end(), adj[u].begin(), adj[u].end(),
                          std::back_inserter(res));
    return res;
  };
  VertexId pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (VertexId u : *set) {
      std::size_t c = neighbours_in(u, p).size();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
  }
  std::vector<VertexId> candidates;
  std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(),
                      std::back_inserter(candidates));
  for (VertexId v : candidates) {
    r.push_back(v);
    bron_kerbosch(r, neighbours_in(v, p), neighbours_in(v, x), adj, out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

ComplexPtr clique_complex(const std::vector<std::string>& vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.empty()) throw Error(ErrorKind::EmptyComplex, "graph has no vertices");
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], v);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "edge uses unknown vertex '" + name + "'");
    return it->second;
  };
  std::vector<std::vector<VertexId>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    VertexId u = lookup(a);
    VertexId v = lookup(b);
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  std::vector<VertexId> all(vertices.size());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<Simplex> cliques;
  std::vector<VertexId> r;
  bron_kerbosch(r, all, {}, adj, cliques);
  return build_explicit(vertices, std::move(cliques));
}

ComplexPtr grid_clique_complex(int m, int n) {
  std::vector<std::string> names;
  auto name = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= m; ++i) names.push_back(name(i, j));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= m; ++i) {
      for (int dj = 0; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (dj == 0 && di <= 0) continue;
          int i2 = i + di;
          int j2 = j + dj;
          if (i2 < 0 || i2 > m || j2 > n) continue;
          edges.emplace_back(name(i, j), name(i2, j2));
        }
      }
    }
  }
  return clique_complex(names, edges);
}

bool boundary_contains(int m, int n, int i, int j) {
  if (i < 0 || i > m || j < 0 || j > n) {
    throw Error(ErrorKind::UnknownVertex, "grid vertex out of range", Cell{i, j});
  }
  return i == 0 || i == m || j == 0 || j == n;
}

bool PointedComplex::operator==(const PointedComplex& other) const {
  return basepoint == other.basepoint && *complex == *other.complex;
}

TargetPtr make_pointed(ComplexPtr complex, VertexId basepoint) {
  if (basepoint >= complex->vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "basepoint not in vertex universe");
  }
  return std::make_shared<const PointedComplex>(PointedComplex{std::move(complex), basepoint});
}

TargetPtr make_pointed(ComplexPtr complex, std::string_view basepoint) {
  VertexId v = complex->vertex(basepoint);
  return make_pointed(std::move(complex), v);
}

TargetPtr octahedron() {
  static const TargetPtr oct = [] {
    std::vector<std::string> names{"e1", "-e1", "e2", "-e2", "e3", "-e3"};
    std::vector<Simplex> faces;
    for (VertexId a : {0u, 1u}) {
      for (VertexId b : {2u, 3u}) {
        for (VertexId c : {4u, 5u}) faces.push_back(Simplex{a, b, c});
      }
    }
    return make_pointed(build_explicit(std::move(names), std::move(faces)), VertexId{1});
  }();
  return oct;
}

TargetPtr product_target(const TargetPtr& x, const TargetPtr& y) {
  auto cx = categorical_product(x->complex, y->complex);
  VertexId base = cx->pair_vertex(x->basepoint, y->basepoint);
  return make_pointed(std::move(cx), base);
}

bool same_target(const TargetPtr& a, const TargetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace facegroup
