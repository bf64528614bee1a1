#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace facegroup {

/// Interned vertex token. Indices are dense in [0, vertex_count()) for every
/// complex kind, so per-vertex data can live in plain vectors.
using VertexId = std::uint32_t;

/// Strictly sorted, duplicate-free vertex set.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> vertices_;
};

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// An abstract simplicial complex. Explicit complexes store their maximal
/// simplices; the interval and grid kinds answer membership arithmetically and
/// categorical products answer it through the two coordinate projections.
class SimplicialComplex {
 public:
  enum class Kind { Explicit, Interval, GridProduct, CartesianGrid, Product };

  Kind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  std::string vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws UnknownVertex.
  VertexId vertex(std::string_view name) const;

  /// Membership for an arbitrary vertex list (order and repeats ignored).
  /// The empty set counts as a simplex. Throws UnknownVertex.
  bool is_simplex(std::span<const VertexId> vertices) const;
  bool is_simplex(const Simplex& s) const { return is_simplex(s.vertices()); }
  bool is_simplex(std::initializer_list<VertexId> vertices) const {
    return is_simplex(std::span<const VertexId>(vertices.begin(), vertices.size()));
  }

  /// Visits every maximal simplex. Products generate them on the fly as
  /// sigma x tau for maximal sigma, tau of the factors.
  void for_each_maximal(const std::function<void(const Simplex&)>& visit) const;
  std::vector<Simplex> maximal_simplices() const;

  /// Number of simplices of each dimension, index = dimension.
  std::vector<std::size_t> face_counts() const;

  // Grid kinds (Interval uses n = 0). Grid vertex (i, j) has id j * (m + 1) + i.
  int grid_m() const noexcept { return m_; }
  int grid_n() const noexcept { return n_; }
  VertexId grid_vertex(int i, int j) const;
  std::pair<int, int> grid_coords(VertexId v) const;

  // Product kind. Vertex (l, r) has id l * |right| + r.
  const ComplexPtr& left() const noexcept { return left_; }
  const ComplexPtr& right() const noexcept { return right_; }
  VertexId pair_vertex(VertexId l, VertexId r) const;
  std::pair<VertexId, VertexId> split_vertex(VertexId v) const;

  bool operator==(const SimplicialComplex& other) const;

  friend ComplexPtr build_explicit(std::vector<std::string> names, std::vector<Simplex> maximal);
  friend ComplexPtr interval(int m);
  friend ComplexPtr grid_product(int m, int n);
  friend ComplexPtr cartesian_grid(int m, int n);
  friend ComplexPtr categorical_product(ComplexPtr left, ComplexPtr right);

 private:
  SimplicialComplex() = default;

  void check_vertex(VertexId v) const;
  bool explicit_member(std::span<const VertexId> sorted) const;

  Kind kind_ = Kind::Explicit;
  std::size_t vertex_count_ = 0;
  int m_ = 0;
  int n_ = 0;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<std::uint32_t>> star_;  // vertex -> maximal simplices containing it
  std::vector<std::uint64_t> maximal_masks_;      // only when vertex_count_ <= 64

  ComplexPtr left_;
  ComplexPtr right_;
};

/// Explicit complex from maximal simplices over a named vertex universe.
/// Dominated simplices are dropped. Throws EmptyComplex, UnknownVertex.
ComplexPtr build_explicit(std::vector<std::string> names, std::vector<Simplex> maximal);
/// Convenience form: simplices given by vertex names, universe in first-seen order.
ComplexPtr build_explicit(const std::vector<std::vector<std::string>>& maximal);

ComplexPtr interval(int m);
/// Categorical product I_m x I_n.
ComplexPtr grid_product(int m, int n);
/// Triangulation of the rectangle by bottom-left to top-right diagonals.
ComplexPtr cartesian_grid(int m, int n);
ComplexPtr categorical_product(ComplexPtr left, ComplexPtr right);

/// Flag complex of a graph; loops are dropped. Throws UnknownVertex.
ComplexPtr clique_complex(const std::vector<std::string>& vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges);

/// True iff (i, j) lies on the boundary of the m x n rectangle. Throws UnknownVertex.
bool boundary_contains(int m, int n, int i, int j);

/// The graph G_{m,n}: king-move adjacency on the (m+1) x (n+1) grid.
ComplexPtr grid_clique_complex(int m, int n);

struct PointedComplex {
  ComplexPtr complex;
  VertexId basepoint = 0;

  const SimplicialComplex& operator*() const { return *complex; }
  const SimplicialComplex* operator->() const { return complex.get(); }
  bool operator==(const PointedComplex& other) const;
};

using TargetPtr = std::shared_ptr<const PointedComplex>;

TargetPtr make_pointed(ComplexPtr complex, VertexId basepoint);
TargetPtr make_pointed(ComplexPtr complex, std::string_view basepoint);

/// Octahedral 2-sphere on e1, -e1, e2, -e2, e3, -e3, based at -e1.
TargetPtr octahedron();

/// Product target (X x Y, (x0, y0)).
TargetPtr product_target(const TargetPtr& x, const TargetPtr& y);

bool same_target(const TargetPtr& a, const TargetPtr& b);

}  // namespace facegroup
