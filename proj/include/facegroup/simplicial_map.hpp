#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "facegroup/complex.hpp"
#include "facegroup/errors.hpp"

namespace facegroup {

/// Marks an unassigned vertex in a partial assignment.
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Vertex map between two complexes, validated on construction.
/// Assignments are dense: entry v is the image of domain vertex v.
class SimplicialMap {
 public:
  /// Throws MissingVertex, UnknownVertex, NotSimplicial.
  SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> assignment);

  /// Skips validation. Callers must already know the map is simplicial.
  static SimplicialMap unchecked(ComplexPtr domain, ComplexPtr codomain,
                                 std::vector<VertexId> assignment);

  const ComplexPtr& domain() const noexcept { return domain_; }
  const ComplexPtr& codomain() const noexcept { return codomain_; }
  const std::vector<VertexId>& assignment() const noexcept { return assignment_; }
  VertexId operator()(VertexId v) const { return assignment_.at(v); }

  /// Same vertex function; domains and codomains compared structurally.
  bool operator==(const SimplicialMap& other) const;

 private:
  SimplicialMap() = default;

  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<VertexId> assignment_;
};

/// Maximal domain simplices whose image is not a codomain simplex; empty means valid.
/// Throws MissingVertex when some entry is kNoVertex or the assignment is short.
std::vector<Simplex> validate(const ComplexPtr& domain, const ComplexPtr& codomain,
                              std::span<const VertexId> assignment);
std::vector<Simplex> validate(const SimplicialMap& f);

/// f(sigma) u g(sigma) is a simplex for every maximal sigma. Throws ShapeMismatch.
bool is_contiguous(const SimplicialMap& f, const SimplicialMap& g);

SimplicialMap identity_map(const ComplexPtr& complex);
SimplicialMap constant_map(const ComplexPtr& domain, const ComplexPtr& codomain, VertexId value);

/// alpha_i : I_{m+1} -> I_m. Throws IndexError unless 0 <= i <= m.
SimplicialMap alpha(int i, int m);
/// alpha_{i_1} o ... o alpha_{i_r} : I_{m+r} -> I_m with 0 <= i_t <= m + t - 1.
SimplicialMap alpha_seq(std::span<const int> indices, int m);
/// Index-level evaluation of alpha_seq without building the map.
int alpha_seq_eval(std::span<const int> indices, int m, int s);

/// T_{p,q}(i, j) = (i - p, j - q).
struct Translation {
  int p = 0;
  int q = 0;
  std::pair<int, int> operator()(int i, int j) const { return {i - p, j - q}; }
  Translation inverse() const { return {-p, -q}; }
};
inline Translation translate(int p, int q) { return {p, q}; }

/// g o f. Throws ShapeMismatch.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
/// (f, g) : Z -> X x Y. Throws ShapeMismatch unless the domains agree.
SimplicialMap pair_map(const SimplicialMap& f, const SimplicialMap& g);
/// f x g : A x B -> X x Y between categorical products.
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g);
/// f x g for interval maps, as a map I_a x I_c -> I_b x I_d of grid products.
SimplicialMap grid_product_map(const SimplicialMap& f, const SimplicialMap& g);

/// Coordinate projections out of a categorical product; side 1 or 2.
SimplicialMap projection(const ComplexPtr& product, int side);

}  // namespace facegroup
