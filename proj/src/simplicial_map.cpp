#include "facegroup/simplicial_map.hpp"

#include <algorithm>

#include "facegroup/errors.hpp"

namespace facegroup {

namespace {

void require_interval(const ComplexPtr& cx, const char* what) {
  if (cx->kind() != SimplicialComplex::Kind::Interval) {
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + " must be an interval map");
  }
}

}  // namespace

std::vector<Simplex> validate(const ComplexPtr& domain, const ComplexPtr& codomain,
                              std::span<const VertexId> assignment) {
  if (assignment.size() != domain->vertex_count()) {
    throw Error(ErrorKind::MissingVertex, "assignment covers " + std::to_string(assignment.size()) +
                                              " of " + std::to_string(domain->vertex_count()) +
                                              " vertices");
  }
  for (VertexId v = 0; v < assignment.size(); ++v) {
    if (assignment[v] == kNoVertex) {
      throw Error(ErrorKind::MissingVertex, "no image for " + domain->vertex_name(v));
    }
    if (assignment[v] >= codomain->vertex_count()) {
      throw Error(ErrorKind::UnknownVertex, "image of " + domain->vertex_name(v) + " not in codomain");
    }
  }
  std::vector<Simplex> bad;
  std::vector<VertexId> image;
  domain->for_each_maximal([&](const Simplex& s) {
    image.clear();
    for (VertexId v : s.vertices()) image.push_back(assignment[v]);
    if (!codomain->is_simplex(image)) bad.push_back(s);
  });
  return bad;
}

std::vector<Simplex> validate(const SimplicialMap& f) {
  return validate(f.domain(), f.codomain(), f.assignment());
}

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain,
                             std::vector<VertexId> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  auto bad = validate(domain_, codomain_, assignment_);
  if (!bad.empty()) {
    std::string names;
    for (VertexId v : bad.front().vertices()) {
      names += (names.empty() ? "" : " ") + domain_->vertex_name(v);
    }
    throw Error(ErrorKind::NotSimplicial, "image of {" + names + "} is not a simplex");
  }
}

SimplicialMap SimplicialMap::unchecked(ComplexPtr domain, ComplexPtr codomain,
                                       std::vector<VertexId> assignment) {
  SimplicialMap f;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.assignment_ = std::move(assignment);
  return f;
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
  return assignment_ == other.assignment_ && *domain_ == *other.domain_ &&
         *codomain_ == *other.codomain_;
}

bool is_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(*f.domain() == *g.domain()) || !(*f.codomain() == *g.codomain())) {
    throw Error(ErrorKind::ShapeMismatch, "contiguity needs a common domain and codomain");
  }
  bool ok = true;
  std::vector<VertexId> image;
  f.domain()->for_each_maximal([&](const Simplex& s) {
    if (!ok) return;
    image.clear();
    for (VertexId v : s.vertices()) {
      image.push_back(f(v));
      image.push_back(g(v));
    }
    ok = f.codomain()->is_simplex(image);
  });
  return ok;
}

SimplicialMap identity_map(const ComplexPtr& complex) {
  std::vector<VertexId> a(complex->vertex_count());
  for (VertexId v = 0; v < a.size(); ++v) a[v] = v;
  return SimplicialMap::unchecked(complex, complex, std::move(a));
}

SimplicialMap constant_map(const ComplexPtr& domain, const ComplexPtr& codomain, VertexId value) {
  if (value >= codomain->vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "constant value not in codomain");
  }
  return SimplicialMap::unchecked(domain, codomain,
                                  std::vector<VertexId>(domain->vertex_count(), value));
}

SimplicialMap alpha(int i, int m) {
  if (m < 0 || i < 0 || i > m) {
    throw Error(ErrorKind::IndexError, "alpha_" + std::to_string(i) + " needs 0 <= i <= " +
                                           std::to_string(m));
  }
  std::vector<VertexId> a(static_cast<std::size_t>(m) + 2);
  for (int s = 0; s <= m + 1; ++s) a[s] = static_cast<VertexId>(s <= i ? s : s - 1);
  return SimplicialMap::unchecked(interval(m + 1), interval(m), std::move(a));
}

int alpha_seq_eval(std::span<const int> indices, int m, int s) {
  // alpha_{i_t} : I_{m+t} -> I_{m+t-1}; the rightmost factor acts first.
  for (std::size_t t = indices.size(); t-- > 0;) {
    if (s > indices[t]) --s;
  }
  (void)m;
  return s;
}

SimplicialMap alpha_seq(std::span<const int> indices, int m) {
  if (m < 0) throw Error(ErrorKind::IndexError, "negative interval length");
  const int r = static_cast<int>(indices.size());
  for (int t = 1; t <= r; ++t) {
    int i = indices[t - 1];
    if (i < 0 || i > m + t - 1) {
      throw Error(ErrorKind::IndexError, "index " + std::to_string(i) + " at position " +
                                             std::to_string(t) + " violates 0 <= i_t <= m+t-1");
    }
  }
  std::vector<VertexId> a(static_cast<std::size_t>(m + r) + 1);
  for (int s = 0; s <= m + r; ++s) a[s] = static_cast<VertexId>(alpha_seq_eval(indices, m, s));
  return SimplicialMap::unchecked(interval(m + r), interval(m), std::move(a));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(*f.codomain() == *g.domain())) {
    throw Error(ErrorKind::ShapeMismatch, "codomain of f differs from domain of g");
  }
  std::vector<VertexId> a(f.assignment().size());
  for (VertexId v = 0; v < a.size(); ++v) a[v] = g(f(v));
  return SimplicialMap::unchecked(f.domain(), g.codomain(), std::move(a));
}

SimplicialMap pair_map(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(*f.domain() == *g.domain())) {
    throw Error(ErrorKind::ShapeMismatch, "pairing needs a common domain");
  }
  auto target = categorical_product(f.codomain(), g.codomain());
  std::vector<VertexId> a(f.assignment().size());
  for (VertexId v = 0; v < a.size(); ++v) a[v] = target->pair_vertex(f(v), g(v));
  return SimplicialMap::unchecked(f.domain(), std::move(target), std::move(a));
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g) {
  auto source = categorical_product(f.domain(), g.domain());
  auto target = categorical_product(f.codomain(), g.codomain());
  std::vector<VertexId> a(source->vertex_count());
  for (VertexId v = 0; v < a.size(); ++v) {
    auto [l, r] = source->split_vertex(v);
    a[v] = target->pair_vertex(f(l), g(r));
  }
  return SimplicialMap::unchecked(std::move(source), std::move(target), std::move(a));
}

SimplicialMap grid_product_map(const SimplicialMap& f, const SimplicialMap& g) {
  require_interval(f.domain(), "first factor");
  require_interval(f.codomain(), "first factor");
  require_interval(g.domain(), "second factor");
  require_interval(g.codomain(), "second factor");
  auto source = grid_product(f.domain()->grid_m(), g.domain()->grid_m());
  auto target = grid_product(f.codomain()->grid_m(), g.codomain()->grid_m());
  std::vector<VertexId> a(source->vertex_count());
  for (VertexId v = 0; v < a.size(); ++v) {
    auto [i, j] = source->grid_coords(v);
    a[v] = target->grid_vertex(static_cast<int>(f(static_cast<VertexId>(i))),
                               static_cast<int>(g(static_cast<VertexId>(j))));
  }
  return SimplicialMap::unchecked(std::move(source), std::move(target), std::move(a));
}

SimplicialMap projection(const ComplexPtr& product, int side) {
  if (product->kind() != SimplicialComplex::Kind::Product || (side != 1 && side != 2)) {
    throw Error(ErrorKind::ShapeMismatch, "projection needs a product complex and side 1 or 2");
  }
  std::vector<VertexId> a(product->vertex_count());
  for (VertexId v = 0; v < a.size(); ++v) {
    auto [l, r] = product->split_vertex(v);
    a[v] = side == 1 ? l : r;
  }
  return SimplicialMap::unchecked(product, side == 1 ? product->left() : product->right(),
                                  std::move(a));
}

}  // namespace facegroup
