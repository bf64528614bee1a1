#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facegroup/approx_bridge.hpp"
#include "facegroup/complex.hpp"
#include "facegroup/edge_group.hpp"
#include "facegroup/face_sphere.hpp"
#include "facegroup/move_engine.hpp"

namespace facegroup {

// Readers throw ParseError (1-based line and column) for malformed text and
// the usual validation errors for well-formed text that breaks an invariant.

struct ComplexFile {
  ComplexPtr complex;
  std::optional<std::string> basepoint;
};

/// `#` comments, optional `basepoint <name>`, one maximal simplex per other line.
ComplexFile parse_complex(std::string_view text);
/// Same, but the basepoint line is required.
TargetPtr parse_target(std::string_view text);
std::string write_complex(const PointedComplex& target);

/// `sphere m n`, then rows from j = n down to j = 0.
FaceSphere parse_sphere(std::string_view text, const TargetPtr& target);
/// Canonical form: single spaces, one row per line. Hashes are taken of this text.
std::string write_sphere(const FaceSphere& f);

/// `grid m n` with the .fs layout.
GridMap parse_grid_map(std::string_view text, const TargetPtr& target);
std::string write_grid_map(const GridMap& g);

EdgeLoop parse_loop(std::string_view text, const TargetPtr& target);
std::string write_loop(const EdgeLoop& l);

struct CertificateFile {
  std::string start_hash;
  std::string end_hash;
  std::vector<Move> moves;
};

/// Header `cert <start-hash> <end-hash>`, then one move per line.
std::string write_certificate(const MoveCertificate& cert);
CertificateFile parse_certificate(std::string_view text, const SimplicialComplex& target);
Move parse_move(std::string_view line, const SimplicialComplex& target, int line_no = 1);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
/// sha256_hex(write_sphere(f)).
std::string sphere_hash(const FaceSphere& f);

/// Labels padded to a common width, top row first.
std::string render_ascii(const LabelGrid& grid, const SimplicialComplex& target);

}  // namespace facegroup
