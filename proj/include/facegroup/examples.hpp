#pragma once

#include <string>

#include "facegroup/face_sphere.hpp"

namespace facegroup {

/// 5 x 4 sphere over the octahedron that represents the trivial element.
FaceSphere fig3_sphere();

/// 4 x 4 sphere over the octahedron that generates the face group.
FaceSphere fig10_sphere();

/// The built-in octahedron in .cx form.
std::string octahedron_text();

}  // namespace facegroup
