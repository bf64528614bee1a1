#include "facegroup/examples.hpp"

#include <array>
#include <string_view>
#include <vector>

#include "facegroup/text_io.hpp"

namespace facegroup {

namespace {

// Interior rows j = 1 .. n-1, bottom first; the boundary is filled with -e1.
FaceSphere from_interior(int m, int n, const std::vector<std::vector<std::string_view>>& rows) {
  const TargetPtr oct = octahedron();
  LabelGrid g(m, n, oct->basepoint);
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < m; ++i) g.at(i, j) = oct->complex->vertex(rows[j - 1][i - 1]);
  }
  return FaceSphere::from_grid(oct, std::move(g));
}

}  // namespace

FaceSphere fig3_sphere() {
  return from_interior(5, 4, {{"e3", "e3", "e3", "e3"},
                              {"e2", "e2", "e1", "e2"},
                              {"-e3", "e2", "e3", "e2"}});
}

FaceSphere fig10_sphere() {
  return from_interior(4, 4, {{"-e3", "-e2", "-e2"},
                              {"-e3", "e1", "e3"},
                              {"e2", "e2", "e3"}});
}

std::string octahedron_text() {
  return "# octahedral 2-sphere\n" + write_complex(*octahedron());
}

}  // namespace facegroup
