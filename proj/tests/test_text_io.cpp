#include <gtest/gtest.h>

#include <random>
#include <set>

#include "facegroup/examples.hpp"
#include "facegroup/text_io.hpp"

namespace fg = facegroup;

namespace {

int error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const fg::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(TextIo, ComplexRoundTrip) {
  const auto oct = fg::octahedron();
  const auto back = fg::parse_target(fg::octahedron_text());
  EXPECT_EQ(back->complex->face_counts(), oct->complex->face_counts());
  EXPECT_EQ(back->complex->vertex_name(back->basepoint), "-e1");
  auto named = [](const fg::PointedComplex& t) {
    std::set<std::set<std::string>> out;
    for (const auto& s : t.complex->maximal_simplices()) {
      std::set<std::string> names;
      for (fg::VertexId v : s.vertices()) names.insert(t.complex->vertex_name(v));
      out.insert(names);
    }
    return out;
  };
  EXPECT_EQ(named(*back), named(*oct));
  EXPECT_EQ(fg::write_complex(*fg::parse_target(fg::write_complex(*back))), fg::write_complex(*back));
}

TEST(TextIo, ComplexErrors) {
  EXPECT_EQ(error_line([] { fg::parse_target("a b\nb c\n"); }), 1);
  EXPECT_EQ(error_line([] { fg::parse_complex("# only\n\nbasepoint z\na b\n"); }), 3);
  EXPECT_EQ(error_line([] { fg::parse_complex("# nothing\n"); }), 1);
  const auto file = fg::parse_complex("a b c  # triangle\n");
  EXPECT_FALSE(file.basepoint);
  EXPECT_EQ(file.complex->face_counts(), (std::vector<std::size_t>{3, 3, 1}));
}

TEST(TextIo, SphereRoundTrip) {
  std::mt19937_64 rng(8);
  const auto oct = fg::octahedron();
  for (int t = 0; t < 30; ++t) {
    const auto f = fg::random_sphere(oct, 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5), 30, rng);
    EXPECT_EQ(fg::parse_sphere(fg::write_sphere(f), oct), f);
  }
  const auto fig3 = fg::fig3_sphere();
  const std::string text = fg::write_sphere(fig3);
  EXPECT_EQ(text.substr(0, text.find('\n')), "sphere 5 4");
}

TEST(TextIo, SphereErrors) {
  const auto oct = fg::octahedron();
  try {
    fg::parse_sphere("sphere 1 1\n-e1 -e1\n-e1 e7\n", oct);
    FAIL();
  } catch (const fg::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_EQ(error_line([&] { fg::parse_sphere("sphere 1 1\n-e1 -e1\n", oct); }), 3);
  EXPECT_EQ(error_line([&] { fg::parse_sphere("sphere 1 x\n", oct); }), 1);
  EXPECT_EQ(error_line([&] { fg::parse_sphere("sphere 1 1\n-e1\n-e1 -e1\n", oct); }), 2);
  // Well-formed but not a sphere.
  try {
    fg::parse_sphere("sphere 1 1\n-e1 -e1\n-e1 e2\n", oct);
    FAIL();
  } catch (const fg::ParseError&) {
    FAIL();
  } catch (const fg::Error& e) {
    EXPECT_EQ(e.kind(), fg::ErrorKind::BoundaryViolation);
  }
}

TEST(TextIo, GridMapAndLoop) {
  const auto oct = fg::octahedron();
  std::mt19937_64 rng(9);
  const auto g = fg::random_grid_map(oct, 3, 4, 30, rng);
  EXPECT_EQ(fg::parse_grid_map(fg::write_grid_map(g), oct), g);
  const auto l = fg::parse_loop("-e1 e2 e3 -e1\n", oct);
  EXPECT_EQ(l.length(), 3);
  EXPECT_EQ(fg::write_loop(l), "-e1 e2 e3 -e1\n");
}

TEST(TextIo, CertificateRoundTrip) {
  const auto f = fg::fig3_sphere();
  const auto cert = fg::inverse_cancellation_certificate(f);
  const auto text = fg::write_certificate(cert);
  const auto back = fg::parse_certificate(text, *f.pointed().complex);
  EXPECT_EQ(back.start_hash, fg::sphere_hash(cert.start));
  EXPECT_EQ(back.end_hash, fg::sphere_hash(cert.end));
  EXPECT_EQ(back.moves, cert.moves);
  EXPECT_EQ(fg::replay(cert.start, back.moves), cert.end);
  EXPECT_EQ(error_line([&] { fg::parse_certificate("cert a b\nrowdup 1\nhop 2\n", *f.pointed().complex); }), 3);
}

TEST(TextIo, Sha256KnownVector) {
  EXPECT_EQ(fg::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(fg::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(TextIo, RenderAscii) {
  const auto oct = fg::octahedron();
  const auto c = fg::constant_sphere(oct, 1, 1);
  EXPECT_EQ(fg::render_ascii(c.grid(), *oct->complex), "-e1 -e1\n-e1 -e1\n");
}
