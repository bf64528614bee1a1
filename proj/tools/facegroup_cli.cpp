// facegroup: command-line front end for face spheres over a pointed complex.

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "facegroup/approx_bridge.hpp"
#include "facegroup/edge_group.hpp"
#include "facegroup/examples.hpp"
#include "facegroup/move_engine.hpp"
#include "facegroup/text_io.hpp"

namespace fg = facegroup;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Raised for unreadable files; reported as a usage error.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_sink(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

struct Options {
  std::string complex_path;
  std::string out_path;
  bool ascii = false;
};

fg::TargetPtr load_target(const Options& opt) {
  if (opt.complex_path.empty()) return fg::octahedron();
  return fg::parse_target(read_source(opt.complex_path));
}

fg::FaceSphere load_sphere(const fg::TargetPtr& target, const std::string& path) {
  return fg::parse_sphere(read_source(path), target);
}

void emit_sphere(const Options& opt, const fg::FaceSphere& f) {
  if (opt.ascii && opt.out_path.empty()) {
    std::cout << fg::render_ascii(f.grid(), *f.pointed().complex);
    return;
  }
  write_sink(opt.out_path, fg::write_sphere(f));
}

fg::Orientation load_orientation(const fg::TargetPtr& target, const std::string& path) {
  if (path.empty()) {
    if (!fg::same_target(target, fg::octahedron())) {
      throw IoError("--orientation is required for targets other than the octahedron");
    }
    return fg::octahedron_orientation();
  }
  std::istringstream in(read_source(path));
  std::vector<std::array<fg::VertexId, 3>> faces;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> names{std::istream_iterator<std::string>(words), {}};
    if (names.empty()) continue;
    if (names.size() != 3) throw IoError("orientation lines list three vertices");
    faces.push_back({target->complex->vertex(names[0]), target->complex->vertex(names[1]),
                     target->complex->vertex(names[2])});
  }
  return fg::Orientation(std::move(faces));
}

std::array<fg::VertexId, 3> parse_face(const fg::TargetPtr& target, const std::string& text) {
  std::istringstream words(text);
  std::vector<std::string> names{std::istream_iterator<std::string>(words), {}};
  if (names.size() != 3) throw IoError("--face needs three vertex names");
  const auto& cx = *target->complex;
  return {cx.vertex(names[0]), cx.vertex(names[1]), cx.vertex(names[2])};
}

// Header keyword of a .fs or .gm text.
std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    if (words >> word) return word;
  }
  return {};
}

void print_error(const fg::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face spheres, their moves and certificates"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("-c,--complex", opt.complex_path, "Pointed complex (.cx); default: octahedron");

  std::string file_a;
  std::string file_b;
  std::function<int()> action;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", opt.out_path, "Output path; default: standard output");
  };
  auto add_ascii = [&](CLI::App* cmd) {
    cmd->add_flag("--ascii", opt.ascii, "Render spheres as an aligned grid");
  };

  auto* validate = app.add_subcommand("validate", "Check a sphere (.fs) or grid map (.gm)");
  validate->add_option("-f,--file,file", file_a, "Input; default: standard input");
  validate->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const std::string text = read_source(file_a);
      if (first_word(text) == "grid") {
        fg::parse_grid_map(text, target);
      } else {
        fg::parse_sphere(text, target);
      }
      std::cout << "ok\n";
      return kOk;
    };
  });

  auto* mul = app.add_subcommand("mul", "Product f . g");
  mul->add_option("f", file_a)->required();
  mul->add_option("g", file_b)->required();
  add_out(mul);
  add_ascii(mul);
  mul->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      emit_sphere(opt, fg::product(load_sphere(target, file_a), load_sphere(target, file_b)));
      return kOk;
    };
  });

  auto* inv = app.add_subcommand("inv", "Inverse by horizontal flip");
  inv->add_option("f", file_a);
  add_out(inv);
  add_ascii(inv);
  inv->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      emit_sphere(opt, fg::inverse(load_sphere(target, file_a)));
      return kOk;
    };
  });

  auto* norm = app.add_subcommand("normalize", "Delete repeated rows and columns");
  norm->add_option("f", file_a);
  add_out(norm);
  add_ascii(norm);
  norm->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      emit_sphere(opt, fg::normalize(load_sphere(target, file_a)));
      return kOk;
    };
  });

  auto* render = app.add_subcommand("render", "Print a sphere as an aligned grid");
  render->add_option("f", file_a);
  render->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const auto f = load_sphere(target, file_a);
      std::cout << fg::render_ascii(f.grid(), *target->complex);
      return kOk;
    };
  });

  auto* contig = app.add_subcommand("contig", "Are two equal-size spheres contiguous");
  contig->add_option("f", file_a)->required();
  contig->add_option("g", file_b)->required();
  contig->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const bool yes = fg::is_contiguous(load_sphere(target, file_a), load_sphere(target, file_b));
      std::cout << (yes ? "true" : "false") << "\n";
      return yes ? kOk : kFailure;
    };
  });

  fg::SearchBudget budget;
  auto* search = app.add_subcommand("search", "Bounded search for an equivalence certificate");
  search->add_option("f", file_a)->required();
  search->add_option("g", file_b)->required();
  search->add_option("--max-states", budget.max_states, "State budget")->capture_default_str();
  search->add_option("--max-pad", budget.max_pad, "Extra rows and columns allowed")->capture_default_str();
  search->add_option("--seed", budget.seed, "Frontier shuffle seed; 0 keeps the natural order")
      ->capture_default_str();
  search->add_option("--threads", budget.threads, "Workers; 0 reads FACEGROUP_THREADS");
  search->add_option("-o,--output", opt.out_path, "Certificate path");
  search->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const auto out = fg::search_equivalence(load_sphere(target, file_a), load_sphere(target, file_b),
                                              budget);
      std::cout << (out.equivalent ? "Equivalent" : "Unknown") << "\n"
                << "states " << out.states_explored << "\n"
                << "frontier_exhausted " << (out.frontier_exhausted ? "true" : "false") << "\n";
      if (out.certificate) {
        std::cout << "moves " << out.certificate->moves.size() << "\n";
        if (!opt.out_path.empty()) write_sink(opt.out_path, fg::write_certificate(*out.certificate));
      }
      return out.equivalent ? kOk : kFailure;
    };
  });

  auto* replay = app.add_subcommand("replay", "Check a certificate against its start sphere");
  replay->add_option("f", file_a)->required();
  replay->add_option("cert", file_b)->required();
  add_out(replay);
  replay->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const auto start = load_sphere(target, file_a);
      const auto cert = fg::parse_certificate(read_source(file_b), *target->complex);
      if (fg::sphere_hash(start) != cert.start_hash) {
        std::cerr << "error: start sphere does not match the certificate\n";
        return kFailure;
      }
      const auto end = fg::replay(start, cert.moves);
      if (fg::sphere_hash(end) != cert.end_hash) {
        std::cerr << "error: replay does not reach the certified end sphere\n";
        return kFailure;
      }
      if (!opt.out_path.empty()) write_sink(opt.out_path, fg::write_sphere(end));
      std::cout << "ok " << cert.moves.size() << " moves\n";
      return kOk;
    };
  });

  std::string face_text;
  std::string orientation_path;
  auto* degree = app.add_subcommand("degree", "Signed count of triangles onto an oriented face");
  degree->add_option("f", file_a);
  degree->add_option("--face", face_text, "Three vertex names; defaults to the first oriented face");
  degree->add_option("--orientation", orientation_path, "Oriented faces, one per line");
  degree->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const auto f = load_sphere(target, file_a);
      const auto orientation = load_orientation(target, orientation_path);
      const auto face = face_text.empty() ? orientation.faces().front() : parse_face(target, face_text);
      std::cout << fg::degree(f, orientation, face) << "\n";
      return kOk;
    };
  });

  std::string example_name;
  auto* example = app.add_subcommand("example", "Write built-in data");
  example->add_option("name", example_name)
      ->required()
      ->check(CLI::IsMember({"octahedron", "fig3", "fig10"}));
  add_out(example);
  add_ascii(example);
  example->callback([&] {
    action = [&] {
      if (example_name == "octahedron") {
        write_sink(opt.out_path, fg::octahedron_text());
      } else {
        emit_sphere(opt, example_name == "fig3" ? fg::fig3_sphere() : fg::fig10_sphere());
      }
      return kOk;
    };
  });

  auto* bridge = app.add_subcommand("bridge", "Grid-map constructions");
  bridge->require_subcommand(1);
  auto* dconstruct = bridge->add_subcommand("dconstruct", "Adjusted doubling of a grid map");
  dconstruct->add_option("g", file_a);
  add_out(dconstruct);
  add_ascii(dconstruct);
  dconstruct->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      emit_sphere(opt, fg::d_construction(fg::parse_grid_map(read_source(file_a), target)));
      return kOk;
    };
  });
  auto* digital = bridge->add_subcommand("check-digital", "g o gamma against D_g o E");
  digital->add_option("g", file_a);
  digital->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const bool yes = fg::check_digital_f(fg::parse_grid_map(read_source(file_a), target));
      std::cout << (yes ? "true" : "false") << "\n";
      return yes ? kOk : kFailure;
    };
  });
  auto* etd = bridge->add_subcommand("check-etd", "Certificate from D_{f o E} to f");
  etd->add_option("f", file_a);
  etd->add_option("-o,--output", opt.out_path, "Certificate path");
  etd->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const auto cert = fg::check_e_then_d(load_sphere(target, file_a));
      fg::replay(cert);
      std::cout << "ok " << cert.moves.size() << " moves\n";
      if (!opt.out_path.empty()) write_sink(opt.out_path, fg::write_certificate(cert));
      return kOk;
    };
  });

  fg::LoopBudget loop_budget;
  auto* loop = app.add_subcommand("loop", "Bounded search between two edge loops (.el)");
  loop->add_option("l1", file_a)->required();
  loop->add_option("l2", file_b)->required();
  loop->add_option("--max-length", loop_budget.max_length, "Longest loop visited")->capture_default_str();
  loop->add_option("--max-states", loop_budget.max_states, "State budget")->capture_default_str();
  loop->callback([&] {
    action = [&] {
      const auto target = load_target(opt);
      const auto l1 = fg::parse_loop(read_source(file_a), target);
      const auto l2 = fg::parse_loop(read_source(file_b), target);
      const auto out = fg::loop_search(l1, l2, loop_budget);
      std::cout << (out.equivalent ? "Equivalent" : "Unknown") << "\n"
                << "states " << out.states_explored << "\n"
                << "frontier_exhausted " << (out.frontier_exhausted ? "true" : "false") << "\n";
      if (out.certificate) {
        for (const auto& mv : out.certificate->moves) std::cout << fg::describe(mv, *target->complex) << "\n";
      }
      return out.equivalent ? kOk : kFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const fg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fg::Error& e) {
    print_error(e);
    return kFailure;
  }
}
