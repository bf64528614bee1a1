#include "facegroup/text_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace facegroup {

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Nonempty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int parse_int(const Token& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line, tok.column);
  }
  return value;
}

VertexId parse_label(const Token& tok, int line, const SimplicialComplex& cx) {
  auto v = cx.find_vertex(tok.text);
  if (!v) throw ParseError("unknown vertex '" + std::string(tok.text) + "'", line, tok.column);
  return *v;
}

LabelGrid parse_grid(std::string_view text, std::string_view header, const SimplicialComplex& cx) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const Line& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0].text != header) {
    throw ParseError("expected '" + std::string(header) + " <m> <n>'", head.number, 1);
  }
  const int m = parse_int(head.tokens[1], head.number);
  const int n = parse_int(head.tokens[2], head.number);
  if (m < 0 || n < 0) throw ParseError("negative grid size", head.number, head.tokens[1].column);
  if (static_cast<int>(lines.size()) - 1 != n + 1) {
    const int at = lines.size() > static_cast<std::size_t>(n) + 2 ? lines[n + 2].number : lines.back().number + 1;
    throw ParseError("expected " + std::to_string(n + 1) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     at, 1);
  }
  LabelGrid grid(m, n, 0);
  for (int r = 0; r <= n; ++r) {
    const Line& line = lines[static_cast<std::size_t>(r) + 1];
    if (static_cast<int>(line.tokens.size()) != m + 1) {
      const int col = line.tokens.size() > static_cast<std::size_t>(m) + 1 ? line.tokens[m + 1].column : 1;
      throw ParseError("expected " + std::to_string(m + 1) + " labels, found " +
                           std::to_string(line.tokens.size()),
                       line.number, col);
    }
    const int j = n - r;
    for (int i = 0; i <= m; ++i) grid.at(i, j) = parse_label(line.tokens[i], line.number, cx);
  }
  return grid;
}

std::string write_grid(const LabelGrid& g, std::string_view header, const SimplicialComplex& cx) {
  std::string out = std::string(header) + " " + std::to_string(g.m) + " " + std::to_string(g.n) + "\n";
  for (int j = g.n; j >= 0; --j) {
    for (int i = 0; i <= g.m; ++i) {
      if (i > 0) out += ' ';
      out += cx.vertex_name(g.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

ComplexFile parse_complex(std::string_view text) {
  ComplexFile out;
  std::vector<std::vector<std::string>> simplices;
  int basepoint_line = 0;
  int basepoint_col = 1;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front().text == "basepoint") {
      if (out.basepoint) throw ParseError("second basepoint line", line.number, 1);
      if (line.tokens.size() != 2) throw ParseError("expected 'basepoint <name>'", line.number, 1);
      out.basepoint = std::string(line.tokens[1].text);
      basepoint_line = line.number;
      basepoint_col = line.tokens[1].column;
      continue;
    }
    std::vector<std::string> simplex;
    for (const Token& t : line.tokens) simplex.emplace_back(t.text);
    simplices.push_back(std::move(simplex));
  }
  if (simplices.empty()) throw ParseError("no simplices", 1, 1);
  out.complex = build_explicit(simplices);
  if (out.basepoint && !out.complex->find_vertex(*out.basepoint)) {
    throw ParseError("basepoint '" + *out.basepoint + "' is not a vertex", basepoint_line, basepoint_col);
  }
  return out;
}

TargetPtr parse_target(std::string_view text) {
  ComplexFile file = parse_complex(text);
  if (!file.basepoint) throw ParseError("missing 'basepoint <name>' line", 1, 1);
  return make_pointed(file.complex, *file.basepoint);
}

std::string write_complex(const PointedComplex& target) {
  const auto& cx = *target.complex;
  std::string out = "basepoint " + cx.vertex_name(target.basepoint) + "\n";
  cx.for_each_maximal([&](const Simplex& s) {
    bool first = true;
    for (VertexId v : s.vertices()) {
      if (!first) out += ' ';
      out += cx.vertex_name(v);
      first = false;
    }
    out += '\n';
  });
  return out;
}

FaceSphere parse_sphere(std::string_view text, const TargetPtr& target) {
  return FaceSphere::from_grid(target, parse_grid(text, "sphere", *target->complex));
}

std::string write_sphere(const FaceSphere& f) {
  return write_grid(f.grid(), "sphere", *f.pointed().complex);
}

GridMap parse_grid_map(std::string_view text, const TargetPtr& target) {
  return GridMap::from_grid(target, parse_grid(text, "grid", *target->complex));
}

std::string write_grid_map(const GridMap& g) {
  return write_grid(g.grid(), "grid", *g.pointed().complex);
}

EdgeLoop parse_loop(std::string_view text, const TargetPtr& target) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError("a loop is a single line of vertex names", 1, 1);
  std::vector<VertexId> vs;
  for (const Token& t : lines.front().tokens) vs.push_back(parse_label(t, lines.front().number, *target->complex));
  return EdgeLoop(target, std::move(vs));
}

std::string write_loop(const EdgeLoop& l) {
  std::string out;
  for (VertexId v : l.vertices()) {
    if (!out.empty()) out += ' ';
    out += l.target()->complex->vertex_name(v);
  }
  return out + "\n";
}

std::string write_certificate(const MoveCertificate& cert) {
  const auto& cx = *cert.start.pointed().complex;
  std::string out = "cert " + sphere_hash(cert.start) + " " + sphere_hash(cert.end) + "\n";
  for (const Move& mv : cert.moves) out += describe(mv, cx) + "\n";
  return out;
}

Move parse_move(std::string_view text, const SimplicialComplex& target, int line_no) {
  auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError("expected one move", line_no, 1);
  const auto& tok = lines.front().tokens;
  const std::string_view word = tok.front().text;
  auto expect = [&](std::size_t count) {
    if (tok.size() != count) throw ParseError("wrong number of fields for '" + std::string(word) + "'", line_no, 1);
  };
  if (word == "rowdup" || word == "rowdel" || word == "coldup" || word == "coldel") {
    expect(2);
    const int k = parse_int(tok[1], line_no);
    if (word == "rowdup") return Move::row_dup(k);
    if (word == "rowdel") return Move::row_del(k);
    if (word == "coldup") return Move::col_dup(k);
    return Move::col_del(k);
  }
  if (word == "spider") {
    expect(4);
    return Move::spider(parse_int(tok[1], line_no), parse_int(tok[2], line_no),
                        parse_label(tok[3], line_no, target));
  }
  throw ParseError("unknown move '" + std::string(word) + "'", line_no, tok.front().column);
}

CertificateFile parse_certificate(std::string_view text, const SimplicialComplex& target) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.size() != 3 || lines.front().tokens[0].text != "cert") {
    throw ParseError("expected 'cert <start-hash> <end-hash>'", lines.empty() ? 1 : lines.front().number, 1);
  }
  CertificateFile out;
  out.start_hash = std::string(lines.front().tokens[1].text);
  out.end_hash = std::string(lines.front().tokens[2].text);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::string joined;
    for (const Token& t : lines[k].tokens) joined += std::string(t.text) + " ";
    out.moves.push_back(parse_move(joined, target, lines[k].number));
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    out += buf;
  }
  return out;
}

std::string sphere_hash(const FaceSphere& f) { return sha256_hex(write_sphere(f)); }

std::string render_ascii(const LabelGrid& grid, const SimplicialComplex& target) {
  std::size_t width = 1;
  for (VertexId v : grid.cells) width = std::max(width, target.vertex_name(v).size());
  std::string out;
  for (int j = grid.n; j >= 0; --j) {
    for (int i = 0; i <= grid.m; ++i) {
      const std::string& name = target.vertex_name(grid.at(i, j));
      out += std::string(width - name.size(), ' ') + name;
      out += i == grid.m ? '\n' : ' ';
    }
  }
  return out;
}

}  // namespace facegroup
