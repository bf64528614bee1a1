#include "facegroup/errors.hpp"

namespace facegroup {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MissingVertex: return "MissingVertex";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::BoundaryViolation: return "BoundaryViolation";
    case ErrorKind::SimplexViolation: return "SimplexViolation";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::PatchBoundaryMismatch: return "PatchBoundaryMismatch";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NonOrientableTarget: return "NonOrientableTarget";
    case ErrorKind::NotSpiderPair: return "NotSpiderPair";
    case ErrorKind::ReplayFailed: return "ReplayFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, const std::optional<Cell>& cell) {
  std::string out(to_string(kind));
  if (cell) {
    out += " at (" + std::to_string(cell->i) + "," + std::to_string(cell->j) + ")";
  }
  if (!message.empty()) {
    out += ": " + message;
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<Cell> cell)
    : std::runtime_error(decorate(kind, message, cell)), kind_(kind), cell_(cell) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace facegroup
