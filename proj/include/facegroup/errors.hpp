#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace facegroup {

enum class ErrorKind {
  EmptyComplex,
  UnknownVertex,
  MissingVertex,
  ShapeMismatch,
  IndexError,
  BoundaryViolation,
  SimplexViolation,
  NotSimplicial,
  TargetMismatch,
  PatchBoundaryMismatch,
  IllegalMove,
  DecompositionFailed,
  NonOrientableTarget,
  NotSpiderPair,
  ReplayFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Grid cell or vertex coordinate attached to an error, (column i, row j).
struct Cell {
  int i = 0;
  int j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<Cell> cell = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Cell>& cell() const noexcept { return cell_; }

 private:
  ErrorKind kind_;
  std::optional<Cell> cell_;
};

/// Raised by the text readers; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace facegroup
