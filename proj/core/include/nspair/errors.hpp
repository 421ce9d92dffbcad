#pragma once

#include <stdexcept>
#include <string>

namespace nspair {

// Broad classification used by callers (the CLI maps these to exit codes):
// input errors are malformed or ill-typed data, math errors are violated
// mathematical preconditions on well-formed data.
enum class ErrorKind {
  Input,
  Math,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Non-square input to an operation that needs a square matrix, mismatched
// sizes, out-of-range indices.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

// Structural requirements on matrix entries: skew-symmetry, zero diagonal,
// symmetry of a bilinear form.
class StructureError : public Error {
public:
  explicit StructureError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

// Text that does not conform to the germ grammar or a malformed data file.
// `position` is a byte offset into the source text when meaningful.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Input, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

// Well-formed polynomial that is not a germ (nonzero constant term).
class NotAGermError : public Error {
public:
  explicit NotAGermError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

// A mathematical precondition failed: the data is well-formed but the
// requested computation is not defined for it.
class MathError : public Error {
public:
  explicit MathError(const std::string& what) : Error(ErrorKind::Math, what) {}
};

// The origin is not an algebraically isolated zero of the gradient.
class NonIsolatedError : public MathError {
public:
  explicit NonIsolatedError(const std::string& what) : MathError(what) {}
};

// Identically zero input where a nonzero map is required.
class DegenerateInputError : public MathError {
public:
  explicit DegenerateInputError(const std::string& what) : MathError(what) {}
};

// The map vanishes somewhere on the chosen circle.
class RadiusTooLargeError : public MathError {
public:
  explicit RadiusTooLargeError(const std::string& what) : MathError(what) {}
};

// Subdivision limit reached without certifying every arc.
class InconclusiveError : public MathError {
public:
  explicit InconclusiveError(const std::string& what) : MathError(what) {}
};

// Supplied invariants contradict each other.
class ContradictionError : public MathError {
public:
  explicit ContradictionError(const std::string& what) : MathError(what) {}
};

// Hypotheses of a construction are not met (wrong parity, non-unimodular
// matrix, wrong symmetry sign).
class HypothesisError : public MathError {
public:
  explicit HypothesisError(const std::string& what) : MathError(what) {}
};

// A required field of a record is unknown.
class InsufficientDataError : public MathError {
public:
  explicit InsufficientDataError(const std::string& what) : MathError(what) {}
};

// Valid data outside the supported fragment of the theory.
class UnsupportedCaseError : public MathError {
public:
  explicit UnsupportedCaseError(const std::string& what) : MathError(what) {}
};

}  // namespace nspair
