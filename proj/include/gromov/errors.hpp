#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gromov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DuplicateIndex : public Error {
 public:
  using Error::Error;
};

class DegenerateSpace : public Error {
 public:
  using Error::Error;
};

class NegativeDelta : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Raised when a path metric is requested on a graph with several components.
class Disconnected : public Error {
 public:
  Disconnected(const std::string& what, std::vector<std::vector<std::size_t>> components)
      : Error(what), components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const { return components_; }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonPositiveResolution : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class NotConvex : public Error {
 public:
  using Error::Error;
};

/// Realization was asked for a metric whose four-point delta exceeds the gate.
class NotZeroHyperbolic : public Error {
 public:
  NotZeroHyperbolic(const std::string& what, double delta, std::array<std::size_t, 4> witness)
      : Error(what), delta_(delta), witness_(witness) {}

  double delta() const { return delta_; }
  const std::array<std::size_t, 4>& witness() const { return witness_; }

 private:
  double delta_;
  std::array<std::size_t, 4> witness_;
};

class NegativeEdge : public Error {
 public:
  using Error::Error;
};

class MissingLabel : public Error {
 public:
  using Error::Error;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class PointOutsideDisk : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class BadSize : public Error {
 public:
  using Error::Error;
};

class NonPositiveLength : public Error {
 public:
  using Error::Error;
};

/// Text input did not match the expected grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gromov
