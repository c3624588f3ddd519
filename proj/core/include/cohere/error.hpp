#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohere {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed event, conditional, rational or knowledge-base text.
/// `line` is 0 when the text did not come from a file; `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t column_;
  std::size_t line_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ImpossibleAntecedentError : public Error {
 public:
  using Error::Error;
};

class IncoherentAssessmentError : public Error {
 public:
  using Error::Error;
};

class NotPConsistentError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale bound (atoms, constituents, vertex enumeration) was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohere
