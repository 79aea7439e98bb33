#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adelic {

/// Coarse error categories; the CLI maps them onto exit codes.
enum class ErrorKind {
  domain,
  indeterminate,
  precision,
  window_unstable,
  wild_point,
  unsupported_singularity,
  syntax,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

/// A leading term could not be certified on the available window.
struct IndeterminateError : Error {
  explicit IndeterminateError(const std::string& what)
      : Error(ErrorKind::indeterminate, "indeterminate-leading-term: " + what) {}
};

struct PrecisionError : Error {
  explicit PrecisionError(const std::string& what) : Error(ErrorKind::precision, what) {}
};

struct WindowUnstableError : Error {
  explicit WindowUnstableError(const std::string& what)
      : Error(ErrorKind::window_unstable, "window-unstable: " + what) {}
};

struct WildPointError : Error {
  explicit WildPointError(const std::string& what)
      : Error(ErrorKind::wild_point, "wild-point-unsupported: " + what) {}
};

struct UnsupportedSingularityError : Error {
  explicit UnsupportedSingularityError(const std::string& what)
      : Error(ErrorKind::unsupported_singularity, "unsupported-singularity: " + what) {}
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::syntax, "syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

} // namespace adelic
