#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace matryoshka {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

/// A search or closure exceeded its configured bound.
class SearchBoundError : public Error {
 public:
  using Error::Error;
};

class IncompatibleEmbeddingError : public Error {
 public:
  using Error::Error;
};

class IncompatiblePresentationError : public IncompatibleEmbeddingError {
 public:
  using IncompatibleEmbeddingError::IncompatibleEmbeddingError;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class FactorError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Reads a positive integer from the environment, falling back to `fallback`.
inline std::size_t env_bound(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      const long long n = std::stoll(v);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

}  // namespace matryoshka
