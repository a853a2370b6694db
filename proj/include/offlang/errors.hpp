#pragma once

#include <stdexcept>
#include <string>

namespace offlang {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Corpus file violates the five-column tab-separated layout.
struct MalformedRowError : Error {
  MalformedRowError(std::size_t line_no, const std::string& detail)
      : Error("malformed row at line " + std::to_string(line_no) + ": " + detail),
        line(line_no) {}
  std::size_t line;
};

// Label outside the closed set allowed for its column.
struct UnknownLabelError : Error {
  using Error::Error;
};

// Labels contradict the task hierarchy (e.g. NOT with a level-B label).
struct HierarchyViolationError : Error {
  using Error::Error;
};

struct EmptyVocabularyError : Error {
  using Error::Error;
};

struct EmptyTrainingSetError : Error {
  using Error::Error;
};

struct NonBinaryLabelsError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(int expected, int got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

struct TooFewSamplesError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

// A level of the cascade would be trained on zero rows.
struct EmptyLevelError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ModelLoadError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace offlang
