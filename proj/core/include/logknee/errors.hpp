#pragma once

#include <stdexcept>
#include <string>

namespace logknee {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- event log ingestion ---

class MalformedXmlError : public Error {
 public:
  using Error::Error;
};

class MissingActivityError : public Error {
 public:
  using Error::Error;
};

class MissingTimestampError : public Error {
 public:
  using Error::Error;
};

class DuplicateCaseIdError : public Error {
 public:
  using Error::Error;
};

// --- prefixing ---

class KOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// --- replay ---

class UnknownActivityError : public Error {
 public:
  using Error::Error;
};

// --- chat backends and judging ---

class BackendUnavailableError : public Error {
 public:
  using Error::Error;
};

class EmptyCompletionError : public Error {
 public:
  using Error::Error;
};

class UnparseableVerdictError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeScoreError : public Error {
 public:
  using Error::Error;
};

// --- persistence ---

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace logknee
