#pragma once

#include <stdexcept>
#include <string>

namespace acrox {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text had no content at all.
class EmptyDocumentError : public Error {
 public:
  explicit EmptyDocumentError(const std::string& source_id)
      : Error("empty document: " + source_id) {}
};

// An LLM reply could not be read as a JSON object; the request may be resent.
class RetryableParseError : public Error {
 public:
  using Error::Error;
};

// A transport could not deliver a prompt or obtain a reply.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}
  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

}  // namespace acrox
