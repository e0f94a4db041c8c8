#ifndef GELATO_ERRORS_HPP
#define GELATO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gelato {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A label string that matches no id, short code, prompt name, or alias.
class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& text)
      : Error("unknown label: \"" + text + "\""), text_(text) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Malformed row in a split file; line numbers are 1-based.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A tag layer whose length differs from the document's token count.
class LengthMismatchError : public Error {
 public:
  explicit LengthMismatchError(const std::string& doc_id)
      : Error("tag layer length does not match token count in document " + doc_id),
        doc_id_(doc_id) {}
  const std::string& doc_id() const { return doc_id_; }

 private:
  std::string doc_id_;
};

// Gold/pred document pairs whose ids or token counts do not line up.
class AlignmentError : public Error {
 public:
  explicit AlignmentError(const std::string& doc_id)
      : Error("gold and predicted documents are not aligned at " + doc_id),
        doc_id_(doc_id) {}
  const std::string& doc_id() const { return doc_id_; }

 private:
  std::string doc_id_;
};

class OverlapError : public Error {
 public:
  explicit OverlapError(const std::string& what) : Error(what) {}
};

class OutOfRangeError : public Error {
 public:
  explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

// A tag sequence that fails validation and was not repaired.
class InvalidSequenceError : public Error {
 public:
  explicit InvalidSequenceError(const std::string& what) : Error(what) {}
};

// Non-2xx HTTP response, or status 0 for transport-level failures.
class HttpError : public Error {
 public:
  HttpError(int status, const std::string& detail)
      : Error("HTTP " + std::to_string(status) + ": " + detail), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// The bill-text endpoint returned no usable text version.
class MissingTextVersionError : public Error {
 public:
  explicit MissingTextVersionError(const std::string& bill)
      : Error("no text version available for " + bill) {}
};

// Bad configuration (missing key, unusable URL, unwritable path).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace gelato

#endif  // GELATO_ERRORS_HPP
