#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace empathy {

// Malformed corpus/config syntax. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that violates a data invariant.
class ValidationError : public std::runtime_error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  ValidationError(const std::string& reason, std::string document_id = {},
                  std::size_t annotation_index = kNoIndex)
      : std::runtime_error(format(reason, document_id, annotation_index)),
        reason_(reason),
        document_id_(std::move(document_id)),
        annotation_index_(annotation_index) {}

  const std::string& reason() const noexcept { return reason_; }
  const std::string& document_id() const noexcept { return document_id_; }
  std::size_t annotation_index() const noexcept { return annotation_index_; }

 private:
  static std::string format(const std::string& reason, const std::string& doc, std::size_t index) {
    std::string out = reason;
    if (!doc.empty()) out += " (document '" + doc + "'";
    if (!doc.empty() && index != kNoIndex) out += ", annotation " + std::to_string(index);
    if (!doc.empty()) out += ")";
    return out;
  }

  std::string reason_;
  std::string document_id_;
  std::size_t annotation_index_;
};

// A metric whose value is mathematically undefined for the given input.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace empathy
