#pragma once

#include <stdexcept>
#include <string>

namespace timt {

enum class ErrorCode {
  Io,          // file unreadable / unwritable
  Parse,       // malformed JSON or JSONL line
  Schema,      // missing or invalid field
  UnknownId,   // record id not present in the dataset
  InvalidArg,  // bad enum name, length mismatch, undefined result
  Degenerate,  // degenerate rollout / aborted training step
  Internal,
};

// Single exception type for the whole library; the C API maps code() onto
// its status enum and last-error string.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string field = {})
      : std::runtime_error(std::move(message)), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

  static Error io(std::string msg) { return {ErrorCode::Io, std::move(msg)}; }
  static Error parse(std::string msg) { return {ErrorCode::Parse, std::move(msg)}; }
  static Error schema(std::string msg, std::string field = {}) {
    return {ErrorCode::Schema, std::move(msg), std::move(field)};
  }
  static Error unknown_id(std::string msg, std::string field = {}) {
    return {ErrorCode::UnknownId, std::move(msg), std::move(field)};
  }
  static Error invalid_arg(std::string msg, std::string field = {}) {
    return {ErrorCode::InvalidArg, std::move(msg), std::move(field)};
  }
  static Error degenerate(std::string msg) { return {ErrorCode::Degenerate, std::move(msg)}; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace timt
