#pragma once

#include <exception>
#include <string>

namespace tcd {

// Library-wide error type. `code` is a stable machine-readable identifier,
// `witness` is a short human-readable description of the offending object
// (vertex id, label, point, ...) used in CLI error reports.
class Error : public std::exception {
 public:
  Error(std::string code, std::string message, std::string witness = "")
      : code_(std::move(code)),
        message_(std::move(message)),
        witness_(std::move(witness)),
        what_(code_ + ": " + message_ + (witness_.empty() ? "" : " [" + witness_ + "]")) {}

  const char* what() const noexcept override { return what_.c_str(); }
  const std::string& code() const { return code_; }
  const std::string& message() const { return message_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string code_, message_, witness_, what_;
};

}  // namespace tcd
