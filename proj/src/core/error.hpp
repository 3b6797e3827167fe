#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohomlen {

// Failure categories. Each maps to a stable machine-readable code and to one
// of the CLI exit statuses.
enum class ErrorKind {
  structural,   // mismatched fields / variable counts
  domain,       // argument outside an operation's domain (zero divisor, zero weight, ...)
  validation,   // sphere data failed validate()
  hypothesis,   // a theorem hypothesis does not hold for the inputs
  unsupported,  // operation not defined for this group (e.g. p = 0 line enumeration)
  search,       // bounded oracle search exhausted or over budget
  usage,        // malformed document or parameters
  internal,
};

std::string_view error_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view code() const noexcept { return error_code(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cohomlen
