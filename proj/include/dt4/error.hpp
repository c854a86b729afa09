#pragma once

#include <stdexcept>
#include <string>

namespace dt4 {

enum class ErrorKind {
  NotSymmetric,
  ResourceLimit,
  BoxInstability,
  Unpairable,
  ZeroDimension,
  NotApplicable,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dt4
