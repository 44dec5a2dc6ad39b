#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gimel {

enum class ErrorKind {
  Io,
  MalformedInput,
  ContextMismatch,
  UndefinedDegree,
  DegreeMismatch,
  InvalidRoot,
  UnsupportedInput,
  Validation,
  Nondegeneracy,
  Decomposition,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gimel
