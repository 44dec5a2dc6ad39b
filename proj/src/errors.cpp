#include "gimel/errors.hpp"

namespace gimel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "io";
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::ContextMismatch: return "context-mismatch";
    case ErrorKind::UndefinedDegree: return "undefined-degree";
    case ErrorKind::DegreeMismatch: return "degree-mismatch";
    case ErrorKind::InvalidRoot: return "invalid-root";
    case ErrorKind::UnsupportedInput: return "unsupported-input";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Nondegeneracy: return "fixture-nondegeneracy";
    case ErrorKind::Decomposition: return "decomposition-failure";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace gimel
