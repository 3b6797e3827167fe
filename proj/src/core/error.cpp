#include "core/error.hpp"

namespace cohomlen {

std::string_view error_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::structural: return "E_STRUCTURAL";
    case ErrorKind::domain: return "E_DOMAIN";
    case ErrorKind::validation: return "E_VALIDATION";
    case ErrorKind::hypothesis: return "E_HYPOTHESIS";
    case ErrorKind::unsupported: return "E_UNSUPPORTED";
    case ErrorKind::search: return "E_SEARCH";
    case ErrorKind::usage: return "E_USAGE";
    case ErrorKind::internal: return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

}  // namespace cohomlen
