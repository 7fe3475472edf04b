#include "torusfill/error.hpp"

namespace torusfill {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSL2: return "NotSL2";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotHyperbolicShape: return "NotHyperbolicShape";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotParabolic: return "NotParabolic";
    case ErrorKind::NotNegativeHyperbolic: return "NotNegativeHyperbolic";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnsupportedLength: return "UnsupportedLength";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace torusfill
