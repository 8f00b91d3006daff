#include "semired/error.hpp"

namespace semired {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSemigroup: return "InvalidSemigroup";
    case ErrorKind::InequalityWithoutOrder: return "InequalityWithoutOrder";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::ElementNotWordImage: return "ElementNotWordImage";
    case ErrorKind::UnboundLetter: return "UnboundLetter";
    case ErrorKind::NoValidExponent: return "NoValidExponent";
    case ErrorKind::UnsupportedPrimePower: return "UnsupportedPrimePower";
    case ErrorKind::DepthCap: return "DepthCap";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::SubwordObstruction: return "SubwordObstruction";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace semired
