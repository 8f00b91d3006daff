#ifndef SEMIRED_ERROR_HPP_
#define SEMIRED_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semired {

enum class ErrorKind {
  InvalidSemigroup,
  InequalityWithoutOrder,
  SizeTooLarge,
  ParseError,
  EmptyAlphabet,
  AlphabetMismatch,
  ElementNotWordImage,
  UnboundLetter,
  NoValidExponent,
  UnsupportedPrimePower,
  DepthCap,
  Unreachable,
  NotASolution,
  SubwordObstruction,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI's
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace semired

#endif  // SEMIRED_ERROR_HPP_
