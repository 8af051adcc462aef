#pragma once

#include <stdexcept>
#include <string>

namespace lspw {

enum class ErrorCode {
  EmptyWord,
  NotLsp,
  TooShort,
  BadLetter,
  AlphabetTooLarge,
  NoFixedLetter,
  MultipleFixedLetters,
  BadImageShape,
  CyclicParentLinks,
  DisconnectedVertex,
  DomainError,
  NotATriple,
  NotDesubstitutable,
  EmptyDirective,
  BadDepth,
  Breaking,
  ChainMismatch,
  ParseError,
  Internal,
};

const char* errorCodeName(ErrorCode code);

/// Carries a machine-readable code plus a witness fragment (offending letter,
/// factor, tuple, ...) so callers can report precise diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace lspw
