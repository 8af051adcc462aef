#include "lspw/error.hpp"

namespace lspw {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotLsp: return "NotLsp";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BadLetter: return "BadLetter";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::NoFixedLetter: return "NoFixedLetter";
    case ErrorCode::MultipleFixedLetters: return "MultipleFixedLetters";
    case ErrorCode::BadImageShape: return "BadImageShape";
    case ErrorCode::CyclicParentLinks: return "CyclicParentLinks";
    case ErrorCode::DisconnectedVertex: return "DisconnectedVertex";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotATriple: return "NotATriple";
    case ErrorCode::NotDesubstitutable: return "NotDesubstitutable";
    case ErrorCode::EmptyDirective: return "EmptyDirective";
    case ErrorCode::BadDepth: return "BadDepth";
    case ErrorCode::Breaking: return "Breaking";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string detail)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace lspw
