#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lspw/error.hpp"

namespace lspw {

using Letter = char;

/// Letters are drawn from a fixed range of at most eight lowercase letters,
/// ordered alphabetically.
inline constexpr int kMaxAlphabet = 8;
inline constexpr Letter kFirstLetter = 'a';
inline constexpr Letter kLastLetter = 'a' + kMaxAlphabet - 1;

constexpr bool isValidLetter(char c) {
  return c >= kFirstLetter && c <= kLastLetter;
}
constexpr int letterIndex(Letter c) { return c - kFirstLetter; }
constexpr Letter letterAt(int i) { return static_cast<Letter>(kFirstLetter + i); }

/// Checks that `c` lies in the supported letter range.
Letter parseLetter(char c);

/// A set of letters, stored as a bitmask over the eight-letter range.
class Alphabet {
 public:
  constexpr Alphabet() = default;

  static Alphabet fromLetters(std::string_view letters);  // validates letters
  static Alphabet fromWord(std::string_view word);         // same, reads a word
  static Alphabet firstN(int n);                           // {'a', ..., n-th}
  static constexpr Alphabet fromBits(uint8_t bits) {
    Alphabet a;
    a.bits_ = bits;
    return a;
  }

  constexpr bool contains(Letter c) const {
    return isValidLetter(c) && (bits_ >> letterIndex(c)) & 1u;
  }
  Alphabet& add(Letter c);
  int size() const;
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subsetOf(Alphabet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr uint8_t bits() const { return bits_; }

  constexpr bool operator==(const Alphabet&) const = default;
  constexpr bool operator<(const Alphabet& other) const {
    return bits_ < other.bits_;
  }

  /// Letters in increasing order.
  std::vector<Letter> letters() const;
  std::string str() const;

 private:
  uint8_t bits_ = 0;
};

}  // namespace lspw
