#include "lspw/alphabet.hpp"

#include <bit>

namespace lspw {

Letter parseLetter(char c) {
  if (!isValidLetter(c)) {
    throw Error(ErrorCode::BadLetter,
                std::string("letter '") + c + "' outside the supported range a.." +
                    kLastLetter,
                std::string(1, c));
  }
  return c;
}

Alphabet Alphabet::fromLetters(std::string_view letters) {
  Alphabet a;
  for (char c : letters) a.add(parseLetter(c));
  return a;
}

Alphabet Alphabet::fromWord(std::string_view word) { return fromLetters(word); }

Alphabet Alphabet::firstN(int n) {
  if (n < 0 || n > kMaxAlphabet) {
    throw Error(ErrorCode::AlphabetTooLarge,
                "alphabet size " + std::to_string(n) + " not in 0.." +
                    std::to_string(kMaxAlphabet));
  }
  return fromBits(static_cast<uint8_t>((1u << n) - 1u));
}

Alphabet& Alphabet::add(Letter c) {
  bits_ |= static_cast<uint8_t>(1u << letterIndex(parseLetter(c)));
  return *this;
}

int Alphabet::size() const { return std::popcount(bits_); }

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (int i = 0; i < kMaxAlphabet; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(letterAt(i));
  }
  return out;
}

std::string Alphabet::str() const {
  std::string out;
  for (Letter c : letters()) out.push_back(c);
  return out;
}

}  // namespace lspw
