#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lspw/alphabet.hpp"

namespace lspw {

/// Finite words are plain strings over the supported letters; the empty
/// string is the empty word. All operations treat words as immutable values.
using Word = std::string;

/// Validates every letter and returns the word.
Word parseWord(std::string_view text);

inline Alphabet alph(const Word& w) { return Alphabet::fromWord(w); }

/// A factor occurring with at least two distinct letters to its left.
struct LeftSpecialReport {
  Word factor;
  Alphabet extensions;  // the distinct preceding letters, >= 2 of them
  bool isPrefix = false;

  bool operator==(const LeftSpecialReport&) const = default;
};

/// The distinct factors of `w` of length `n` (empty set when n > |w|).
std::set<Word> factors(const Word& w, std::size_t n);

/// All left special factors of `w`, sorted by (length, lexicographic).
/// The empty word is reported whenever `w` uses at least two letters.
std::vector<LeftSpecialReport> leftSpecialFactors(const Word& w);

/// True iff every left special factor of `w` is a prefix of `w`.
bool isLspFinite(const Word& w);

/// The shortest left special factor that is not a prefix, if any
/// (ties broken lexicographically). Empty optional iff the word is LSP.
std::optional<Word> shortestNonPrefixLeftSpecial(const Word& w);

/// Longest proper border of a non-empty word (possibly the empty word).
Word longestBorder(const Word& w);

/// For a non-empty LSP word w with longest border u, the letter following u
/// in w; appending it keeps the word LSP.
Letter extendRightLsp(const Word& w);

/// Writes w = p u with u the longest border and returns the length-n prefix
/// of p p p ...; the result is LSP and has w as a prefix. Requires n >= |w|.
Word periodicLspExtension(const Word& w, std::size_t n);

/// Longest common prefix.
Word lcp(const Word& u, const Word& v);

namespace detail {

// Word length above which left-special analysis switches from the quadratic
// scan to the suffix-automaton index.
inline constexpr std::size_t kIndexedLspThreshold = 10000;

std::vector<LeftSpecialReport> leftSpecialFactorsScan(const Word& w);
std::vector<LeftSpecialReport> leftSpecialFactorsIndexed(const Word& w);
std::optional<Word> nonPrefixWitnessScan(const Word& w);
std::optional<Word> nonPrefixWitnessIndexed(const Word& w);

}  // namespace detail

}  // namespace lspw
