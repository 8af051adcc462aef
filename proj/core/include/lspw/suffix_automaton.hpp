#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lspw/word.hpp"

namespace lspw {

/// Minimal deterministic automaton recognizing the suffixes of a finite word,
/// built online. States are end-position equivalence classes of factors.
class SuffixAutomaton {
 public:
  struct State {
    int len = 0;        // longest factor in the class
    int link = -1;      // suffix link
    std::array<int32_t, kMaxAlphabet> next;
    bool terminal = false;  // some factor of the class is a suffix
    int firstEnd = 0;       // end position (1-based) of the first occurrence
  };

  explicit SuffixAutomaton(const Word& w);

  std::size_t stateCount() const { return states_.size(); }
  std::size_t transitionCount() const;
  int initial() const { return 0; }
  const std::vector<State>& states() const { return states_; }

  /// Walks the transitions; -1 when x is not a factor.
  int stateOf(const Word& x) const;
  bool containsFactor(const Word& x) const;
  bool acceptsSuffix(const Word& x) const;

  /// One line per transition, "src letter dst", then one "terminal ..." line.
  std::string dumpEdges() const;

 private:
  int addState(int len, int link, int firstEnd);

  std::vector<State> states_;
};

SuffixAutomaton buildSuffixAutomaton(const Word& w);

/// Fici's criterion: a non-empty word is LSP iff its suffix automaton has the
/// minimal possible number of states, |w| + 1.
bool isLspViaSa(const Word& w);

}  // namespace lspw
