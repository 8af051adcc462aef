#include "lspw/suffix_automaton.hpp"

#include <string>

namespace lspw {

int SuffixAutomaton::addState(int len, int link, int firstEnd) {
  State s;
  s.len = len;
  s.link = link;
  s.next.fill(-1);
  s.firstEnd = firstEnd;
  states_.push_back(s);
  return static_cast<int>(states_.size()) - 1;
}

SuffixAutomaton::SuffixAutomaton(const Word& w) {
  states_.reserve(2 * w.size() + 2);
  addState(0, -1, 0);
  int last = 0;
  int pos = 0;
  for (char ch : w) {
    const int c = letterIndex(parseLetter(ch));
    ++pos;
    const int cur = addState(states_[last].len + 1, -1, pos);
    int p = last;
    while (p != -1 && states_[p].next[c] == -1) {
      states_[p].next[c] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const int q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        // Split the class: the clone keeps q's transitions and represents the
        // short factors; its end positions include q's, so q's sample stays
        // valid.
        const int clone =
            addState(states_[p].len + 1, states_[q].link, states_[q].firstEnd);
        states_[clone].next = states_[q].next;
        while (p != -1 && states_[p].next[c] == q) {
          states_[p].next[c] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last = cur;
  }
  for (int t = last; t != -1; t = states_[t].link) states_[t].terminal = true;
}

std::size_t SuffixAutomaton::transitionCount() const {
  std::size_t total = 0;
  for (const State& s : states_) {
    for (int32_t t : s.next) total += (t >= 0);
  }
  return total;
}

int SuffixAutomaton::stateOf(const Word& x) const {
  int s = 0;
  for (char ch : x) {
    s = states_[static_cast<std::size_t>(s)].next[letterIndex(parseLetter(ch))];
    if (s < 0) return -1;
  }
  return s;
}

bool SuffixAutomaton::containsFactor(const Word& x) const {
  return stateOf(x) >= 0;
}

bool SuffixAutomaton::acceptsSuffix(const Word& x) const {
  const int s = stateOf(x);
  return s >= 0 && states_[static_cast<std::size_t>(s)].terminal;
}

std::string SuffixAutomaton::dumpEdges() const {
  std::string out;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (int c = 0; c < kMaxAlphabet; ++c) {
      if (states_[i].next[c] >= 0) {
        out += std::to_string(i);
        out += ' ';
        out += letterAt(c);
        out += ' ';
        out += std::to_string(states_[i].next[c]);
        out += '\n';
      }
    }
  }
  out += "terminal:";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].terminal) {
      out += ' ';
      out += std::to_string(i);
    }
  }
  out += '\n';
  return out;
}

SuffixAutomaton buildSuffixAutomaton(const Word& w) { return SuffixAutomaton(w); }

bool isLspViaSa(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorCode::EmptyWord, "the minimality criterion needs a non-empty word");
  }
  return SuffixAutomaton(w).stateCount() == w.size() + 1;
}

}  // namespace lspw
