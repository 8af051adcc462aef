#include "lspw/word.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "lspw/suffix_automaton.hpp"

namespace lspw {

Word parseWord(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(parseLetter(c));
  return w;
}

std::set<Word> factors(const Word& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  if (n == 0) {
    out.insert(Word{});
    return out;
  }
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

Word lcp(const Word& u, const Word& v) {
  std::size_t k = 0;
  const std::size_t m = std::min(u.size(), v.size());
  while (k < m && u[k] == v[k]) ++k;
  return u.substr(0, k);
}

Word longestBorder(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorCode::EmptyWord, "the empty word has no border");
  }
  // Prefix function of w; the last entry is the longest proper border length.
  std::vector<std::size_t> pi(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  return w.substr(0, pi.back());
}

Letter extendRightLsp(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorCode::EmptyWord, "cannot extend the empty word");
  }
  if (!isLspFinite(w)) {
    throw Error(ErrorCode::NotLsp, "word is not LSP", w);
  }
  return w[longestBorder(w).size()];
}

Word periodicLspExtension(const Word& w, std::size_t n) {
  if (w.empty()) {
    throw Error(ErrorCode::EmptyWord, "cannot extend the empty word");
  }
  if (!isLspFinite(w)) {
    throw Error(ErrorCode::NotLsp, "word is not LSP", w);
  }
  if (n < w.size()) {
    throw Error(ErrorCode::TooShort,
                "requested length " + std::to_string(n) +
                    " is shorter than the word (" + std::to_string(w.size()) + ")");
  }
  const std::size_t period = w.size() - longestBorder(w).size();
  Word out;
  out.reserve(n);
  while (out.size() < n) {
    out.append(w, 0, std::min(period, n - out.size()));
  }
  return out;
}

namespace detail {
namespace {

// Driver for the quadratic route: equivalence classes of factor start
// positions, refined one letter at a time. `onLevel` receives the sorted
// left-special reports of one length and returns true to keep scanning.
// Left special factors are closed under prefixes, so the scan stops at the
// first length with none.
template <typename OnLevel>
void scanSpecialLevels(const Word& w, OnLevel&& onLevel) {
  const std::size_t n = w.size();
  if (n == 0) return;

  std::vector<int> cls(n);
  int numClasses = 0;
  {
    std::array<int, kMaxAlphabet> id;
    id.fill(-1);
    for (std::size_t i = 0; i < n; ++i) {
      int k = letterIndex(w[i]);
      if (id[k] < 0) id[k] = numClasses++;
      cls[i] = id[k];
    }
  }

  std::vector<LeftSpecialReport> level;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t starts = n - len + 1;
    std::vector<uint8_t> exts(numClasses, 0);
    std::vector<int> repr(numClasses, -1);
    std::vector<uint8_t> atPrefix(numClasses, 0);
    for (std::size_t i = 0; i < starts; ++i) {
      const int c = cls[i];
      if (repr[c] < 0) repr[c] = static_cast<int>(i);
      if (i == 0) {
        atPrefix[c] = 1;
      } else {
        exts[c] |= static_cast<uint8_t>(1u << letterIndex(w[i - 1]));
      }
    }
    level.clear();
    for (int c = 0; c < numClasses; ++c) {
      if (repr[c] < 0) continue;
      const Alphabet e = Alphabet::fromBits(exts[c]);
      if (e.size() >= 2) {
        level.push_back({w.substr(static_cast<std::size_t>(repr[c]), len), e,
                         atPrefix[c] != 0});
      }
    }
    if (level.empty()) return;
    std::sort(level.begin(), level.end(),
              [](const LeftSpecialReport& a, const LeftSpecialReport& b) {
                return a.factor < b.factor;
              });
    if (!onLevel(level)) return;
    if (len == n) return;

    std::unordered_map<uint64_t, int> remap;
    remap.reserve(starts);
    int next = 0;
    for (std::size_t i = 0; i + 1 < starts; ++i) {
      const uint64_t key =
          static_cast<uint64_t>(cls[i]) * kMaxAlphabet + letterIndex(w[i + len]);
      auto [it, inserted] = remap.emplace(key, next);
      if (inserted) ++next;
      cls[i] = it->second;
    }
    numClasses = next;
  }
}

LeftSpecialReport emptyFactorReport(const Word& w) {
  return {Word{}, Alphabet::fromWord(w), true};
}

}  // namespace

std::vector<LeftSpecialReport> leftSpecialFactorsScan(const Word& w) {
  std::vector<LeftSpecialReport> reports;
  if (Alphabet::fromWord(w).size() >= 2) reports.push_back(emptyFactorReport(w));
  scanSpecialLevels(w, [&](const std::vector<LeftSpecialReport>& level) {
    reports.insert(reports.end(), level.begin(), level.end());
    return true;
  });
  return reports;
}

std::optional<Word> nonPrefixWitnessScan(const Word& w) {
  std::optional<Word> witness;
  scanSpecialLevels(w, [&](const std::vector<LeftSpecialReport>& level) {
    for (const LeftSpecialReport& r : level) {
      if (!r.isPrefix) {
        witness = r.factor;
        return false;
      }
    }
    return true;
  });
  return witness;
}

namespace {

// In the suffix automaton of the reversed word, a state with two or more
// outgoing transitions is a class of right special factors of the reversal,
// i.e. of left special factors of w; it is a class of prefixes of w exactly
// when the state is terminal.
struct ReversedIndex {
  Word rev;
  SuffixAutomaton sa;

  explicit ReversedIndex(const Word& w)
      : rev(w.rbegin(), w.rend()), sa(rev) {}

  Word factorOf(const SuffixAutomaton::State& s, std::size_t len) const {
    const std::size_t end = static_cast<std::size_t>(s.firstEnd);
    Word x = rev.substr(end - len, len);
    std::reverse(x.begin(), x.end());
    return x;
  }
};

int outDegree(const SuffixAutomaton::State& s) {
  int d = 0;
  for (int32_t t : s.next) d += (t >= 0);
  return d;
}

}  // namespace

std::vector<LeftSpecialReport> leftSpecialFactorsIndexed(const Word& w) {
  const ReversedIndex idx(w);
  std::vector<LeftSpecialReport> reports;
  for (const auto& s : idx.sa.states()) {
    if (outDegree(s) < 2) continue;
    Alphabet exts;
    for (int i = 0; i < kMaxAlphabet; ++i) {
      if (s.next[i] >= 0) exts.add(letterAt(i));
    }
    const int minLen = (s.link >= 0 ? idx.sa.states()[s.link].len : -1) + 1;
    for (int len = minLen; len <= s.len; ++len) {
      reports.push_back(
          {idx.factorOf(s, static_cast<std::size_t>(len)), exts, s.terminal});
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const LeftSpecialReport& a, const LeftSpecialReport& b) {
              if (a.factor.size() != b.factor.size()) {
                return a.factor.size() < b.factor.size();
              }
              return a.factor < b.factor;
            });
  return reports;
}

std::optional<Word> nonPrefixWitnessIndexed(const Word& w) {
  const ReversedIndex idx(w);
  std::optional<Word> witness;
  for (const auto& s : idx.sa.states()) {
    if (s.terminal || outDegree(s) < 2) continue;
    const std::size_t len =
        static_cast<std::size_t>((s.link >= 0 ? idx.sa.states()[s.link].len : -1) + 1);
    Word cand = idx.factorOf(s, len);
    if (!witness || len < witness->size() ||
        (len == witness->size() && cand < *witness)) {
      witness = std::move(cand);
    }
  }
  return witness;
}

}  // namespace detail

std::vector<LeftSpecialReport> leftSpecialFactors(const Word& w) {
  if (w.size() > detail::kIndexedLspThreshold) {
    return detail::leftSpecialFactorsIndexed(w);
  }
  return detail::leftSpecialFactorsScan(w);
}

std::optional<Word> shortestNonPrefixLeftSpecial(const Word& w) {
  if (w.size() > detail::kIndexedLspThreshold) {
    return detail::nonPrefixWitnessIndexed(w);
  }
  return detail::nonPrefixWitnessScan(w);
}

bool isLspFinite(const Word& w) {
  return !shortestNonPrefixLeftSpecial(w).has_value();
}

}  // namespace lspw
