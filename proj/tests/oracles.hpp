#pragma once

// Naive reference implementations used to freeze expected values. They share
// no code with the library paths they check: everything here is a direct
// reading of the definitions, quadratic or worse.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lspw/alphabet.hpp"

namespace lspw::testing {

inline std::set<std::string> bruteFactors(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

// factor -> set of letters occurring immediately to its left.
inline std::map<std::string, std::set<char>> bruteLeftExtensions(
    const std::string& w) {
  std::map<std::string, std::set<char>> ext;
  for (std::size_t len = 0; len <= w.size(); ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      auto& s = ext[w.substr(i, len)];
      if (i > 0) s.insert(w[i - 1]);
    }
  }
  return ext;
}

struct BruteSpecial {
  std::string factor;
  std::set<char> extensions;
  bool isPrefix;
};

inline std::vector<BruteSpecial> bruteLeftSpecial(const std::string& w) {
  std::vector<BruteSpecial> out;
  auto ext = bruteLeftExtensions(w);
  for (const auto& [u, s] : ext) {
    if (s.size() >= 2) {
      out.push_back({u, s, w.compare(0, u.size(), u) == 0});
    }
  }
  std::sort(out.begin(), out.end(), [](const BruteSpecial& a, const BruteSpecial& b) {
    if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
    return a.factor < b.factor;
  });
  return out;
}

inline bool bruteIsLsp(const std::string& w) {
  for (const auto& r : bruteLeftSpecial(w)) {
    if (!r.isPrefix) return false;
  }
  return true;
}

inline std::string bruteLongestBorder(const std::string& w) {
  for (std::size_t len = w.size() - 1; len > 0; --len) {
    if (w.compare(0, len, w, w.size() - len, len) == 0) return w.substr(0, len);
  }
  return {};
}

inline std::set<std::string> bruteSuffixes(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t i = 0; i <= w.size(); ++i) out.insert(w.substr(i));
  return out;
}

// All words over `a` of length 1..maxLen, in length-then-lex order.
template <typename Fn>
void forEachWord(const Alphabet& a, std::size_t maxLen, Fn&& fn) {
  const std::vector<Letter> letters = a.letters();
  std::vector<std::size_t> idx;
  for (std::size_t len = 1; len <= maxLen; ++len) {
    idx.assign(len, 0);
    while (true) {
      std::string w(len, 'a');
      for (std::size_t i = 0; i < len; ++i) w[i] = letters[idx[i]];
      fn(w);
      std::size_t pos = len;
      while (pos > 0 && idx[pos - 1] + 1 == letters.size()) {
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
}

}  // namespace lspw::testing
