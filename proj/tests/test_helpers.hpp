#pragma once

// Test-side oracles, deliberately built a different way than the library:
// pattern membership is decided by constructing the candidate factorization
// and comparing words, never by the library's period scan.

#include <cstdint>
#include <random>
#include <vector>

#include "lexleast/patterns.hpp"
#include "lexleast/words.hpp"

namespace oracle {

using lexleast::Letter;
using lexleast::Pattern;
using lexleast::PatternKind;
using lexleast::Word;

// Is the whole word f an element of the pattern set?
inline bool is_member(const Word& f, const Pattern& p) {
  using u128 = unsigned __int128;
  const std::size_t len = f.size();
  switch (p.kind()) {
    case PatternKind::Square:
    case PatternKind::IntegerPower: {
      const unsigned n = p.power();
      if (len == 0 || len % n != 0) return false;
      const Word x = prefix(f, len / n);
      Word built;
      for (unsigned i = 0; i < n; ++i) built.append(x);
      return built == f;
    }
    case PatternKind::Overlap:
    case PatternKind::IntegerPowerPlus: {
      const unsigned n = p.power();
      if (len < 2 || (len - 1) % n != 0) return false;
      const Word x = prefix(f, (len - 1) / n);
      if (x.empty()) return false;
      Word built;
      for (unsigned i = 0; i < n; ++i) built.append(x);
      built.push_back(x[0]);
      return built == f;
    }
    case PatternKind::FractionalPower: {
      for (std::size_t q = 1; q < len; ++q) {
        bool periodic = true;
        for (std::size_t i = 0; i + q < len && periodic; ++i)
          if (f[i] != f[i + q]) periodic = false;
        if (!periodic) continue;
        const u128 got = static_cast<u128>(p.den()) * len;
        const u128 goal = static_cast<u128>(p.num()) * q;
        if (p.strict() ? got > goal : got >= goal) return true;
      }
      return false;
    }
  }
  return false;
}

inline bool has_suffix_member(const Word& w, const Pattern& p) {
  for (std::size_t n = 1; n <= w.size(); ++n)
    if (is_member(suffix(w, n), p)) return true;
  return false;
}

inline bool has_factor_member(const Word& w, const Pattern& p) {
  for (std::size_t start = 0; start < w.size(); ++start)
    for (std::size_t len = 1; start + len <= w.size(); ++len) {
      Word f(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(start),
                                 w.begin() + static_cast<std::ptrdiff_t>(start + len)));
      if (is_member(f, p)) return true;
    }
  return false;
}

// All words of exactly the given length over {0..alpha_max}.
template <typename F>
void for_each_word(Letter alpha_max, std::size_t len, F&& f) {
  std::vector<Letter> digits(len, 0);
  for (;;) {
    f(Word(digits));
    std::size_t i = 0;
    while (i < len && digits[i] == alpha_max) digits[i++] = 0;
    if (i == len) return;
    ++digits[i];
  }
}

// Every pattern-free word over {0..alpha_max} of length <= max_len (including
// the empty word), by pruned depth-first search.
template <typename F>
void for_each_pattern_free(const Pattern& p, Letter alpha_max, std::size_t max_len, F&& f) {
  Word w;
  auto rec = [&](auto&& self) -> void {
    f(w);
    if (w.size() == max_len) return;
    for (Letter c = 0; c <= alpha_max; ++c) {
      w.push_back(c);
      if (!has_suffix_match(w, p)) self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

inline Word random_word(std::mt19937& rng, std::size_t len, Letter alpha_max) {
  std::uniform_int_distribution<Letter> dist(0, alpha_max);
  std::vector<Letter> v(len);
  for (auto& c : v) c = dist(rng);
  return Word(std::move(v));
}

// Reference greedy loop built directly on the public suffix scan.
inline Word naive_greedy(const Pattern& p, std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    for (Letter c = 0;; ++c) {
      w.push_back(c);
      if (!has_suffix_match(w, p)) break;
      w.pop_back();
    }
  }
  return w;
}

}  // namespace oracle
