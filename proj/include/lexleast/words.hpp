#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lexleast {

// Alphabet symbol. Letters stay machine-sized even when positions do not:
// letter v first enters the generated words at a position that grows like
// 2^v v!, so any prefix a machine can hold uses only small letter values.
using Letter = std::uint32_t;

// Exact nonnegative integer for positions in infinite words and for table
// values; these routinely exceed any fixed machine width.
using Index = mpz_class;

// Finite word over the alphabet of natural numbers, used as an immutable
// value: operations return new words. letter_at() is 1-based (the first
// letter is w.letter_at(1)); operator[] is raw 0-based storage access.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter letter_at(std::size_t pos) const;  // 1-based, bounds-checked

  void push_back(Letter c) { letters_.push_back(c); }
  void pop_back() { letters_.pop_back(); }
  Letter back() const { return letters_.back(); }
  void append(const Word& w);
  void reserve(std::size_t n) { letters_.reserve(n); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Five-way lexicographic comparison: proper prefixes are reported as such
// instead of being collapsed into Less/Greater.
enum class LexOrder { Less, Equal, Greater, XPrefixOfY, YPrefixOfX };

Word operator+(const Word& x, const Word& y);
Word operator+(const Word& x, Letter c);

// Moves the last m letters (taken mod |w|) to the front; the inverse of the
// left cyclic shift applied m times. Throws std::domain_error on the empty
// word.
Word rotate_right(const Word& w, std::size_t m);
Word rotate_right(const Word& w, const Index& m);

Word reverse(const Word& w);

LexOrder lex_compare(const Word& x, const Word& y);

Index count_letter(const Word& w, Letter c);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
bool is_factor(const Word& f, const Word& w);
// First occurrence of f in w, 1-based; empty f matches at 1.
std::optional<std::size_t> find_factor(const Word& f, const Word& w);

Word prefix(const Word& w, std::size_t n);
Word suffix(const Word& w, std::size_t n);
// y^{-1} w and w y^{-1}: removal of a named prefix/suffix. Throws
// std::invalid_argument when y is not a prefix (resp. suffix) of w.
Word remove_prefix(const Word& y, const Word& w);
Word remove_suffix(const Word& w, const Word& y);

bool is_palindrome(const Word& w);

// Canonical text form: a plain digit string when every letter is <= 9,
// otherwise comma-separated decimal letters.
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace lexleast
