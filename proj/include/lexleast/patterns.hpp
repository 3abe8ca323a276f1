#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lexleast/words.hpp"

namespace lexleast {

enum class PatternKind { Square, Overlap, IntegerPower, IntegerPowerPlus, FractionalPower };

// A repetition family: squares xx, overlaps cxcxc, integer n-th powers x^n,
// (n+)-powers x^n c (c the first letter of x), and fractional powers (a word
// of length L with period q and exponent L/q at least num/den, strictly so
// when `strict` is set). Square and Overlap behave exactly like
// IntegerPower(2) and IntegerPowerPlus(2).
class Pattern {
 public:
  static Pattern square() { return Pattern(PatternKind::Square, 2, 0, 0, false); }
  static Pattern overlap() { return Pattern(PatternKind::Overlap, 2, 0, 0, false); }
  static Pattern integer_power(unsigned n);
  static Pattern integer_power_plus(unsigned n);
  static Pattern fractional_power(std::uint64_t num, std::uint64_t den, bool strict = false);

  PatternKind kind() const { return kind_; }
  unsigned power() const { return power_; }
  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  bool strict() const { return strict_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern(PatternKind k, unsigned n, std::uint64_t num, std::uint64_t den, bool strict)
      : kind_(k), power_(n), num_(num), den_(den), strict_(strict) {}

  PatternKind kind_;
  unsigned power_;          // n for the integer-power kinds
  std::uint64_t num_, den_; // exponent threshold for FractionalPower
  bool strict_;
};

// True iff some suffix of the length-end_pos prefix of w belongs to the
// pattern; has_suffix_match checks the whole word (end_pos = |w|).
bool has_suffix_match_at(const Word& w, std::size_t end_pos, const Pattern& p);
bool has_suffix_match(const Word& w, const Pattern& p);

// True iff some factor of w belongs to the pattern.
bool has_factor_match(const Word& w, const Pattern& p);

// CLI syntax: square | overlap | power:n | power+:n | frac:num/den[:strict]
Pattern parse_pattern(std::string_view text);
std::string to_string(const Pattern& p);

}  // namespace lexleast
