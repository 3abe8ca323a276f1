#include "lexleast/patterns.hpp"

#include <charconv>
#include <stdexcept>

namespace lexleast {

namespace {

using u128 = unsigned __int128;

// Longest i such that w[m-t] == w[m-q-t] for all 0 <= t < i (1-based m),
// capped at cap. Scans from the suffix end, stopping at first mismatch.
std::size_t suffix_run(const Word& w, std::size_t m, std::size_t q, std::size_t cap) {
  const auto& a = w.letters();
  std::size_t i = 0;
  while (i < cap && a[m - 1 - i] == a[m - 1 - q - i]) ++i;
  return i;
}

}  // namespace

Pattern Pattern::integer_power(unsigned n) {
  if (n < 2) throw std::invalid_argument("integer_power: exponent must be >= 2");
  return Pattern(PatternKind::IntegerPower, n, 0, 0, false);
}

Pattern Pattern::integer_power_plus(unsigned n) {
  if (n < 2) throw std::invalid_argument("integer_power_plus: exponent must be >= 2");
  return Pattern(PatternKind::IntegerPowerPlus, n, 0, 0, false);
}

Pattern Pattern::fractional_power(std::uint64_t num, std::uint64_t den, bool strict) {
  if (den == 0 || num <= den)
    throw std::invalid_argument("fractional_power: exponent must be > 1");
  return Pattern(PatternKind::FractionalPower, 0, num, den, strict);
}

bool has_suffix_match_at(const Word& w, std::size_t end_pos, const Pattern& p) {
  const std::size_t m = end_pos;
  if (m > w.size()) throw std::out_of_range("has_suffix_match_at: end past word");
  if (m < 2) return false;

  switch (p.kind()) {
    case PatternKind::Square:
    case PatternKind::Overlap:
    case PatternKind::IntegerPower:
    case PatternKind::IntegerPowerPlus: {
      const std::size_t n = p.power();
      const bool plus =
          p.kind() == PatternKind::Overlap || p.kind() == PatternKind::IntegerPowerPlus;
      for (std::size_t q = 1;; ++q) {
        // the repetition needs (n-1)q pairs, plus one more for (n+)-powers
        const std::size_t need = (n - 1) * q + (plus ? 1 : 0);
        if (need > m - q) break;
        if (suffix_run(w, m, q, need) == need) return true;
      }
      return false;
    }
    case PatternKind::FractionalPower: {
      const u128 num = p.num(), den = p.den();
      for (std::size_t q = 1; q < m; ++q) {
        // even the full suffix (L = m) cannot reach the exponent: stop
        const u128 best = den * static_cast<u128>(m);
        const u128 goal = num * static_cast<u128>(q);
        if (p.strict() ? best <= goal : best < goal) break;
        const std::size_t r = suffix_run(w, m, q, m - q);
        if (r == 0) continue;
        const u128 got = den * static_cast<u128>(q + r);
        if (p.strict() ? got > goal : got >= goal) return true;
      }
      return false;
    }
  }
  return false;
}

bool has_suffix_match(const Word& w, const Pattern& p) {
  return has_suffix_match_at(w, w.size(), p);
}

bool has_factor_match(const Word& w, const Pattern& p) {
  for (std::size_t end = 2; end <= w.size(); ++end)
    if (has_suffix_match_at(w, end, p)) return true;
  return false;
}

Pattern parse_pattern(std::string_view text) {
  if (text == "square") return Pattern::square();
  if (text == "overlap") return Pattern::overlap();
  auto parse_uint = [](std::string_view s, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  if (text.starts_with("power+:")) {
    std::uint64_t n;
    if (!parse_uint(text.substr(7), n) || n < 2 || n > 1u << 20)
      throw std::invalid_argument("parse_pattern: bad power+ exponent");
    return Pattern::integer_power_plus(static_cast<unsigned>(n));
  }
  if (text.starts_with("power:")) {
    std::uint64_t n;
    if (!parse_uint(text.substr(6), n) || n < 2 || n > 1u << 20)
      throw std::invalid_argument("parse_pattern: bad power exponent");
    return Pattern::integer_power(static_cast<unsigned>(n));
  }
  if (text.starts_with("frac:")) {
    std::string_view rest = text.substr(5);
    bool strict = false;
    if (rest.ends_with(":strict")) {
      strict = true;
      rest = rest.substr(0, rest.size() - 7);
    }
    std::size_t slash = rest.find('/');
    if (slash == std::string_view::npos)
      throw std::invalid_argument("parse_pattern: frac wants num/den");
    std::uint64_t num, den;
    if (!parse_uint(rest.substr(0, slash), num) || !parse_uint(rest.substr(slash + 1), den))
      throw std::invalid_argument("parse_pattern: bad frac exponent");
    return Pattern::fractional_power(num, den, strict);
  }
  throw std::invalid_argument("parse_pattern: unknown pattern '" + std::string(text) + "'");
}

std::string to_string(const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Square: return "square";
    case PatternKind::Overlap: return "overlap";
    case PatternKind::IntegerPower: return "power:" + std::to_string(p.power());
    case PatternKind::IntegerPowerPlus: return "power+:" + std::to_string(p.power());
    case PatternKind::FractionalPower: {
      std::string s = "frac:" + std::to_string(p.num()) + "/" + std::to_string(p.den());
      if (p.strict()) s += ":strict";
      return s;
    }
  }
  return "?";
}

}  // namespace lexleast
