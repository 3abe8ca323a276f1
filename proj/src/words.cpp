#include "lexleast/words.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lexleast {

Letter Word::letter_at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size())
    throw std::out_of_range("Word::letter_at: position " + std::to_string(pos) +
                            " out of range 1.." + std::to_string(letters_.size()));
  return letters_[pos - 1];
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word operator+(const Word& x, const Word& y) {
  Word r = x;
  r.append(y);
  return r;
}

Word operator+(const Word& x, Letter c) {
  Word r = x;
  r.push_back(c);
  return r;
}

Word rotate_right(const Word& w, std::size_t m) {
  if (w.empty()) throw std::domain_error("rotate_right: undefined on the empty word");
  const std::size_t n = w.size();
  m %= n;
  if (m == 0) return w;
  std::vector<Letter> out;
  out.reserve(n);
  out.insert(out.end(), w.letters().end() - static_cast<std::ptrdiff_t>(m), w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().end() - static_cast<std::ptrdiff_t>(m));
  return Word(std::move(out));
}

Word rotate_right(const Word& w, const Index& m) {
  if (w.empty()) throw std::domain_error("rotate_right: undefined on the empty word");
  if (m < 0) throw std::domain_error("rotate_right: negative amount");
  Index r = m % Index(static_cast<unsigned long>(w.size()));
  return rotate_right(w, r.get_ui());
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out));
}

LexOrder lex_compare(const Word& x, const Word& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < y[i]) return LexOrder::Less;
    if (x[i] > y[i]) return LexOrder::Greater;
  }
  if (x.size() == y.size()) return LexOrder::Equal;
  return x.size() < y.size() ? LexOrder::XPrefixOfY : LexOrder::YPrefixOfX;
}

Index count_letter(const Word& w, Letter c) {
  unsigned long n = 0;
  for (Letter a : w)
    if (a == c) ++n;
  return Index(n);
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() &&
         std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() &&
         std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::optional<std::size_t> find_factor(const Word& f, const Word& w) {
  if (f.empty()) return 1;
  if (f.size() > w.size()) return std::nullopt;
  auto it = std::search(w.begin(), w.end(), f.begin(), f.end());
  if (it == w.end()) return std::nullopt;
  return static_cast<std::size_t>(it - w.begin()) + 1;
}

bool is_factor(const Word& f, const Word& w) { return find_factor(f, w).has_value(); }

Word prefix(const Word& w, std::size_t n) {
  if (n > w.size()) throw std::out_of_range("prefix: length exceeds word");
  return Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word suffix(const Word& w, std::size_t n) {
  if (n > w.size()) throw std::out_of_range("suffix: length exceeds word");
  return Word(std::vector<Letter>(w.end() - static_cast<std::ptrdiff_t>(n), w.end()));
}

Word remove_prefix(const Word& y, const Word& w) {
  if (!is_prefix(y, w)) throw std::invalid_argument("remove_prefix: not a prefix");
  return suffix(w, w.size() - y.size());
}

Word remove_suffix(const Word& w, const Word& y) {
  if (!is_suffix(y, w)) throw std::invalid_argument("remove_suffix: not a suffix");
  return prefix(w, w.size() - y.size());
}

bool is_palindrome(const Word& w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
    if (w[i] != w[j - 1]) return false;
  return true;
}

std::string to_string(const Word& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](Letter c) { return c <= 9; });
  std::string out;
  if (digits) {
    out.reserve(w.size());
    for (Letter c : w) out.push_back(static_cast<char>('0' + c));
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  if (text.empty()) return Word();
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      Letter v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("parse_word: bad letter '" + std::string(tok) + "'");
      letters.push_back(v);
      start = end + 1;
      if (end == text.size()) break;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("parse_word: bad digit");
      letters.push_back(static_cast<Letter>(ch - '0'));
    }
  }
  return Word(std::move(letters));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

}  // namespace lexleast
