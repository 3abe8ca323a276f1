#include "lexleast/ruler.hpp"

#include <stdexcept>

namespace lexleast {

Morphism gamma() {
  return Morphism([](Letter i) { return Word{0, i + 1}; });
}

Morphism rho() {
  return Morphism([](Letter i) { return i == 0 ? Word{} : Word{i - 1}; });
}

Letter w2_letter(const Index& i) {
  if (i <= 0) throw std::domain_error("w2_letter: positions start at 1");
  return static_cast<Letter>(mpz_scan1(i.get_mpz_t(), 0));
}

Word w2_prefix(std::size_t n) {
  if (n == 0) return Word();
  return w2_stream().take(n);
}

PrefixStream w2_stream() { return fixed_point_stream(gamma(), 0); }

}  // namespace lexleast
