#pragma once

#include "lexleast/morphisms.hpp"
#include "lexleast/words.hpp"

namespace lexleast {

// The squarefree side: the morphism i -> 0 (i+1), its left inverse, and the
// ruler word it generates by iteration from 0 (OEIS A007814: the i-th letter
// is the 2-adic valuation of i).

// gamma(i) = 0 . (i+1)
Morphism gamma();

// rho(0) = eps, rho(i) = i-1; rho(gamma(w)) = w for every w.
Morphism rho();

// i-th letter of the ruler word, i >= 1: the exponent of the highest power
// of 2 dividing i. O(log i) via the trailing-zero count of i.
Letter w2_letter(const Index& i);

// Length-n prefix of the ruler word via the gamma fixed point.
Word w2_prefix(std::size_t n);

// Fresh stream over the ruler word.
PrefixStream w2_stream();

}  // namespace lexleast
