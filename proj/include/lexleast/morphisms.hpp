#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "lexleast/words.hpp"

namespace lexleast {

// Default cap on materialized word length (letters). Iterated images grow
// superexponentially; anything larger should go through a stream.
inline constexpr std::size_t kDefaultBudget = 100'000'000;

// A morphism on words over the natural numbers, given by a total image rule
// per letter. Images are memoized on first use; the cache is shared by
// copies and is safe to fill from several threads.
class Morphism {
 public:
  explicit Morphism(std::function<Word(Letter)> rule);

  const Word& image(Letter c) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

Morphism identity_morphism();

// Concatenation of letter images; checks the predicted output length against
// the budget before materializing.
Word apply(const Morphism& m, const Word& w, std::size_t budget = kDefaultBudget);

// apply(compose(g, h), w) == apply(g, apply(h, w))
Morphism compose(const Morphism& g, const Morphism& h);

// m^n(c); m^0(c) = c. Throws BudgetExceededError when an intermediate word
// would outgrow the budget.
Word iterate(const Morphism& m, unsigned n, Letter c, std::size_t budget = kDefaultBudget);

// Image of each letter reversed: R . m . R.
Morphism reversed(const Morphism& m);

// Lazily emits the letters of m^omega(c). The emitted prefix never changes:
// after n expansion rounds it equals m^n(c). Single-owner; not for sharing
// across threads.
class PrefixStream {
 public:
  PrefixStream(Morphism m, Letter seed);

  Letter next();
  // Next n letters from the current cursor.
  Word take(std::size_t n);
  // Number of letters emitted so far.
  std::size_t position() const { return emit_; }

 private:
  Morphism m_;
  Word buf_;
  std::size_t emit_ = 0;    // next letter to hand out
  std::size_t expand_ = 1;  // next buffered letter whose image extends buf_
};

// Requires m(c) = c x with x nonempty; throws NotProlongableError otherwise.
PrefixStream fixed_point_stream(const Morphism& m, Letter seed);

// Word-vs-infinite-stream comparison; consumes stream letters as needed.
// Never returns Equal or YPrefixOfX: a finite word that matches is a prefix.
LexOrder lex_compare(const Word& x, PrefixStream& y);

}  // namespace lexleast
