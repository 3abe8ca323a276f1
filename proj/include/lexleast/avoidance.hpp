#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lexleast/patterns.hpp"
#include "lexleast/words.hpp"

namespace lexleast {

class Alphabet {
 public:
  static Alphabet all_naturals() { return Alphabet(false, 0); }
  static Alphabet finite_range(Letter max) { return Alphabet(true, max); }

  bool is_finite() const { return finite_; }
  Letter max() const { return max_; }

 private:
  Alphabet(bool finite, Letter max) : finite_(finite), max_(max) {}
  bool finite_;
  Letter max_;
};

// Greedy no-backtracking generator: each step appends the least letter whose
// addition completes no forbidden repetition, so the word stays pattern-free
// by construction. Letters are emitted incrementally; call step() as often
// as needed. Single-owner.
//
// Appending can only complete a repetition whose last letter recurs one
// period earlier, so over all naturals a letter not yet present always
// extends and step() never fails. Over a finite range step() throws
// NoExtensionError at a dead end, leaving the word unchanged.
class GreedyState {
 public:
  GreedyState(Pattern pattern, Alphabet alphabet);
  // Starts from a given pattern-free word instead of the empty one.
  GreedyState(Pattern pattern, Alphabet alphabet, const Word& start);
  ~GreedyState();
  GreedyState(GreedyState&&) noexcept;
  GreedyState& operator=(GreedyState&&) noexcept;

  Letter step();
  const Word& word() const;
  const Pattern& pattern() const { return pattern_; }

 private:
  struct Matcher;
  Pattern pattern_;
  Alphabet alphabet_;
  std::unique_ptr<Matcher> matcher_;
};

// Length-n prefix of the lexicographically least infinite pattern-free word
// over the naturals.
Word generate_lexleast(const Pattern& p, std::size_t n);

enum class BacktrackStatus { ReachedLength, NoInfiniteWord, BudgetExhausted };

struct BacktrackEvent {
  std::uint64_t step;   // loop iteration at which the event fired
  std::size_t removed;  // trailing maximal letters stripped
  Word word_after;
};

struct BacktrackStats {
  BacktrackStatus status = BacktrackStatus::ReachedLength;
  std::uint64_t steps = 0;       // extension/repair iterations
  std::uint64_t backtracks = 0;  // events that shortened the word
  std::size_t max_depth_retreat = 0;
  Word final_word;
  // Every intermediate word when record_trace is set, else empty.
  std::vector<BacktrackEvent> trace;
};

// Classic backtracking search over the finite alphabet {0..max_letter}: while
// the word is clean append 0; on a violation strip trailing max letters and
// bump the new last letter. Runs until the word is pattern-free at length n,
// the alphabet is exhausted at the root (NoInfiniteWord), or the step budget
// runs out (BudgetExhausted, inconclusive).
BacktrackStats generate_backtracking(const Pattern& p, Letter max_letter, std::size_t n,
                                     std::uint64_t step_budget, bool record_trace = false);

// True iff every smaller letter substituted at pos (1-based) yields a word
// with a pattern factor ending exactly at pos; also true when the word
// already has such a factor, and vacuously when w[pos] = 0.
bool is_irreducible_at(const Word& w, std::size_t pos, const Pattern& p);
bool is_irreducible(const Word& w, const Pattern& p);
bool is_irreducible_after_first(const Word& w, const Pattern& p);

}  // namespace lexleast
