#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexleast/morphisms.hpp"
#include "lexleast/words.hpp"

namespace lexleast {

// The overlap-free side: the morphism phi with phi(h) starting with h and
// ending with h+1, the words psi(h,k) = phi^{k-h}(h) (the lexicographically
// least overlap-free word from h to k), their length table a(h,k) and letter
// count table d(h,k), random access into the fixed point phi^omega(0), letter
// frequencies, and the symmetry identities these words satisfy.

// Length of psi(h,k). a(0,0) = 1, a(h,k) = 2(k-h) a(0,k-1) + 1 for k >= 1.
// The diagonal sequence a(0,k) is OEIS A010844.
Index a(Letter h, Letter k);

// a(0,k) as the exact integer sum of 2^k k! / (2^l l!) over l = 0..k; must
// agree with the recurrence.
Index a0_closed(Letter k);

// Certified check that floor(2^k k! sqrt(e)) = a(0,k), evaluated with
// directed-rounding interval arithmetic at a precision that pins the floor.
bool certify_a0_floor(Letter k);

// Number of occurrences of h in psi(0,k): 2^{k-h} k!/h!.
Index d(Letter h, Letter k);

// The morphism itself. Images are computed on demand; letters above
// max_image_letter throw BudgetExceededError (the image of h has
// 2 a(0,h) + 1 letters, which explodes quickly).
Morphism phi(Letter max_image_letter = 8);

// psi(h,k) = phi^{k-h}(h); length a(h,k), checked against the budget first.
Word psi(Letter h, Letter k, std::size_t budget = kDefaultBudget);

// Same word assembled from doubled rotations of psi(0,k-1) followed by k;
// an independent construction that must agree with psi() exactly.
Word psi_via_product(Letter h, Letter k, std::size_t budget = kDefaultBudget);

struct EvalStats {
  std::uint64_t big_ops = 0;  // big-integer mul/div/mod operations performed
  unsigned k_start = 0;       // least k with a(0,k) >= n
};

// n-th letter (1-based) of the fixed point phi^omega(0), by descending the
// doubled-rotation block structure level by level; the work is polynomial in
// log n, never in n.
Letter w2plus_letter(const Index& n, EvalStats* stats = nullptr);

// Fresh stream over phi^omega(0).
PrefixStream w2plus_stream();

struct FrequencyReport {
  Index count;                 // occurrences of the letter in the n-prefix
  std::string expected_digits; // n / (2^k k! sqrt(e)) to 50 significant digits
  double expected;
  bool bound_rotation_ok;      // count <= ceil(n / a(0,k))
  bool bound_first_ok;         // count <= ceil(2n / a(0,k))
  bool bound_factorial_ok;     // count * 2^k k! <= 2n, exactly
  bool bound_ok;               // all of the above
};

FrequencyReport letter_frequency_report(Letter k, std::size_t n);

struct SymmetryCheck {
  std::string name;
  bool pass;
  std::string detail;  // first counterexample, empty when pass
};

struct SymmetryReport {
  std::vector<SymmetryCheck> checks;
  bool all_pass() const;
};

// Exercises every identity the psi words satisfy, for all valid h, k, i with
// k (and k+i) up to k_max: the shift/reversal identity, the reversal
// complement, the palindrome forms, the image factorizations, commutation of
// phi with its reversed morphism, the two translation identities, and the
// doubled-rotation product construction.
SymmetryReport verify_symmetries(Letter k_max);

enum class TableKind { Length, Count };

// h,k,value rows (CSV) / array of {h, k, value} objects with decimal string
// values (JSON) for 0 <= h <= k <= k_max.
std::string table_csv(TableKind which, Letter k_max);
std::string table_json(TableKind which, Letter k_max);

}  // namespace lexleast
