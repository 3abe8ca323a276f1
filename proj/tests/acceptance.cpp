// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "lexleast/avoidance.hpp"
#include "lexleast/morphisms.hpp"
#include "lexleast/overlapfree.hpp"
#include "lexleast/patterns.hpp"
#include "lexleast/ruler.hpp"
#include "lexleast/words.hpp"
#include "test_helpers.hpp"

using namespace lexleast;

namespace {

const char* kSquare32 = "01020103010201040102010301020105";
const char* kOverlap80 =
    "00100110010020010011001002100100200100110010020010012001001100100200100110010030";

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(int num, const std::string& what, bool ok, double elapsed) {
  std::printf("%s criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", num, what.c_str(),
              elapsed);
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool exact_prefixes(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool sq = to_string(generate_lexleast(Pattern::square(), 32)) == kSquare32;
  const bool ov = to_string(generate_lexleast(Pattern::overlap(), 80)) == kOverlap80;
  elapsed = seconds_since(t0);
  return sq && ov && elapsed < 1.0;
}

bool three_way_agreement(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  {
    GreedyState greedy(Pattern::overlap(), Alphabet::all_naturals());
    PrefixStream stream = w2plus_stream();
    for (unsigned long i = 1; i <= 1'000'000 && ok; ++i) {
      const Letter g = greedy.step();
      ok = g == stream.next() && g == w2plus_letter(Index(i));
    }
  }
  {
    GreedyState greedy(Pattern::square(), Alphabet::all_naturals());
    PrefixStream stream = w2_stream();
    for (unsigned long i = 1; i <= 1'000'000 && ok; ++i) {
      const Letter g = greedy.step();
      ok = g == stream.next() && g == w2_letter(Index(i));
    }
  }
  elapsed = seconds_since(t0);
  return ok && elapsed < 120.0;
}

bool table_regression(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  const long length_table[6][6] = {{1, 3, 13, 79, 633, 6331}, {0, 1, 7, 53, 475, 5065},
                                   {0, 0, 1, 27, 317, 3799},  {0, 0, 0, 1, 159, 2533},
                                   {0, 0, 0, 0, 1, 1267},     {0, 0, 0, 0, 0, 1}};
  const long count_table[6][6] = {{1, 2, 8, 48, 384, 3840}, {0, 1, 4, 24, 192, 1920},
                                  {0, 0, 1, 6, 48, 480},    {0, 0, 0, 1, 8, 80},
                                  {0, 0, 0, 0, 1, 10},      {0, 0, 0, 0, 0, 1}};
  bool ok = true;
  for (Letter k = 0; k <= 5; ++k)
    for (Letter h = 0; h <= k; ++h)
      ok = ok && a(h, k) == length_table[h][k] && d(h, k) == count_table[h][k];
  for (Letter k = 0; k <= 30; ++k)
    ok = ok && a0_closed(k) == a(0, k) && certify_a0_floor(k);
  elapsed = seconds_since(t0);
  return ok;
}

bool symmetry_suite(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  const SymmetryReport rep = verify_symmetries(5);
  for (const auto& c : rep.checks)
    if (!c.pass) std::printf("  symmetry failure: %s %s\n", c.name.c_str(), c.detail.c_str());
  elapsed = seconds_since(t0);
  return rep.all_pass();
}

bool preservation(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  const Morphism g = gamma();
  oracle::for_each_pattern_free(Pattern::square(), 2, 10, [&](const Word& w) {
    if (has_factor_match(apply(g, w), Pattern::square())) ok = false;
  });

  const Morphism ph = phi();
  const Morphism hopp = Morphism([](Letter h) { return Word{h, 0, h + 1}; });
  for (const Morphism* m : {&ph, &hopp})
    oracle::for_each_pattern_free(Pattern::overlap(), 2, 8, [&](const Word& w) {
      if (has_factor_match(apply(*m, w), Pattern::overlap())) ok = false;
    });

  elapsed = seconds_since(t0);
  return ok;
}

bool irreducibility(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  const std::pair<Pattern, Word> generated[] = {
      {Pattern::square(), generate_lexleast(Pattern::square(), 200)},
      {Pattern::overlap(), generate_lexleast(Pattern::overlap(), 200)}};
  for (const auto& [p, w] : generated) {
    ok = ok && !has_factor_match(w, p);
    ok = ok && is_irreducible(w, p);  // position checks cover every prefix
  }

  for (Letter k = 1; k <= 4 && ok; ++k)
    for (Letter h = 1; h <= k && ok; ++h) {
      const Word w = psi(h, k);
      ok = is_irreducible_after_first(w, Pattern::overlap()) &&
           !is_irreducible_at(w, 1, Pattern::overlap());
    }

  elapsed = seconds_since(t0);
  return ok;
}

bool random_access_speed(double& elapsed) {
  Index n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 100);
  const auto t0 = std::chrono::steady_clock::now();
  EvalStats stats;
  (void)w2plus_letter(n, &stats);
  elapsed = seconds_since(t0);
  const bool steps_ok = stats.big_ops <= 3ull * stats.k_start * stats.k_start;
  return elapsed < 1.0 && steps_ok;
}

bool frequencies(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  // letter 0 over the first 10^6 letters, against n / sqrt(e)
  {
    PrefixStream s = w2plus_stream();
    unsigned long zeros = 0;
    for (unsigned long i = 0; i < 1'000'000; ++i)
      if (s.next() == 0) ++zeros;
    const double expected = 1e6 / std::sqrt(std::exp(1.0));
    ok = std::fabs(static_cast<double>(zeros) - expected) <= 0.02 * expected;
  }

  // exact counts at the block boundaries a(0,K), K <= 6
  {
    PrefixStream s = w2plus_stream();
    unsigned long counts[8] = {0};
    unsigned long pos = 0;
    for (Letter K = 0; K <= 6; ++K) {
      const unsigned long stop = a(0, K).get_ui();
      for (; pos < stop; ++pos) ++counts[s.next()];
      for (Letter k = 0; k <= K; ++k) ok = ok && d(k, K) == counts[k];
    }
  }

  // both counting bounds along the whole 10^5 prefix
  {
    unsigned long a0k[8], fact2k[8];
    for (Letter k = 0; k <= 7; ++k) {
      a0k[k] = a(0, k).get_ui();
      fact2k[k] = d(0, k).get_ui();  // 2^k k!
    }
    PrefixStream s = w2plus_stream();
    unsigned long counts[8] = {0};
    for (unsigned long n = 1; n <= 100'000; ++n) {
      const Letter k = s.next();
      ++counts[k];
      const unsigned long ceil_rot = (n + a0k[k] - 1) / a0k[k];
      ok = ok && counts[k] <= ceil_rot && counts[k] * fact2k[k] <= 2 * n;
    }
  }

  elapsed = seconds_since(t0);
  return ok;
}

bool fractional_exploration(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  GreedyState s(Pattern::fractional_power(5, 2), Alphabet::all_naturals());
  bool ok = true;
  for (int i = 0; i < 1'000'000; ++i)
    if (s.step() > 2) ok = false;
  elapsed = seconds_since(t0);
  return ok;
}

bool backtracking_demo(double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  const BacktrackStats st = generate_backtracking(Pattern::square(), 2, 8, 10'000, true);
  bool reached_dead_end = false, continued = false, retreated = false;
  for (const auto& e : st.trace) {
    if (e.word_after == parse_word("0102010")) reached_dead_end = true;
    if (e.word_after == parse_word("0102012")) continued = true;
    if (e.removed > 0) retreated = true;
  }
  elapsed = seconds_since(t0);
  return reached_dead_end && retreated && continued && st.backtracks >= 1 &&
         to_string(st.final_word) == "01020120";
}

}  // namespace

int main() {
  double t = 0;
  bool ok;
  ok = exact_prefixes(t);
  criterion(1, "exact 32- and 80-letter prefixes", ok, t);
  ok = three_way_agreement(t);
  criterion(2, "greedy, fixed point and random access agree through 10^6", ok, t);
  ok = table_regression(t);
  criterion(3, "tables, closed form and floor certificate", ok, t);
  ok = symmetry_suite(t);
  criterion(4, "symmetry identities up to k = 5", ok, t);
  ok = preservation(t);
  criterion(5, "morphisms preserve avoidance on all short words", ok, t);
  ok = irreducibility(t);
  criterion(6, "generated prefixes irreducible; psi(h,k) reducible only at 1", ok, t);
  ok = random_access_speed(t);
  criterion(7, "random access at 10^100 in under a second", ok, t);
  ok = frequencies(t);
  criterion(8, "letter frequencies and counting bounds", ok, t);
  ok = fractional_exploration(t);
  criterion(9, "first 10^6 letters avoiding exponent 5/2 stay in {0,1,2}", ok, t);
  ok = backtracking_demo(t);
  criterion(10, "ternary backtracking walks 0102010 -> 0102012", ok, t);

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
