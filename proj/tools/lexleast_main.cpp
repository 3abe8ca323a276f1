#include <cstdint>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexleast/avoidance.hpp"
#include "lexleast/errors.hpp"
#include "lexleast/morphisms.hpp"
#include "lexleast/overlapfree.hpp"
#include "lexleast/patterns.hpp"
#include "lexleast/ruler.hpp"
#include "lexleast/words.hpp"

namespace {

using namespace lexleast;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

// Decimal digits, or base^exponent in the same notation (e.g. 10^100).
Index parse_index(const std::string& text) {
  auto parse_plain = [](const std::string& s) {
    Index v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0 || v < 0)
      throw std::invalid_argument("bad number '" + s + "'");
    return v;
  };
  std::size_t caret = text.find('^');
  if (caret == std::string::npos) return parse_plain(text);
  Index base = parse_plain(text.substr(0, caret));
  Index exp = parse_plain(text.substr(caret + 1));
  if (exp > 1'000'000) throw std::invalid_argument("exponent too large");
  Index out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return out;
}

int cmd_generate(const std::string& pattern_text, std::uint64_t length,
                 const std::string& method, const std::string& out_format) {
  const Pattern pat = parse_pattern(pattern_text);

  auto morphism_route = [&]() -> Word {
    if (pat == Pattern::square()) return w2_prefix(length);
    if (pat == Pattern::overlap()) return w2plus_stream().take(length);
    throw std::invalid_argument("--method morphism only covers square and overlap");
  };

  Word w;
  if (method == "greedy") {
    w = generate_lexleast(pat, length);
  } else if (method == "morphism") {
    w = morphism_route();
  } else if (method == "both") {
    w = generate_lexleast(pat, length);
    if (w != morphism_route()) {
      std::cerr << "self-check failed: greedy and morphism routes disagree\n";
      return kExitVerify;
    }
  } else {
    throw std::invalid_argument("--method must be greedy, morphism or both");
  }

  if (out_format == "json") {
    nlohmann::json j{{"pattern", to_string(pat)},
                     {"length", w.size()},
                     {"letters", w.letters()}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_string(w) << '\n';
  }
  return kExitOk;
}

int cmd_eval(const std::string& word_name, const std::string& index_text) {
  const Index n = parse_index(index_text);
  Letter letter;
  if (word_name == "w2")
    letter = w2_letter(n);
  else if (word_name == "w2plus")
    letter = w2plus_letter(n);
  else
    throw std::invalid_argument("--word must be w2 or w2plus");
  std::cout << letter << '\n';
  return kExitOk;
}

int cmd_table(const std::string& which, unsigned kmax, const std::string& format) {
  TableKind kind;
  if (which == "a")
    kind = TableKind::Length;
  else if (which == "d")
    kind = TableKind::Count;
  else
    throw std::invalid_argument("--which must be a or d");
  std::cout << (format == "json" ? table_json(kind, kmax) + "\n" : table_csv(kind, kmax));
  return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned kmax, bool kmax_given,
               std::uint64_t length) {
  bool ok = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "pass " : "FAIL ") << name;
    if (!pass && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << '\n';
    ok = ok && pass;
  };

  if (suite == "symmetries") {
    const unsigned k = kmax_given ? kmax : 5;
    for (const auto& c : verify_symmetries(static_cast<Letter>(k)).checks)
      line(c.name, c.pass, c.detail);
  } else if (suite == "tables") {
    const unsigned k = kmax_given ? kmax : 30;
    bool closed = true, floors = true, sums = true, drec = true;
    for (Letter i = 0; i <= k; ++i) {
      if (a0_closed(i) != a(0, i)) closed = false;
      if (!certify_a0_floor(i)) floors = false;
      Index colsum(0);
      for (Letter h = 0; h <= i; ++h) colsum += d(h, i);
      if (colsum != a(0, i)) sums = false;
      for (Letter h = 0; h < i; ++h)
        if (d(h, i) != 2 * i * d(h, i - 1)) drec = false;
    }
    line("length-recurrence-vs-closed-form", closed);
    line("length-floor-certificate", floors);
    line("count-column-sums", sums);
    line("count-recurrence", drec);
  } else if (suite == "oracle") {
    const std::uint64_t n = length ? length : 10'000;
    {
      GreedyState greedy(Pattern::square(), Alphabet::all_naturals());
      PrefixStream stream = w2_stream();
      bool agree = true;
      for (std::uint64_t i = 1; i <= n && agree; ++i) {
        Letter g = greedy.step(), s = stream.next();
        agree = g == s && g == w2_letter(Index(static_cast<unsigned long>(i)));
      }
      line("squarefree-greedy-vs-stream-vs-valuation", agree);
    }
    {
      GreedyState greedy(Pattern::overlap(), Alphabet::all_naturals());
      PrefixStream stream = w2plus_stream();
      bool agree = true;
      for (std::uint64_t i = 1; i <= n && agree; ++i) {
        Letter g = greedy.step(), s = stream.next();
        agree = g == s && g == w2plus_letter(Index(static_cast<unsigned long>(i)));
      }
      line("overlapfree-greedy-vs-stream-vs-random-access", agree);
    }
  } else {
    throw std::invalid_argument("--suite must be symmetries, tables or oracle");
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_freq(unsigned letter, std::uint64_t length) {
  const FrequencyReport r = letter_frequency_report(letter, length);
  std::cout << "count      " << r.count.get_str() << '\n'
            << "expected   " << r.expected_digits << '\n'
            << "bounds     rotation=" << (r.bound_rotation_ok ? "ok" : "VIOLATED")
            << " first-occurrence=" << (r.bound_first_ok ? "ok" : "VIOLATED")
            << " factorial=" << (r.bound_factorial_ok ? "ok" : "VIOLATED") << '\n'
            << "bound_ok   " << (r.bound_ok ? "true" : "false") << '\n';
  return r.bound_ok ? kExitOk : kExitVerify;
}

int cmd_backtrack(const std::string& pattern_text, unsigned alphabet_max,
                  std::uint64_t length, std::uint64_t budget, bool trace) {
  const Pattern pat = parse_pattern(pattern_text);
  const BacktrackStats st = generate_backtracking(pat, alphabet_max, length, budget, trace);
  if (trace)
    for (const auto& e : st.trace) {
      std::cout << "step " << e.step;
      if (e.removed) std::cout << "  backtrack(-" << e.removed << ")";
      std::cout << "  " << to_string(e.word_after) << '\n';
    }
  const char* status = st.status == BacktrackStatus::ReachedLength ? "reached-length"
                       : st.status == BacktrackStatus::NoInfiniteWord
                           ? "no-infinite-word"
                           : "budget-exhausted";
  std::cout << "status            " << status << '\n'
            << "steps             " << st.steps << '\n'
            << "backtracks        " << st.backtracks << '\n'
            << "max_depth_retreat " << st.max_depth_retreat << '\n'
            << "final             " << to_string(st.final_word) << '\n';
  return st.status == BacktrackStatus::BudgetExhausted ? kExitBudget : kExitOk;
}

int cmd_explore(const std::string& pattern_text, std::uint64_t length) {
  const Pattern pat = parse_pattern(pattern_text);
  GreedyState s(pat, Alphabet::all_naturals());
  std::set<Letter> seen;
  std::uint64_t first_big = 0;
  Letter first_big_letter = 0;
  for (std::uint64_t i = 1; i <= length; ++i) {
    Letter c = s.step();
    seen.insert(c);
    if (c >= 3 && first_big == 0) {
      first_big = i;
      first_big_letter = c;
    }
  }
  std::cout << "pattern " << to_string(pat) << ", first " << length << " letters\n";
  std::cout << "letters seen {";
  bool first = true;
  for (Letter c : seen) {
    if (!first) std::cout << ',';
    std::cout << c;
    first = false;
  }
  std::cout << "}\n";
  if (first_big)
    std::cout << "first letter >= 3 is " << first_big_letter << " at position " << first_big
              << '\n';
  else
    std::cout << "no letter >= 3 within this range (says nothing beyond it)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lexicographically least squarefree and overlap-free words over the naturals"};
  app.require_subcommand(1);

  std::string pattern = "square", method = "greedy", out = "text";
  std::string word_name = "w2plus", index_text;
  std::string which = "a", format = "csv", suite = "symmetries";
  std::uint64_t length = 0, budget = 1'000'000;
  unsigned kmax = 5, letter = 0, alphabet_max = 2;
  bool trace = false;

  auto* gen = app.add_subcommand("generate", "prefix of the least pattern-free word");
  gen->add_option("--pattern", pattern, "square | overlap | power:n | power+:n | frac:a/b")
      ->required();
  gen->add_option("--length", length)->required();
  gen->add_option("--method", method, "greedy | morphism | both");
  gen->add_option("--out", out, "text | json");

  auto* ev = app.add_subcommand("eval", "random access into w2 or w2plus");
  ev->add_option("--word", word_name, "w2 | w2plus");
  ev->add_option("--index", index_text, "1-based position, decimal or base^exp")->required();

  auto* tab = app.add_subcommand("table", "length table a(h,k) or count table d(h,k)");
  tab->add_option("--which", which, "a | d");
  tab->add_option("--kmax", kmax);
  tab->add_option("--format", format, "csv | json");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "symmetries | tables | oracle");
  auto* ver_kmax = ver->add_option("--kmax", kmax);
  ver->add_option("--length", length, "prefix length for the oracle suite");

  auto* fr = app.add_subcommand("freq", "letter count vs expected frequency");
  fr->add_option("--letter", letter)->required();
  fr->add_option("--length", length)->required();

  auto* bt = app.add_subcommand("backtrack", "backtracking search over a finite alphabet");
  bt->add_option("--pattern", pattern);
  bt->add_option("--alphabet", alphabet_max, "largest letter of the alphabet {0..m}");
  bt->add_option("--length", length)->required();
  bt->add_option("--budget", budget);
  bt->add_flag("--trace", trace, "log every intermediate word");

  auto* ex = app.add_subcommand("explore", "letters appearing in a generated prefix");
  ex->add_option("--pattern", pattern);
  ex->add_option("--length", length)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(pattern, length, method, out);
    if (ev->parsed()) return cmd_eval(word_name, index_text);
    if (tab->parsed()) return cmd_table(which, kmax, format);
    if (ver->parsed()) return cmd_verify(suite, kmax, !ver_kmax->empty(), length);
    if (fr->parsed()) return cmd_freq(letter, length);
    if (bt->parsed()) return cmd_backtrack(pattern, alphabet_max, length, budget, trace);
    if (ex->parsed()) return cmd_explore(pattern, length);
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
