#include "lexleast/avoidance.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lexleast/errors.hpp"

namespace lexleast {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMod = (u64{1} << 61) - 1;  // 2^61 - 1, prime
constexpr u64 kBase = 0x2d358dccaa6c78a5ULL % kMod;

u64 mod_fold(u128 t) {
  u64 r = static_cast<u64>(t & kMod) + static_cast<u64>(t >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}

u64 mod_mul(u64 a, u64 b) { return mod_fold(static_cast<u128>(a) * b); }

u64 mod_sub(u64 a, u64 b) { return a >= b ? a - b : a + kMod - b; }

// Common-suffix length (including position m itself) that a repetition of
// period q ending at m must reach for each pattern kind.
u128 required_run(const Pattern& p, u64 q) {
  switch (p.kind()) {
    case PatternKind::Square:
      return q;
    case PatternKind::Overlap:
      return static_cast<u128>(q) + 1;
    case PatternKind::IntegerPower:
      return static_cast<u128>(p.power() - 1) * q;
    case PatternKind::IntegerPowerPlus:
      return static_cast<u128>(p.power() - 1) * q + 1;
    case PatternKind::FractionalPower: {
      const u128 scaled = static_cast<u128>(q) * (p.num() - p.den());
      if (p.strict()) return scaled / p.den() + 1;
      return (scaled + p.den() - 1) / p.den();
    }
  }
  return 0;
}

// Least q whose required run reaches tau.
std::size_t min_period_for_run(const Pattern& p, std::size_t tau) {
  auto clamp = [](u128 v) {
    const u128 top = std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(v > top ? top : v);
  };
  const u128 t = tau;
  switch (p.kind()) {
    case PatternKind::Square:
      return tau;
    case PatternKind::Overlap:
      return tau <= 1 ? 1 : tau - 1;
    case PatternKind::IntegerPower:
      return clamp((t + p.power() - 2) / (p.power() - 1));
    case PatternKind::IntegerPowerPlus:
      return tau <= 1 ? 1 : clamp((t - 1 + p.power() - 2) / (p.power() - 1));
    case PatternKind::FractionalPower: {
      const u128 d = p.num() - p.den();
      const u128 den = p.den();
      if (tau <= 1) return 1;
      if (p.strict()) return std::max<std::size_t>(1, clamp((den * (t - 1) + d - 1) / d));
      return clamp(den * (t - 1) / d + 1);
    }
  }
  return 1;
}

constexpr std::size_t kGramLevels[] = {16, 128, 1024, 8192, 65536, 524288};

}  // namespace

// Incremental detector for "does appending c complete a repetition". Small
// periods are scanned directly. Larger periods are filtered through gram
// chains: for each level size tau, positions with an identical tau-gram are
// chained, and a period-q match forces the tau-gram ending at the new
// position to recur q earlier, so only chain hits need checking. A hit is
// screened with one O(1) prefix-hash comparison at the exact required run
// length and then confirmed letter-by-letter, so hash collisions cannot
// change the verdict.
struct GreedyState::Matcher {
  struct Level {
    std::size_t tau;
    std::size_t q_lo;  // periods whose required run first reaches tau
    std::unordered_map<u64, std::uint32_t> head;
    std::vector<std::uint32_t> prev{0};
  };

  Pattern pat;
  Word w;
  Letter max_seen = 0;
  std::vector<u64> hash{0};  // hash[i] = hash of first i letters
  std::vector<u64> pw{1};
  std::vector<Level> levels;
  std::size_t direct_max;

  explicit Matcher(const Pattern& p) : pat(p) {
    for (std::size_t tau : kGramLevels)
      levels.push_back(Level{tau, min_period_for_run(pat, tau), {}, {0}});
    direct_max = levels.front().q_lo == 0 ? 0 : levels.front().q_lo - 1;
  }

  u64 seg_hash(std::size_t l, std::size_t r) const {  // 1-based inclusive
    return mod_sub(hash[r], mod_mul(hash[l - 1], pw[r - l + 1]));
  }

  static u64 push_letter(u64 h, Letter c) {
    return mod_fold(static_cast<u128>(h) * kBase + (static_cast<u64>(c) + 1));
  }

  void append(Letter c) {
    w.push_back(c);
    const std::size_t L = w.size();
    hash.push_back(push_letter(hash.back(), c));
    pw.push_back(mod_mul(pw.back(), kBase));
    for (Level& lv : levels) {
      lv.prev.push_back(0);
      if (L >= lv.tau) {
        const u64 key = seg_hash(L - lv.tau + 1, L);
        auto [it, fresh] = lv.head.try_emplace(key, 0);
        lv.prev[L] = it->second;
        it->second = static_cast<std::uint32_t>(L);
      }
    }
    max_seen = std::max(max_seen, c);
  }

  // Letter pairs (m-i+1, p-i+1) for i = 2..run all equal, on the committed
  // word (pair i = 1 is (c, w[p]), checked by the caller).
  bool confirm(std::size_t p, std::size_t run) const {
    const auto& a = w.letters();
    const std::size_t m = w.size() + 1;
    for (std::size_t t = 0; t + 2 <= run; ++t)
      if (a[m - 2 - t] != a[p - 2 - t]) return false;
    return true;
  }

  bool check_direct(std::size_t q, Letter c) const {
    const std::size_t m = w.size() + 1;
    const std::size_t p = m - q;
    const u128 need = required_run(pat, q);
    if (need > p) return false;
    const auto& a = w.letters();
    if (a[p - 1] != c) return false;
    const std::size_t run = static_cast<std::size_t>(need);
    for (std::size_t t = 0; t + 2 <= run; ++t)
      if (a[m - 2 - t] != a[p - 2 - t]) return false;
    return true;
  }

  bool check_candidate(std::size_t p, std::size_t q, Letter c) const {
    const u128 need = required_run(pat, q);
    if (need > p) return false;
    if (w.letters()[p - 1] != c) return false;
    const std::size_t run = static_cast<std::size_t>(need);
    if (run >= 2) {
      const std::size_t m = w.size() + 1;
      if (seg_hash(m - run + 1, m - 1) != seg_hash(p - run + 1, p - 1)) return false;
      if (!confirm(p, run)) return false;
    }
    return true;
  }

  bool would_match(Letter c) const {
    const std::size_t L = w.size();
    const std::size_t m = L + 1;
    if (m < 2) return false;
    for (std::size_t q = 1, qhi = std::min(direct_max, L); q <= qhi; ++q)
      if (check_direct(q, c)) return true;
    for (std::size_t j = 0; j < levels.size(); ++j) {
      const Level& lv = levels[j];
      if (lv.tau > m) break;
      const std::size_t lo = lv.q_lo;
      std::size_t hi = j + 1 < levels.size() ? levels[j + 1].q_lo - 1
                                             : std::numeric_limits<std::size_t>::max();
      hi = std::min(hi, L);
      if (lo > hi) continue;
      u64 key = seg_hash(m - lv.tau + 1, m - 1);
      key = push_letter(key, c);
      auto it = lv.head.find(key);
      if (it == lv.head.end()) continue;
      for (std::uint32_t p = it->second; p; p = lv.prev[p]) {
        const std::size_t q = m - p;
        if (q > hi) break;
        if (q >= lo && check_candidate(p, q, c)) return true;
      }
    }
    return false;
  }
};

GreedyState::GreedyState(Pattern pattern, Alphabet alphabet)
    : pattern_(pattern), alphabet_(alphabet), matcher_(std::make_unique<Matcher>(pattern)) {}

GreedyState::GreedyState(Pattern pattern, Alphabet alphabet, const Word& start)
    : GreedyState(pattern, alphabet) {
  for (Letter c : start) matcher_->append(c);
}

GreedyState::~GreedyState() = default;
GreedyState::GreedyState(GreedyState&&) noexcept = default;
GreedyState& GreedyState::operator=(GreedyState&&) noexcept = default;

const Word& GreedyState::word() const { return matcher_->w; }

Letter GreedyState::step() {
  Matcher& m = *matcher_;
  const Letter limit =
      alphabet_.is_finite() ? alphabet_.max() : (m.w.empty() ? 0 : m.max_seen + 1);
  for (Letter c = 0;; ++c) {
    if (!m.would_match(c)) {
      m.append(c);
      return c;
    }
    if (c == limit) break;
  }
  if (alphabet_.is_finite())
    throw NoExtensionError("greedy: no letter in 0.." + std::to_string(alphabet_.max()) +
                           " extends the word at length " + std::to_string(m.w.size()));
  throw std::logic_error("greedy: a fresh letter completed a repetition");
}

Word generate_lexleast(const Pattern& p, std::size_t n) {
  GreedyState s(p, Alphabet::all_naturals());
  for (std::size_t i = 0; i < n; ++i) s.step();
  return s.word();
}

BacktrackStats generate_backtracking(const Pattern& p, Letter max_letter, std::size_t n,
                                     std::uint64_t step_budget, bool record_trace) {
  BacktrackStats st;
  Word w;
  auto log = [&](std::size_t removed) {
    if (record_trace) st.trace.push_back(BacktrackEvent{st.steps, removed, w});
  };
  for (;;) {
    if (st.steps >= step_budget) {
      st.status = BacktrackStatus::BudgetExhausted;
      break;
    }
    ++st.steps;
    if (has_suffix_match(w, p)) {
      std::size_t removed = 0;
      while (!w.empty() && w.back() == max_letter) {
        w.pop_back();
        ++removed;
      }
      if (w.empty()) {
        st.status = BacktrackStatus::NoInfiniteWord;
        break;
      }
      Letter last = w.back();
      w.pop_back();
      w.push_back(last + 1);
      if (removed > 0) {
        ++st.backtracks;
        st.max_depth_retreat = std::max(st.max_depth_retreat, removed);
      }
      log(removed);
    } else if (w.size() >= n) {
      st.status = BacktrackStatus::ReachedLength;
      break;
    } else {
      w.push_back(0);
      log(0);
    }
  }
  st.final_word = std::move(w);
  return st;
}

bool is_irreducible_at(const Word& w, std::size_t pos, const Pattern& p) {
  if (pos < 1 || pos > w.size())
    throw std::out_of_range("is_irreducible_at: position out of range");
  const Letter d = w.letter_at(pos);
  if (d == 0) return true;
  Word v = prefix(w, pos);
  if (has_suffix_match(v, p)) return true;
  for (Letter c = 0; c < d; ++c) {
    v.pop_back();
    v.push_back(c);
    if (!has_suffix_match(v, p)) return false;
  }
  return true;
}

bool is_irreducible(const Word& w, const Pattern& p) {
  for (std::size_t pos = 1; pos <= w.size(); ++pos)
    if (!is_irreducible_at(w, pos, p)) return false;
  return true;
}

bool is_irreducible_after_first(const Word& w, const Pattern& p) {
  for (std::size_t pos = 2; pos <= w.size(); ++pos)
    if (!is_irreducible_at(w, pos, p)) return false;
  return true;
}

}  // namespace lexleast
