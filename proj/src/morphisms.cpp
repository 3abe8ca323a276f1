#include "lexleast/morphisms.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "lexleast/errors.hpp"

namespace lexleast {

struct Morphism::State {
  std::function<Word(Letter)> rule;
  mutable std::mutex mu;
  mutable std::unordered_map<Letter, Word> memo;
};

Morphism::Morphism(std::function<Word(Letter)> rule) : state_(std::make_shared<State>()) {
  if (!rule) throw std::invalid_argument("Morphism: empty rule");
  state_->rule = std::move(rule);
}

const Word& Morphism::image(Letter c) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(c);
    if (it != state_->memo.end()) return it->second;
  }
  // Compute outside the lock: rules may recurse into image() of other
  // letters. Insertion is idempotent; a racing thread's value wins.
  Word img = state_->rule(c);
  std::lock_guard<std::mutex> lock(state_->mu);
  auto [it, inserted] = state_->memo.emplace(c, std::move(img));
  return it->second;
}

Morphism identity_morphism() {
  return Morphism([](Letter c) { return Word{c}; });
}

Word apply(const Morphism& m, const Word& w, std::size_t budget) {
  std::size_t total = 0;
  for (Letter c : w) {
    total += m.image(c).size();
    if (total > budget)
      throw BudgetExceededError("apply: image length exceeds budget of " +
                                std::to_string(budget) + " letters");
  }
  Word out;
  out.reserve(total);
  for (Letter c : w) out.append(m.image(c));
  return out;
}

Morphism compose(const Morphism& g, const Morphism& h) {
  return Morphism([g, h](Letter c) { return apply(g, h.image(c)); });
}

Word iterate(const Morphism& m, unsigned n, Letter c, std::size_t budget) {
  Word w{c};
  for (unsigned i = 0; i < n; ++i) w = apply(m, w, budget);
  return w;
}

Morphism reversed(const Morphism& m) {
  return Morphism([m](Letter c) { return reverse(m.image(c)); });
}

PrefixStream::PrefixStream(Morphism m, Letter seed) : m_(std::move(m)) {
  const Word& img = m_.image(seed);
  if (img.size() < 2 || img[0] != seed)
    throw NotProlongableError("fixed_point_stream: image of " + std::to_string(seed) +
                              " does not start with the seed followed by more letters");
  buf_ = img;
}

Letter PrefixStream::next() {
  while (emit_ == buf_.size()) {
    if (expand_ == buf_.size())
      throw std::logic_error("PrefixStream: morphism images died out");
    buf_.append(m_.image(buf_[expand_++]));
  }
  return buf_[emit_++];
}

Word PrefixStream::take(std::size_t n) {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

PrefixStream fixed_point_stream(const Morphism& m, Letter seed) {
  return PrefixStream(m, seed);
}

LexOrder lex_compare(const Word& x, PrefixStream& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    Letter b = y.next();
    if (x[i] < b) return LexOrder::Less;
    if (x[i] > b) return LexOrder::Greater;
  }
  return LexOrder::XPrefixOfY;
}

}  // namespace lexleast
