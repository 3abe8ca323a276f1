#include "lexleast/overlapfree.hpp"

#include <mpfr.h>

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "lexleast/errors.hpp"

namespace lexleast {

namespace {

std::mutex g_a0_mu;
std::vector<Index>& a0_cache() {
  static std::vector<Index> v{Index(1)};
  return v;
}

Index a0(unsigned k) {
  std::lock_guard<std::mutex> lock(g_a0_mu);
  auto& v = a0_cache();
  while (v.size() <= k) {
    const unsigned j = static_cast<unsigned>(v.size());
    v.push_back(2 * j * v[j - 1] + 1);
  }
  return v[k];
}

void require_ordered(Letter h, Letter k, const char* who) {
  if (h > k)
    throw std::invalid_argument(std::string(who) + ": need h <= k, got h = " +
                                std::to_string(h) + ", k = " + std::to_string(k));
}

// 2^k k! / h! as an exact integer: the product of 2i for i = h+1..k.
Index double_rising(Letter h, Letter k) {
  Index prod(1);
  for (Letter i = h + 1; i <= k; ++i) prod *= 2 * i;
  return prod;
}

// Shared core behind phi(): psi0[j] holds psi(0,j), grown level by level.
// The image of j is S^{-1}(psi(0,j))^2 . (j+1); expanding psi(0,j-1) through
// those images yields psi(0,j), so each level costs its own length.
struct PhiCore {
  Letter cap;
  std::mutex mu;
  std::vector<Word> psi0{Word{0}};

  explicit PhiCore(Letter max_letter) : cap(max_letter) {}

  static void append_image_of(Word& out, const Word& base, Letter c) {
    // rot = last letter of base to the front, twice, then c+1
    for (int rep = 0; rep < 2; ++rep) {
      out.push_back(base.back());
      for (std::size_t i = 0; i + 1 < base.size(); ++i) out.push_back(base[i]);
    }
    out.push_back(c + 1);
  }

  Word image(Letter h) {
    if (h > cap)
      throw BudgetExceededError("phi: image of letter " + std::to_string(h) +
                                " exceeds the cap of " + std::to_string(cap) +
                                " (it would have 2 a(0," + std::to_string(h) +
                                ") + 1 letters)");
    std::lock_guard<std::mutex> lock(mu);
    while (psi0.size() <= h) {
      const Letter j = static_cast<Letter>(psi0.size());
      const Word& prev = psi0[j - 1];
      Word next;
      std::size_t total = 0;
      for (Letter c : prev) total += 2 * psi0[c].size() + 1;
      next.reserve(total);
      for (Letter c : prev) append_image_of(next, psi0[c], c);
      psi0.push_back(std::move(next));
    }
    Word out;
    out.reserve(2 * psi0[h].size() + 1);
    append_image_of(out, psi0[h], h);
    return out;
  }
};

const Morphism& shared_phi() {
  static Morphism m = phi();
  return m;
}

}  // namespace

Index a(Letter h, Letter k) {
  require_ordered(h, k, "a");
  if (h == k) return Index(1);
  return 2 * (k - h) * a0(k - 1) + 1;
}

Index a0_closed(Letter k) {
  Index sum(0), term(1);
  sum += term;  // l = k
  for (Letter l = k; l-- > 0;) {
    term *= 2 * (l + 1);
    sum += term;
  }
  return sum;
}

Index d(Letter h, Letter k) {
  require_ordered(h, k, "d");
  return double_rising(h, k);
}

bool certify_a0_floor(Letter k) {
  const Index expected = a0(k);
  const Index factor = double_rising(0, k);  // 2^k k!
  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(mpz_sizeinbase(factor.get_mpz_t(), 2) + 80);
  mpfr_t one, lo, hi;
  mpfr_init2(one, prec);
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(lo, one, MPFR_RNDD);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_mul_z(lo, lo, factor.get_mpz_t(), MPFR_RNDD);
  mpfr_exp(hi, one, MPFR_RNDU);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  mpfr_mul_z(hi, hi, factor.get_mpz_t(), MPFR_RNDU);
  Index floor_lo, floor_hi;
  mpfr_get_z(floor_lo.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(floor_hi.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clears(one, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return floor_lo == expected && floor_hi == expected;
}

Morphism phi(Letter max_image_letter) {
  auto core = std::make_shared<PhiCore>(max_image_letter);
  return Morphism([core](Letter h) { return core->image(h); });
}

Word psi(Letter h, Letter k, std::size_t budget) {
  require_ordered(h, k, "psi");
  const Index len = a(h, k);
  if (len > static_cast<unsigned long>(budget))
    throw BudgetExceededError("psi(" + std::to_string(h) + "," + std::to_string(k) +
                              ") has " + len.get_str() + " letters, over the budget of " +
                              std::to_string(budget));
  return iterate(shared_phi(), k - h, h, budget);
}

Word psi_via_product(Letter h, Letter k, std::size_t budget) {
  require_ordered(h, k, "psi_via_product");
  if (h == k) return Word{k};
  const Index len = a(h, k);
  if (len > static_cast<unsigned long>(budget))
    throw BudgetExceededError("psi_via_product(" + std::to_string(h) + "," +
                              std::to_string(k) + ") has " + len.get_str() +
                              " letters, over the budget of " + std::to_string(budget));
  const Word base = psi(0, k - 1, budget);
  Word out;
  out.reserve(len.get_ui());
  for (Letter l = h; l < k; ++l) {
    const Word rot = rotate_right(base, a(l, k - 1));
    out.append(rot);
    out.append(rot);
  }
  out.push_back(k);
  return out;
}

Letter w2plus_letter(const Index& n, EvalStats* stats) {
  if (n < 1) throw std::domain_error("w2plus_letter: positions start at 1");
  std::uint64_t ops = 0;
  std::vector<Index> tab{Index(1)};
  unsigned k = 0;
  while (tab[k] < n) {
    ++k;
    tab.push_back(2 * k * tab[k - 1] + 1);
    ++ops;  // one multiplication per level
  }
  if (stats) stats->k_start = k;
  // Invariant: the answer is letter cur of psi(0,k).
  Index cur = n;
  for (;;) {
    if (cur == tab[k]) break;
    Index shift(0);
    if (k >= 2) {
      Index twice_len = 2 * tab[k - 1];
      Index block = (cur - 1) / twice_len;
      shift = 2 * block * tab[k - 2];
      ops += 3;  // the doubling, the division, the shift product
    }
    cur = (cur + shift - 1) % tab[k - 1] + 1;
    ++ops;  // the reduction
    --k;
  }
  if (stats) stats->big_ops = ops;
  return k;
}

PrefixStream w2plus_stream() { return fixed_point_stream(shared_phi(), 0); }

FrequencyReport letter_frequency_report(Letter k, std::size_t n) {
  if (n < 1) throw std::domain_error("letter_frequency_report: need n >= 1");
  PrefixStream s = w2plus_stream();
  unsigned long count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (s.next() == k) ++count;

  FrequencyReport r;
  r.count = Index(count);

  const Index denom_int = double_rising(0, k);  // 2^k k!
  mpfr_t x, denom;
  mpfr_init2(x, 256);
  mpfr_init2(denom, 256);
  mpfr_set_ui(x, 1, MPFR_RNDN);
  mpfr_exp(x, x, MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  mpfr_mul_z(denom, x, denom_int.get_mpz_t(), MPFR_RNDN);
  mpfr_ui_div(x, 1, denom, MPFR_RNDN);
  mpfr_mul_ui(x, x, static_cast<unsigned long>(n), MPFR_RNDN);
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.50Rg", x);
  r.expected_digits = buf;
  r.expected = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clears(x, denom, static_cast<mpfr_ptr>(nullptr));

  const Index ak = a0(k);
  const Index nn(static_cast<unsigned long>(n));
  Index ceil_n_ak, ceil_2n_ak;
  mpz_cdiv_q(ceil_n_ak.get_mpz_t(), nn.get_mpz_t(), ak.get_mpz_t());
  Index two_n = 2 * nn;
  mpz_cdiv_q(ceil_2n_ak.get_mpz_t(), two_n.get_mpz_t(), ak.get_mpz_t());
  r.bound_rotation_ok = r.count <= ceil_n_ak;
  r.bound_first_ok = r.count <= ceil_2n_ak;
  r.bound_factorial_ok = r.count * denom_int <= two_n;
  r.bound_ok = r.bound_rotation_ok && r.bound_first_ok && r.bound_factorial_ok;
  return r;
}

bool SymmetryReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Removes the last letter; identities below peel the final k off psi(0,k).
Word drop_last(const Word& w) { return prefix(w, w.size() - 1); }

}  // namespace

SymmetryReport verify_symmetries(Letter k_max) {
  SymmetryReport report;
  const Morphism& ph = shared_phi();
  const Morphism ph_r = reversed(ph);

  auto run = [&](const std::string& name, auto&& body) {
    SymmetryCheck c{name, true, ""};
    body(c);
    report.checks.push_back(std::move(c));
  };

  auto fail = [](SymmetryCheck& c, const std::string& detail) {
    if (c.pass) {
      c.pass = false;
      c.detail = detail;
    }
  };

  std::vector<Word> psi0(k_max + 1);
  for (Letter k = 0; k <= k_max; ++k) psi0[k] = psi(0, k);

  run("shift-reversal", [&](SymmetryCheck& c) {
    for (Letter k = 0; k <= k_max; ++k)
      if (rotate_right(psi0[k], std::size_t{1}) != reverse(psi0[k]))
        fail(c, "k = " + std::to_string(k));
  });

  run("reversal-complement", [&](SymmetryCheck& c) {
    for (Letter k = 0; k <= k_max; ++k)
      for (Letter h = 0; h <= k; ++h) {
        Word lhs = reverse(psi(k - h, k)) + psi(h, k);
        Word rhs = Word{k} + psi0[k];
        if (lhs != rhs) fail(c, "h = " + std::to_string(h) + ", k = " + std::to_string(k));
      }
  });

  run("palindrome-core", [&](SymmetryCheck& c) {
    for (Letter k = 0; k <= k_max; ++k)
      if (!is_palindrome(drop_last(psi0[k]))) fail(c, "k = " + std::to_string(k));
  });

  run("image-from-core", [&](SymmetryCheck& c) {
    for (Letter h = 0; h <= k_max; ++h) {
      const Word rot = rotate_right(psi0[h], std::size_t{1});
      const Word rev = reverse(psi0[h]);
      const Word want = ph.image(h);
      if (rot + rot + Letter(h + 1) != want || rev + rev + Letter(h + 1) != want)
        fail(c, "h = " + std::to_string(h));
    }
  });

  run("image-palindrome", [&](SymmetryCheck& c) {
    for (Letter h = 0; h <= k_max; ++h) {
      Word img = ph.image(h);
      if (!is_palindrome(drop_last(remove_prefix(Word{h}, img))))
        fail(c, "h = " + std::to_string(h));
    }
  });

  run("double-image-palindrome", [&](SymmetryCheck& c) {
    for (Letter h = 0; h <= k_max; ++h)
      if (!is_palindrome(apply(ph, reverse(ph.image(h)))))
        fail(c, "h = " + std::to_string(h));
  });

  run("reversed-commutation", [&](SymmetryCheck& c) {
    for (Letter h = 0; h <= k_max; ++h)
      if (apply(ph, ph_r.image(h)) != apply(ph_r, ph.image(h)))
        fail(c, "h = " + std::to_string(h));
  });

  run("translation-up", [&](SymmetryCheck& c) {
    for (Letter k = 0; k <= k_max; ++k)
      for (Letter h = 0; h <= k; ++h)
        for (Letter i = 0; k + i <= k_max; ++i) {
          Word lhs = psi(h, k + i);
          Word rhs = psi(h, k);
          for (Letter t = 0; t < i; ++t) rhs = apply(ph, rhs);
          if (lhs != rhs)
            fail(c, "h = " + std::to_string(h) + ", k = " + std::to_string(k) +
                        ", i = " + std::to_string(i));
        }
  });

  run("translation-diagonal", [&](SymmetryCheck& c) {
    for (Letter k = 0; k <= k_max; ++k)
      for (Letter h = 0; h <= k; ++h)
        for (Letter i = 0; k + i <= k_max; ++i) {
          Word lhs = psi(h + i, k + i);
          Word rhs = drop_last(psi(h, k));
          for (Letter t = 0; t < i; ++t) rhs = apply(ph_r, rhs);
          rhs.push_back(k + i);
          if (lhs != rhs)
            fail(c, "h = " + std::to_string(h) + ", k = " + std::to_string(k) +
                        ", i = " + std::to_string(i));
        }
  });

  run("product-factorization", [&](SymmetryCheck& c) {
    for (Letter k = 0; k <= k_max; ++k)
      for (Letter h = 0; h <= k; ++h)
        if (psi_via_product(h, k) != psi(h, k))
          fail(c, "h = " + std::to_string(h) + ", k = " + std::to_string(k));
  });

  return report;
}

std::string table_csv(TableKind which, Letter k_max) {
  std::ostringstream out;
  out << "h,k,value\n";
  for (Letter k = 0; k <= k_max; ++k)
    for (Letter h = 0; h <= k; ++h) {
      const Index v = which == TableKind::Length ? a(h, k) : d(h, k);
      out << h << ',' << k << ',' << v.get_str() << '\n';
    }
  return out.str();
}

std::string table_json(TableKind which, Letter k_max) {
  nlohmann::json rows = nlohmann::json::array();
  for (Letter k = 0; k <= k_max; ++k)
    for (Letter h = 0; h <= k; ++h) {
      const Index v = which == TableKind::Length ? a(h, k) : d(h, k);
      rows.push_back({{"h", h}, {"k", k}, {"value", v.get_str()}});
    }
  return rows.dump(2);
}

}  // namespace lexleast
