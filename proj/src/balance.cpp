#include "palrich/balance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace palrich {

std::optional<BalanceWitness> balance_witness(const Word& w) {
  const std::string alpha = alphabet_of(w);
  for (std::size_t n = 1; n <= w.size(); ++n) {
    for (Letter a : alpha) {
      // Sliding count of a over all length-n windows.
      std::size_t cnt = 0;
      for (std::size_t k = 0; k < n; ++k) cnt += (w[k] == a);
      std::size_t lo = cnt, hi = cnt, lo_at = 0, hi_at = 0;
      for (std::size_t i = 1; i + n <= w.size(); ++i) {
        cnt += (w[i + n - 1] == a);
        cnt -= (w[i - 1] == a);
        if (cnt < lo) { lo = cnt; lo_at = i; }
        if (cnt > hi) { hi = cnt; hi_at = i; }
      }
      if (hi - lo > 1) {
        return BalanceWitness{n, a, w.substr(hi_at, n), w.substr(lo_at, n)};
      }
    }
  }
  return std::nullopt;
}

bool is_balanced(const Word& w) { return !balance_witness(w).has_value(); }

bool is_periodic_balanced(const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_periodic_balanced: empty period");
  const Word w = u + u + u;
  const std::string alpha = alphabet_of(u);
  for (std::size_t n = 1; n <= u.size(); ++n) {
    for (Letter a : alpha) {
      std::size_t cnt = 0;
      for (std::size_t k = 0; k < n; ++k) cnt += (w[k] == a);
      std::size_t lo = cnt, hi = cnt;
      for (std::size_t i = 1; i + n <= w.size(); ++i) {
        cnt += (w[i + n - 1] == a);
        cnt -= (w[i - 1] == a);
        lo = std::min(lo, cnt);
        hi = std::max(hi, cnt);
      }
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

GapProfile gap_profile(const Word& w, Letter a) {
  GapProfile out;
  out.letter = a;
  std::size_t prev = Word::npos;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != a) continue;
    if (prev != Word::npos) out.gaps.insert(i - prev);
    prev = i;
  }
  return out;
}

Word delete_letter(const Word& w, Letter a) {
  Word out;
  out.reserve(w.size());
  for (Letter c : w) {
    if (c != a) out.push_back(c);
  }
  return out;
}

Word fraenkel_word(int k) {
  if (k < 1 || k > 9) throw std::invalid_argument("fraenkel_word: k must be in 1..9");
  Word f = "1";
  for (int i = 2; i <= k; ++i) f = f + static_cast<Letter>('0' + i) + f;
  return f;
}

Word sigma_map(Letter a, const Word& w) {
  if (w.empty()) throw std::invalid_argument("sigma_map: empty input");
  if (w.find(a) != Word::npos) {
    throw std::invalid_argument("sigma_map: separator letter occurs in the word");
  }
  Word out(1, a);
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[i]);
    if (i + 1 < w.size()) out.append(w[i] == w[i + 1] ? 2 : 1, a);
  }
  return out;
}

Word sigma_period(Letter a, const Word& period) {
  if (period.empty()) throw std::invalid_argument("sigma_period: empty period");
  std::size_t total = period.size() + 1;  // leading separator + letters
  for (std::size_t i = 0; i < period.size(); ++i) {
    total += (period[i] == period[(i + 1) % period.size()]) ? 2 : 1;
  }
  total -= 1;  // one full period of the image
  Word big = sigma_map(a, period + period);
  big.resize(total);
  return big;
}

namespace {

std::string digit_alphabet(int k) {
  std::string alpha;
  for (int i = 1; i <= k; ++i) alpha.push_back(static_cast<Letter>('0' + i));
  return alpha;
}

}  // namespace

Word wr_family_period(const WRFamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Word {
        using T = std::decay_t<decltype(s)>;
        if (s.k < 3 || s.k > 9) throw std::invalid_argument("wr family: k must be in 3..9");
        const std::string alpha = digit_alphabet(s.k);
        Word w(1, static_cast<Letter>('0' + s.k));
        if constexpr (std::is_same_v<T, WRFamily1>) {
          if (s.n < 1) throw std::invalid_argument("wr family: n must be >= 1");
          for (int i = s.k - 1; i >= 2; --i) w = psi(static_cast<Letter>('0' + i), alpha)(w);
          const Morphism psi1 = psi('1', alpha);
          for (int r = 0; r < s.n; ++r) w = psi1(w);
          return primitive_root(w).root;
        } else {
          if (s.j < 1 || s.j > s.k - 2) {
            throw std::invalid_argument("wr family: j must be in 1..k-2");
          }
          for (int i = s.k - 1; i >= s.j + 2; --i) w = psi(static_cast<Letter>('0' + i), alpha)(w);
          const Morphism psij1 = psi(static_cast<Letter>('0' + (s.j + 1)), alpha);
          w = psij1(psij1(w));
          Word u = primitive_root(w).root;
          for (int i = s.j; i >= 1; --i) {
            u = primitive_root(sigma_period(static_cast<Letter>('0' + i), u)).root;
          }
          return u;
        }
      },
      spec);
}

InfiniteWordSpec wr_family_word(const WRFamilySpec& spec) {
  return Periodic{wr_family_period(spec)};
}

bool eq21_check(int j, const Word& tail, std::size_t n) {
  if (j < 1 || j > 7) throw std::invalid_argument("eq21_check: j must be in 1..7");
  if (tail.empty()) throw std::invalid_argument("eq21_check: empty tail");
  for (Letter c : tail) {
    if (c <= static_cast<Letter>('0' + j + 1)) {
      throw std::invalid_argument("eq21_check: tail must avoid letters up to j+1");
    }
  }
  const std::string alpha = digit_alphabet(9);
  const Morphism psij1 = psi(static_cast<Letter>('0' + (j + 1)), alpha);
  Word lhs = psij1(psij1(tail));
  for (int i = j; i >= 1; --i) lhs = sigma_map(static_cast<Letter>('0' + i), lhs);

  const Word f2 = fraenkel_word(j + 1) + fraenkel_word(j + 1);
  Word rhs;
  for (Letter x : tail) {
    rhs += f2;
    rhs.push_back(x);
    if (rhs.size() >= n) break;
  }
  if (lhs.size() < n || rhs.size() < n) {
    throw std::invalid_argument("eq21_check: tail too short for requested length");
  }
  return lhs.compare(0, n, rhs, 0, n) == 0;
}

namespace {

std::vector<std::map<Letter, Letter>> all_bijections(const std::string& from,
                                                     const std::string& to) {
  std::vector<std::map<Letter, Letter>> out;
  std::string perm = to;
  std::sort(perm.begin(), perm.end());
  do {
    std::map<Letter, Letter> m;
    for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = perm[i];
    out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Word apply_permutation(const Word& w, const std::map<Letter, Letter>& perm) {
  Word out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(perm.at(c));
  return out;
}

}  // namespace

std::optional<WRFamilyMatch> matches_wr_family(const Word& period) {
  if (period.empty()) throw std::invalid_argument("matches_wr_family: empty period");
  const Word root = primitive_root(period).root;
  const std::string alpha = alphabet_of(root);
  const int k = static_cast<int>(alpha.size());
  if (k < 3) return std::nullopt;
  if (k > 5) throw std::invalid_argument("matches_wr_family: alphabet too large");

  std::vector<WRFamilySpec> candidates;
  for (int n = 1;; ++n) {
    const WRFamily1 f{k, n};
    if (wr_family_period(f).size() > root.size()) break;
    candidates.emplace_back(f);
  }
  for (int j = 1; j <= k - 2; ++j) candidates.emplace_back(WRFamily2{k, j});

  const auto bijections = all_bijections(digit_alphabet(k), alpha);
  for (const WRFamilySpec& spec : candidates) {
    const Word fam = wr_family_period(spec);
    if (fam.size() != root.size()) continue;
    for (const auto& perm : bijections) {
      const Word mapped = apply_permutation(fam, perm);
      for (std::size_t s = 0; s < mapped.size(); ++s) {
        if (rotate_left(mapped, s) == root) return WRFamilyMatch{spec, perm, s};
      }
    }
  }
  return std::nullopt;
}

std::map<Letter, Fraction> letter_frequencies(const Word& u) {
  if (u.empty()) throw std::invalid_argument("letter_frequencies: empty period");
  const Word root = primitive_root(u).root;
  std::map<Letter, Fraction> out;
  const long long den = static_cast<long long>(root.size());
  for (Letter a : alphabet_of(root)) {
    const long long num = static_cast<long long>(letter_count(root, a));
    const long long g = std::gcd(num, den);
    out[a] = Fraction{num / g, den / g};
  }
  return out;
}

}  // namespace palrich
