#include "palrich/richness.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace palrich {

bool is_rich(const Word& w) {
  return PalindromeIndex(w).distinct_palindromes() == w.size() + 1;
}

RichnessReport richness_report(const Word& w, bool with_ups) {
  PalindromeIndex idx(w);
  RichnessReport r;
  r.word = w;
  r.length = w.size();
  r.palindrome_count = idx.distinct_palindromes();
  r.defect = w.size() + 1 - r.palindrome_count;
  r.rich = r.defect == 0;
  if (with_ups) r.ups_per_prefix.emplace();
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (!idx.has_ups(i)) {
      r.defective_positions.push_back(i);
    } else if (with_ups) {
      r.ups_per_prefix->emplace_back(i, idx.longest_palindromic_suffix(i));
    }
  }
  return r;
}

Word palindromic_closure(const Word& w) {
  if (w.empty()) return w;
  const std::size_t lps = PalindromeIndex(w).longest_suffix_length(w.size());
  return w + reverse_word(w.substr(0, w.size() - lps));
}

Word iterated_palindromic_closure(const Word& directive) {
  Word w;
  for (Letter x : directive) w = palindromic_closure(w + x);
  return w;
}

namespace {

std::vector<std::size_t> occurrence_starts(const Word& w, const Word& u) {
  std::vector<std::size_t> occ;
  std::size_t pos = w.find(u);
  while (pos != Word::npos) {
    occ.push_back(pos);
    pos = w.find(u, pos + 1);
  }
  return occ;
}

}  // namespace

std::vector<CompleteReturn> complete_returns(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("complete_returns: empty factor");
  const auto occ = occurrence_starts(w, u);
  std::vector<CompleteReturn> out;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    out.push_back({u, w.substr(occ[k], occ[k + 1] + u.size() - occ[k])});
  }
  return out;
}

std::vector<Word> palindromic_factors_by_centers(const Word& w) {
  std::unordered_set<std::string> seen;
  const auto expand = [&](std::size_t lo, std::size_t hi) {
    // [lo, hi) is a palindrome or empty; grow symmetrically.
    while (lo > 0 && hi < w.size() && w[lo - 1] == w[hi]) {
      --lo;
      ++hi;
      seen.insert(w.substr(lo, hi - lo));
    }
  };
  for (std::size_t c = 0; c < w.size(); ++c) {
    seen.insert(w.substr(c, 1));
    expand(c, c + 1);
    expand(c, c);
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

bool is_rich_via_returns(const Word& w) {
  for (const Word& u : palindromic_factors_by_centers(w)) {
    for (const CompleteReturn& cr : complete_returns(w, u)) {
      if (!is_palindrome(cr.return_word)) return false;
    }
  }
  return true;
}

WeakRichnessVerdict is_weakly_rich(const Word& w) {
  for (Letter a : alphabet_of(w)) {
    for (const CompleteReturn& cr : complete_returns(w, Word(1, a))) {
      if (!is_palindrome(cr.return_word)) return {false, cr.return_word};
    }
  }
  return {true, std::nullopt};
}

std::vector<Oddity> oddities(const Word& w) {
  std::set<std::pair<Word, Word>> keys;
  std::vector<Oddity> out;
  for (const Word& u : palindromic_factors_by_centers(w)) {
    for (const CompleteReturn& cr : complete_returns(w, u)) {
      if (is_palindrome(cr.return_word)) continue;
      const Word rev = reverse_word(cr.return_word);
      const Word repr = std::min(cr.return_word, rev);
      if (!keys.insert({repr, u}).second) continue;
      std::size_t end = w.size() + 1;
      for (const Word& s : {cr.return_word, rev}) {
        const std::size_t pos = w.find(s);
        if (pos != Word::npos) end = std::min(end, pos + s.size());
      }
      out.push_back({repr, u, end});
    }
  }
  std::sort(out.begin(), out.end(), [](const Oddity& a, const Oddity& b) {
    return std::tie(a.end_position, a.representative, a.palindrome) <
           std::tie(b.end_position, b.representative, b.palindrome);
  });
  return out;
}

RichExtensions rich_extensions(const Word& w) {
  if (!is_rich(w)) throw std::invalid_argument("rich_extensions: input not rich");
  RichExtensions out;
  for (Letter x : alphabet_of(w)) {
    if (is_rich(w + x)) out.right.insert(x);
    if (is_rich(x + w)) out.left.insert(x);
  }
  return out;
}

std::optional<bool> rich_extension_fastpath(const Word& u, Letter x) {
  if (!is_rich(u)) throw std::invalid_argument("rich_extension_fastpath: input not rich");
  const Word ux = u + x;
  const std::size_t lps = PalindromeIndex(ux).longest_suffix_length(ux.size());
  if (2 * lps >= u.size()) return true;
  return std::nullopt;
}

}  // namespace palrich
