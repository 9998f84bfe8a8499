#include "palrich/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace palrich::oracle {

std::set<Word> naive_palindrome_set(const Word& w) {
  if (w.size() > 2000) throw std::invalid_argument("oracle: word too long");
  std::set<Word> out;
  out.insert(Word());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      Word u = w.substr(i, j - i);
      if (is_palindrome(u)) out.insert(std::move(u));
    }
  }
  return out;
}

std::size_t naive_defect(const Word& w) {
  return w.size() + 1 - naive_palindrome_set(w).size();
}

bool naive_rich(const Word& w) { return naive_defect(w) == 0; }

std::vector<Word> naive_complete_returns(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("oracle: empty factor");
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (w.compare(i, u.size(), u) == 0) occ.push_back(i);
  }
  std::vector<Word> out;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    out.push_back(w.substr(occ[k], occ[k + 1] + u.size() - occ[k]));
  }
  return out;
}

bool naive_balanced(const Word& w) {
  if (w.size() > 400) throw std::invalid_argument("oracle: word too long for balance");
  for (std::size_t n = 1; n <= w.size(); ++n) {
    for (Letter a : alphabet_of(w)) {
      std::size_t lo = w.size(), hi = 0;
      for (std::size_t i = 0; i + n <= w.size(); ++i) {
        std::size_t cnt = 0;
        for (std::size_t k = 0; k < n; ++k) cnt += (w[i + k] == a);
        lo = std::min(lo, cnt);
        hi = std::max(hi, cnt);
      }
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

std::vector<Word> enumerate_words(int alphabet_size, std::size_t length) {
  if (alphabet_size < 1 || alphabet_size > 26) {
    throw std::invalid_argument("oracle: bad alphabet size");
  }
  const double total = std::pow(alphabet_size, static_cast<double>(length));
  if (total > 1e7) throw std::invalid_argument("oracle: enumeration too large");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  const std::uint64_t n = static_cast<std::uint64_t>(total);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    out.push_back(word_from_index(idx, alphabet_size, length));
  }
  return out;
}

bool is_canonical(const Word& w) {
  Letter next = 'a';
  for (Letter c : w) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

Word word_from_index(std::uint64_t index, int alphabet_size, std::size_t length) {
  Word w(length, 'a');
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Letter>('a' + index % alphabet_size);
    index /= alphabet_size;
  }
  return w;
}

}  // namespace palrich::oracle
