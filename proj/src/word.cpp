#include "palrich/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace palrich {

bool valid_letter(Letter a) {
  return std::isalnum(static_cast<unsigned char>(a)) != 0;
}

bool valid_word(const Word& w) {
  return std::all_of(w.begin(), w.end(), valid_letter);
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_palindrome(const Word& w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

std::vector<Word> conjugates(const Word& w, bool include_self) {
  if (w.empty()) throw std::invalid_argument("conjugates: empty input");
  std::vector<Word> out;
  out.reserve(w.size());
  if (include_self) out.push_back(w);
  for (std::size_t k = 1; k < w.size(); ++k) out.push_back(rotate_left(w, k));
  return out;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_primitive: empty input");
  return primitive_root(w).exponent == 1;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty input");
  // Smallest proper rotation coincidence divides |w| and gives the root.
  const Word ww = w + w;
  const std::size_t d = ww.find(w, 1);
  if (d == w.size()) return {w, 1};
  return {w.substr(0, d), w.size() / d};
}

std::set<Word> factor_set(const Word& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  if (n == 0) {
    out.insert(Word());
    return out;
  }
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

bool is_reversal_closed(const std::set<Word>& fs) {
  return std::all_of(fs.begin(), fs.end(),
                     [&](const Word& u) { return fs.count(reverse_word(u)) > 0; });
}

std::size_t letter_count(const Word& w, Letter a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

std::string alphabet_of(const Word& w) {
  std::set<Letter> s(w.begin(), w.end());
  return std::string(s.begin(), s.end());
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return w.substr(k) + w.substr(0, k);
}

Word rotate_right(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return rotate_left(w, w.size() - k);
}

}  // namespace palrich
